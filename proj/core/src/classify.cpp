#include "constacode/classify.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <json.hpp>

#include "constacode/json_io.hpp"

namespace constacode {

namespace {

std::string join_unsigned(const std::vector<unsigned>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_digits(const std::vector<uint64_t>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

ClassificationReport classify(const FieldPtr& field, size_t n, unsigned k, const FieldElement& lambda,
                              uint64_t budget, unsigned jobs, uint64_t seed) {
    const FieldElement lambda0 = field->element(field->pk_root(lambda.code(), k));
    Factorization base = factor_constacyclic_modulus(n, lambda0, seed);
    const size_t r = base.factor_count();
    if (r > 24) throw std::invalid_argument("too many irreducible factors to classify");
    uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= field->characteristic();

    MatrixOverField a = expansion_matrix(field, k);
    const bool nsc = is_nsc(a);
    const size_t beta = a.col_count();

    // delta_i of the distance bound, one per row prefix of A
    std::vector<uint64_t> delta(pk + 1, 0);
    for (size_t i = 1; i <= pk; ++i) {
        if (nsc) {
            delta[i] = beta - i + 1;
        } else {
            std::vector<Codeword> prefix(i);
            for (size_t row = 0; row < i; ++row) {
                prefix[row].resize(beta);
                for (size_t c = 0; c < beta; ++c) prefix[row][c] = a.code_at(row, c);
            }
            auto d = min_distance(GeneratorMatrix(field, beta, std::move(prefix)), budget);
            if (!d) throw BudgetExceeded("row-prefix distance enumeration exceeded the budget");
            delta[i] = *d;
        }
    }

    // distances of the 2^r squarefree divisors of x^n - lambda0; these are
    // the only possible component codes
    std::vector<uint64_t> subset_distances(size_t{1} << r, 0);
    for (size_t mask = 0; mask < subset_distances.size(); ++mask) {
        Polynomial g(field, {1});
        for (size_t t = 0; t < r; ++t) {
            if (mask & (size_t{1} << t)) g = g * base.factor(t);
        }
        ConstacyclicCode component(lambda0, n, std::move(g));
        auto d = min_distance(component.generator_matrix(), budget);
        if (!d) throw BudgetExceeded("component distance enumeration exceeded the budget");
        subset_distances[mask] = *d;
    }

    // one row per exponent vector; row index in base (pk + 1), first factor
    // most significant, is exactly the lexicographic order
    uint64_t total = 1;
    for (size_t t = 0; t < r; ++t) {
        if (total > 20'000'000 / (pk + 1)) throw std::invalid_argument("classification too large");
        total *= pk + 1;
    }
    std::vector<size_t> factor_degrees(r);
    for (size_t t = 0; t < r; ++t) factor_degrees[t] = base.factor(t).degree();
    const size_t length = static_cast<size_t>(pk) * n;

    std::vector<ClassificationRow> rows(total);
    auto fill_range = [&](uint64_t begin, uint64_t end) {
        std::vector<unsigned> exps(r);
        for (uint64_t index = begin; index < end; ++index) {
            uint64_t rest = index;
            for (size_t t = r; t-- > 0;) {
                exps[t] = static_cast<unsigned>(rest % (pk + 1));
                rest /= pk + 1;
            }
            size_t degree = 0;
            for (size_t t = 0; t < r; ++t) degree += exps[t] * factor_degrees[t];
            uint64_t best = UINT64_MAX;
            for (uint64_t s = 0; s < pk; ++s) {
                size_t mask = 0;
                for (size_t t = 0; t < r; ++t) {
                    if (exps[t] > s) mask |= size_t{1} << t;
                }
                const uint64_t d = subset_distances[mask];
                if (d == 0) continue;  // zero component, excluded from the min
                best = std::min(best, d * delta[pk - s]);
            }
            const bool zero_code = (best == UINT64_MAX);
            rows[index] = ClassificationRow{exps, length - degree, zero_code ? 0 : best, zero_code ? true : nsc};
        }
    };
    if (jobs <= 1 || total < 2) {
        fill_range(0, total);
    } else {
        const unsigned workers = std::min<uint64_t>(jobs, total);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const uint64_t begin = w * chunk;
            const uint64_t end = std::min<uint64_t>(begin + chunk, total);
            if (begin >= end) break;
            pool.emplace_back(fill_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::map<uint64_t, uint64_t> by_d;
    std::map<std::pair<uint64_t, size_t>, uint64_t> by_dk;
    for (const ClassificationRow& row : rows) {
        ++by_d[row.distance];
        ++by_dk[{row.distance, row.dimension}];
    }

    ClassificationReport report{field,
                                n,
                                k,
                                pk,
                                length,
                                lambda,
                                lambda0,
                                std::move(base),
                                std::move(a),
                                nsc,
                                std::move(subset_distances),
                                std::move(rows),
                                {},
                                {}};
    report.by_distance.assign(by_d.begin(), by_d.end());
    for (const auto& [key, count] : by_dk) report.by_distance_dim.emplace_back(key.first, key.second, count);
    return report;
}

std::string render_classification_tsv(const ClassificationReport& report) {
    std::string out;
    out += "# constacode classify schema=1\n";
    out += "# field p=" + std::to_string(report.field->characteristic()) +
           " m=" + std::to_string(report.field->extension_degree()) +
           " modulus=" + join_digits(report.field->modulus()) + "\n";
    out += "# lambda=" + join_digits(report.lambda.digits()) +
           " lambda0=" + join_digits(report.lambda0.digits()) + " n=" + std::to_string(report.n) +
           " k=" + std::to_string(report.k) + " N=" + std::to_string(report.length) + "\n";
    for (size_t t = 0; t < report.base_factors.factor_count(); ++t) {
        out += "# factor " + std::to_string(t) + ": " + report.base_factors.factor(t).to_string() +
               " multiplicity=" + std::to_string(report.pk) + "\n";
    }
    out += "# nsc=" + std::string(report.nsc ? "1" : "0") + "\n";
    out += "exponents\tdim\td\texact\n";
    for (const ClassificationRow& row : report.rows) {
        out += join_unsigned(row.exponents) + "\t" + std::to_string(row.dimension) + "\t" +
               std::to_string(row.distance) + "\t" + (row.exact ? "1" : "0") + "\n";
    }
    out += "\n# by_distance\nd\tN_d\n";
    for (const auto& [d, count] : report.by_distance) {
        out += std::to_string(d) + "\t" + std::to_string(count) + "\n";
    }
    out += "\n# by_distance_dim\nd\tk_d\tcount\n";
    for (const auto& [d, dim, count] : report.by_distance_dim) {
        out += std::to_string(d) + "\t" + std::to_string(dim) + "\t" + std::to_string(count) + "\n";
    }
    return out;
}

std::string render_classification_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["field"] = field_to_json(*report.field);
    j["lambda"] = element_to_json(report.lambda);
    j["lambda0"] = element_to_json(report.lambda0);
    j["n"] = report.n;
    j["k"] = report.k;
    j["N"] = report.length;
    j["factors"] = factorization_to_json(report.base_factors);
    j["pk_multiplicity"] = report.pk;
    j["nsc"] = report.nsc;
    nlohmann::json rows = nlohmann::json::array();
    for (const ClassificationRow& row : report.rows) {
        rows.push_back({{"exponents", row.exponents},
                        {"dim", row.dimension},
                        {"d", row.distance},
                        {"exact", row.exact}});
    }
    j["rows"] = std::move(rows);
    nlohmann::json by_d = nlohmann::json::array();
    for (const auto& [d, count] : report.by_distance) by_d.push_back({{"d", d}, {"count", count}});
    j["by_distance"] = std::move(by_d);
    nlohmann::json by_dk = nlohmann::json::array();
    for (const auto& [d, dim, count] : report.by_distance_dim) {
        by_dk.push_back({{"d", d}, {"dim", dim}, {"count", count}});
    }
    j["by_distance_dim"] = std::move(by_dk);
    return j.dump(2) + "\n";
}

}  // namespace constacode
