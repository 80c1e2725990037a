#include "constacode/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace constacode {

namespace {

uint64_t inverse_mod(uint64_t value, uint64_t modulus) {
    if (modulus == 1) return 0;
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(modulus), new_r = static_cast<int64_t>(value % modulus);
    while (new_r != 0) {
        const int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("value is not invertible modulo p^k");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(modulus) : t);
}

}  // namespace

MatrixOverField expansion_matrix(const FieldPtr& field, unsigned k) {
    const uint64_t p = field->characteristic();
    uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (pk > 4096 / p) throw std::invalid_argument("p^k is too large for a dense expansion matrix");
        pk *= p;
    }
    const size_t size = static_cast<size_t>(pk);
    // Pascal's triangle directly in GF(p)
    std::vector<std::vector<uint64_t>> binom(size);
    for (size_t e = 0; e < size; ++e) {
        binom[e].assign(e + 1, 1);
        for (size_t j = 1; j < e; ++j) binom[e][j] = (binom[e - 1][j - 1] + binom[e - 1][j]) % p;
    }
    MatrixOverField a(field, size, size);
    for (size_t i = 0; i < size; ++i) {
        const size_t e = size - 1 - i;  // row i holds (v-1)^e
        for (size_t j = 0; j <= e; ++j) {
            uint64_t v = binom[e][j];
            if ((e - j) % 2 == 1) v = (p - v) % p;
            a.set_code(i, j, v);  // prime-subfield values: digit 0 is the value itself
        }
    }
    return a;
}

std::vector<Polynomial> component_generators(const Factorization& base, const std::vector<unsigned>& exponents,
                                             uint64_t pk) {
    if (exponents.size() != base.factor_count()) {
        throw std::invalid_argument("one exponent per factor is required");
    }
    for (unsigned e : exponents) {
        if (e > pk) throw std::invalid_argument("exponent exceeds p^k");
    }
    const FieldPtr& field = base.unit().field();
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<size_t>(pk));
    for (uint64_t s = 0; s < pk; ++s) {
        Polynomial g(field, {1});
        for (size_t t = 0; t < exponents.size(); ++t) {
            if (exponents[t] > s) g = g * base.factor(t);
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

MonomialMap decomposition_monomial_map(const FieldPtr& field, unsigned k, size_t n, const FieldElement& lambda0) {
    const uint64_t p = field->characteristic();
    if (n == 0 || n % p == 0) throw std::invalid_argument("requires gcd(p, n) = 1");
    if (!field->compatible(*lambda0.field())) throw std::invalid_argument("field mismatch");
    uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    const uint64_t n_prime = pk == 1 ? 0 : inverse_mod(n, pk);
    const size_t length = static_cast<size_t>(pk) * n;
    std::vector<size_t> sigma(length);
    std::vector<uint64_t> scalars(length);
    for (size_t j = 0; j < n; ++j) {
        const uint64_t shift = pk == 1 ? 0 : (n_prime * j) % pk;
        for (uint64_t t = 0; t < pk; ++t) {
            const size_t idx = j + static_cast<size_t>(t) * n;
            // s = (t - j*n') mod p^k. The exponent must stay reduced into
            // [0, p^k): raw powers of x wrap around x^(p^k n) = lambda, and
            // each wrap contributes a lambda = lambda0^(p^k) factor that the
            // reduction absorbs. The unreduced integer exponent would be off
            // by exactly those wraps whenever ord(lambda0) does not divide
            // p^k; small-field exhaustive checks pin this down.
            const uint64_t src_t = (t + pk - shift) % pk;
            sigma[idx] = j + static_cast<size_t>(src_t) * n;
            scalars[idx] = field->pow(lambda0.code(), static_cast<int64_t>(src_t));
        }
    }
    return MonomialMap(field, std::move(sigma), std::move(scalars));
}

DecompositionResult decompose(const ConstacyclicCode& code, uint64_t seed) {
    const FieldPtr& field = code.field();
    RepeatedRootStructure s = repeated_root_structure(field, code.length(), code.lambda(), seed);
    std::vector<unsigned> exps = exponents_over(s.base, code.generator());

    std::vector<Polynomial> gens = component_generators(s.base, exps, s.pk);
    std::vector<ConstacyclicCode> components;
    components.reserve(gens.size());
    for (size_t i = gens.size(); i-- > 0;) components.emplace_back(s.lambda0, s.n, gens[i]);

    DecompositionResult result{
        s.lambda0,
        s.k,
        s.pk,
        s.n,
        s.pk == 1 ? 0 : inverse_mod(s.n, s.pk),
        expansion_matrix(field, s.k),
        decomposition_monomial_map(field, s.k, s.n, s.lambda0),
        std::move(components),
        std::move(exps),
        std::move(s.base),
    };

    // invariants promised to callers
    if (field->pow(result.lambda0.code(), static_cast<int64_t>(result.pk)) != code.lambda().code()) {
        throw std::logic_error("lambda0^(p^k) != lambda");
    }
    for (size_t i = 0; i + 1 < result.components.size(); ++i) {
        if (!divides(result.components[i].generator(), result.components[i + 1].generator())) {
            throw std::logic_error("component generators do not form a divisibility chain");
        }
    }
    size_t degree_sum = 0;
    for (const ConstacyclicCode& c : result.components) degree_sum += c.generator().degree();
    if (degree_sum != code.generator().degree()) {
        throw std::logic_error("component degrees do not add up to deg g");
    }
    return result;
}

std::vector<Codeword> decompose_codeword(const Codeword& word, const DecompositionResult& result) {
    const Field& F = *result.lambda0.field();
    const size_t n = result.n;
    const size_t pk = static_cast<size_t>(result.pk);
    if (word.size() != pk * n) throw std::invalid_argument("word length does not match the decomposition");

    // The monomial image of the word, reshaped as the n x p^k codeword
    // matrix W; the component columns are W * A^{-1}, with column p^k-1-s
    // holding c_s.
    const MatrixOverField a_inv = result.a.inverse();
    std::vector<std::vector<uint64_t>> w(n, std::vector<uint64_t>(pk));
    for (size_t j = 0; j < n; ++j) {
        for (size_t t = 0; t < pk; ++t) {
            const size_t idx = j + t * n;
            w[j][t] = F.mul(result.map.scalar_codes()[idx], word[result.map.sigma()[idx]]);
        }
    }
    std::vector<Codeword> parts(pk, Codeword(n, 0));
    for (size_t col = 0; col < pk; ++col) {
        for (size_t j = 0; j < n; ++j) {
            uint64_t acc = 0;
            for (size_t t = 0; t < pk; ++t) acc = F.add(acc, F.mul(w[j][t], a_inv.code_at(t, col)));
            parts[col][j] = acc;
        }
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        const GeneratorMatrix canon = rref(result.components[i].generator_matrix());
        if (!in_row_space(canon, parts[i])) {
            throw std::invalid_argument("word is not a codeword of the source code");
        }
    }
    return parts;
}

Codeword reassemble_codeword(const std::vector<Codeword>& parts, const DecompositionResult& result) {
    const Field& F = *result.lambda0.field();
    const size_t n = result.n;
    const size_t pk = static_cast<size_t>(result.pk);
    if (parts.size() != pk) throw std::invalid_argument("one part per component is required");
    for (const Codeword& part : parts) {
        if (part.size() != n) throw std::invalid_argument("component word length mismatch");
    }
    Codeword word(pk * n, 0);
    for (size_t j = 0; j < n; ++j) {
        for (size_t t = 0; t < pk; ++t) {
            uint64_t acc = 0;
            for (size_t i = 0; i < pk; ++i) acc = F.add(acc, F.mul(parts[i][j], result.a.code_at(i, t)));
            const size_t idx = j + t * n;
            word[result.map.sigma()[idx]] = F.mul(acc, F.inv(result.map.scalar_codes()[idx]));
        }
    }
    return word;
}

bool verify_equivalence(const ConstacyclicCode& code, const DecompositionResult& result,
                        uint64_t exhaustive_limit) {
    std::vector<GeneratorMatrix> component_matrices;
    component_matrices.reserve(result.components.size());
    for (const ConstacyclicCode& c : result.components) component_matrices.push_back(c.generator_matrix());
    const GeneratorMatrix image = apply_monomial(code.generator_matrix(), result.map);
    const GeneratorMatrix product = matrix_product_code(component_matrices, result.a);
    if (!codes_equal(image, product)) return false;
    if (exhaustive_limit > 0) {
        const uint64_t q = code.field()->order();
        unsigned __int128 size = 1;
        bool small = true;
        for (size_t i = 0; i < code.dimension(); ++i) {
            size *= q;
            if (size > exhaustive_limit) {
                small = false;
                break;
            }
        }
        if (small) {
            std::vector<Codeword> source = codeword_set(code.generator_matrix(), exhaustive_limit);
            for (Codeword& wrd : source) wrd = result.map.apply(wrd);
            std::sort(source.begin(), source.end());
            std::vector<Codeword> target = codeword_set(product, exhaustive_limit);
            if (source != target) return false;
        }
    }
    return true;
}

DistanceBound code_distance(const DecompositionResult& result, uint64_t budget) {
    std::vector<uint64_t> distances;
    distances.reserve(result.components.size());
    for (const ConstacyclicCode& c : result.components) {
        auto d = min_distance(c.generator_matrix(), budget);
        if (!d) throw BudgetExceeded("component distance enumeration exceeded the budget");
        distances.push_back(*d);
    }
    return matrix_product_distance_bound(distances, result.a, /*nested=*/true, budget);
}

DistanceBound code_distance(const ConstacyclicCode& code, uint64_t budget) {
    return code_distance(decompose(code), budget);
}

}  // namespace constacode
