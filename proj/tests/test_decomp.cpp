#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "constacode/decomp.hpp"

using namespace constacode;

namespace {

// independent binomial oracle for the expansion matrix entries
uint64_t binom_mod(uint64_t n, uint64_t k, uint64_t p) {
    if (k > n) return 0;
    // multiplicative formula with exact integer division, small inputs only
    unsigned __int128 num = 1, den = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return static_cast<uint64_t>((num / den) % p);
}

Codeword random_codeword(const GeneratorMatrix& m, std::mt19937_64& rng) {
    Codeword msg(m.row_count());
    for (auto& v : msg) v = rng() % m.field()->order();
    return encode(m, msg);
}

}  // namespace

TEST_SUITE_BEGIN("decomp");

TEST_CASE("expansion matrix instances") {
    SUBCASE("p=7, k=1 reproduces the 7x7 matrix") {
        auto f7 = Field::make(7);
        const MatrixOverField a = expansion_matrix(f7, 1);
        const std::vector<std::vector<uint64_t>> expect{
            {1, 1, 1, 1, 1, 1, 1}, {6, 5, 4, 3, 2, 1, 0}, {1, 3, 6, 3, 1, 0, 0}, {6, 3, 4, 1, 0, 0, 0},
            {1, 5, 1, 0, 0, 0, 0}, {6, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}};
        REQUIRE(a.row_count() == 7);
        for (size_t r = 0; r < 7; ++r) {
            for (size_t c = 0; c < 7; ++c) CHECK(a.code_at(r, c) == expect[r][c]);
        }
    }
    SUBCASE("p=2, k=1") {
        auto f2 = Field::make(2);
        const MatrixOverField a = expansion_matrix(f2, 1);
        CHECK(a.code_at(0, 0) == 1);
        CHECK(a.code_at(0, 1) == 1);
        CHECK(a.code_at(1, 0) == 1);
        CHECK(a.code_at(1, 1) == 0);
    }
    SUBCASE("p=2, k=2 against the binomial oracle") {
        auto f2 = Field::make(2);
        const MatrixOverField a = expansion_matrix(f2, 2);
        const std::vector<std::vector<uint64_t>> expect{
            {1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}};
        for (size_t r = 0; r < 4; ++r) {
            for (size_t c = 0; c < 4; ++c) CHECK(a.code_at(r, c) == expect[r][c]);
        }
    }
    SUBCASE("entries follow the signed binomial rule for several (p, k)") {
        for (auto [p, k] : {std::pair<uint64_t, unsigned>{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
            auto field = Field::make(p);
            const MatrixOverField a = expansion_matrix(field, k);
            const size_t size = a.row_count();
            for (size_t i = 0; i < size; ++i) {
                const size_t e = size - 1 - i;
                for (size_t j = 0; j < size; ++j) {
                    uint64_t v = j <= e ? binom_mod(e, j, p) : 0;
                    if (j <= e && (e - j) % 2 == 1) v = (p - v) % p;
                    CHECK(a.code_at(i, j) == v);
                }
            }
            CHECK(a.rank() == size);  // anti-diagonal of units
        }
    }
}

TEST_CASE("component generators") {
    auto f7 = Field::make(7);
    const auto s = repeated_root_structure(f7, 56, f7->element(6));
    // the conventional labels by value: f1 = x^2+x+6, f2 = x^2+6x+6, f3 = x^2+4x+6, f4 = x^2+3x+6
    const Polynomial f1(f7, {6, 1, 1}), f2(f7, {6, 6, 1}), f3(f7, {6, 4, 1}), f4(f7, {6, 3, 1});
    auto labeled_exponents = [&](unsigned j1, unsigned j2, unsigned j3, unsigned j4) {
        std::vector<unsigned> exps(4, 0);
        const std::vector<std::pair<Polynomial, unsigned>> labeled{{f1, j1}, {f2, j2}, {f3, j3}, {f4, j4}};
        for (size_t t = 0; t < 4; ++t) {
            for (const auto& [poly, j] : labeled) {
                if (s.base.factor(t) == poly) exps[t] = j;
            }
        }
        return exps;
    };

    SUBCASE("exponents (7,7,7,6): g_s is the full product up to s=5, then f1 f2 f3") {
        const auto gens = component_generators(s.base, labeled_exponents(7, 7, 7, 6), 7);
        REQUIRE(gens.size() == 7);
        for (size_t i = 0; i < 6; ++i) CHECK(gens[i] == f1 * f4 * f3 * f2);
        CHECK(gens[6] == make_monic(f1 * f2 * f3));
    }
    SUBCASE("all exponents zero: every component full") {
        const auto gens = component_generators(s.base, {0, 0, 0, 0}, 7);
        for (const Polynomial& g : gens) CHECK(g.is_one());
    }
    SUBCASE("all exponents one: g_0 is the whole product, the rest are 1") {
        const auto gens = component_generators(s.base, {1, 1, 1, 1}, 7);
        CHECK(gens[0] == Polynomial::xn_minus_c(f7, 8, 6));
        for (size_t i = 1; i < 7; ++i) CHECK(gens[i].is_one());
    }
    SUBCASE("divisibility chain g_{s+1} | g_s") {
        const auto gens = component_generators(s.base, labeled_exponents(7, 2, 5, 0), 7);
        for (size_t i = 0; i + 1 < gens.size(); ++i) CHECK(divides(gens[i + 1], gens[i]));
        CHECK(divides(gens[0], Polynomial::xn_minus_c(f7, 8, 6)));
    }
    SUBCASE("out-of-range exponent is rejected") {
        CHECK_THROWS_AS(component_generators(s.base, {8, 0, 0, 0}, 7), std::invalid_argument);
    }
}

TEST_CASE("decomposition monomial map") {
    SUBCASE("lambda0 = 1 gives a pure permutation") {
        auto f2 = Field::make(2);
        const MonomialMap map = decomposition_monomial_map(f2, 2, 3, f2->one());
        CHECK(map.is_permutation());
        for (uint64_t s : map.scalar_codes()) CHECK(s == 1);
    }
    SUBCASE("p=7, k=1, n=8: n' = 1 and sigma(j+8t) = j + 8((t-j) mod 7)") {
        auto f7 = Field::make(7);
        const MonomialMap map = decomposition_monomial_map(f7, 1, 8, f7->element(6));
        std::vector<bool> seen(56, false);
        for (size_t j = 0; j < 8; ++j) {
            for (uint64_t t = 0; t < 7; ++t) {
                const size_t idx = j + 8 * t;
                const size_t expect = j + 8 * ((t + 7 - (j % 7)) % 7);
                CHECK(map.sigma()[idx] == expect);
                CHECK_FALSE(seen[map.sigma()[idx]]);
                seen[map.sigma()[idx]] = true;
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
    SUBCASE("n = 1: sigma is the identity and scalars are lambda0^t") {
        auto f3 = Field::make(3);
        const MonomialMap map = decomposition_monomial_map(f3, 2, 1, f3->element(2));
        for (size_t t = 0; t < 9; ++t) {
            CHECK(map.sigma()[t] == t);
            CHECK(map.scalar_codes()[t] == f3->pow(2, static_cast<int64_t>(t)));
        }
    }
    SUBCASE("p | n is rejected") {
        auto f2 = Field::make(2);
        CHECK_THROWS_AS(decomposition_monomial_map(f2, 1, 4, f2->one()), std::invalid_argument);
    }
}

TEST_CASE("decompose: structure of the length-56 flagship codes") {
    auto f7 = Field::make(7);
    const FieldElement lam = f7->element(6);
    const auto s = repeated_root_structure(f7, 56, lam);
    SUBCASE("exponents (1,1,1,1)") {
        Polynomial g(f7, {1});
        for (size_t t = 0; t < 4; ++t) g = g * s.base.factor(t);
        const ConstacyclicCode code(lam, 56, g);
        CHECK(code.dimension() == 48);
        const DecompositionResult r = decompose(code);
        CHECK(r.lambda0.code() == 6);
        CHECK(r.n_prime == 1);
        REQUIRE(r.components.size() == 7);
        // components are stored largest first: C_6 ... C_0
        for (size_t i = 0; i < 6; ++i) CHECK(r.components[i].dimension() == 8);
        CHECK(r.components[6].dimension() == 0);
        size_t dim_sum = 0;
        for (const auto& c : r.components) dim_sum += c.dimension();
        CHECK(dim_sum == code.dimension());
        CHECK(verify_equivalence(code, r));
    }
    SUBCASE("full code decomposes into full components") {
        const ConstacyclicCode code(lam, 56, Polynomial(f7, {1}));
        const DecompositionResult r = decompose(code);
        for (const auto& c : r.components) CHECK(c.dimension() == 8);
        CHECK(verify_equivalence(code, r));
    }
}

TEST_CASE("decompose handles simple-root lengths as the k = 0 degenerate case") {
    auto f7 = Field::make(7);
    const FieldElement lam = f7->element(3);
    const ConstacyclicCode code(lam, 4, Polynomial(f7, {2, 2, 1}));  // x^2+2x+2 divides x^4-3
    const DecompositionResult r = decompose(code);
    CHECK(r.pk == 1);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].generator() == code.generator());
    CHECK(verify_equivalence(code, r, 10000));
}

TEST_CASE("equivalence holds for whole enumerated families, exhaustively") {
    struct Family {
        uint64_t p;
        size_t length;
        uint64_t lambda;
        size_t expected_count;
    };
    // x^12-1 over F2 has (4+1)^2 = 25 divisors, so 25 codes, not 15
    for (const Family fam : {Family{2, 6, 1, 9}, Family{3, 6, 2, 4}, Family{2, 12, 1, 25}}) {
        auto field = Field::make(fam.p);
        const FieldElement lam = field->element(fam.lambda);
        const auto codes = enumerate_codes(field, fam.length, lam);
        CHECK(codes.size() == fam.expected_count);
        for (const ConstacyclicCode& code : codes) {
            const DecompositionResult r = decompose(code);
            CHECK(verify_equivalence(code, r, 1 << 13));
            if (lam.is_one()) CHECK(r.map.is_permutation());
            // nesting as row-space containment, largest first
            for (size_t i = 0; i + 1 < r.components.size(); ++i) {
                const GeneratorMatrix big = rref(r.components[i].generator_matrix());
                const GeneratorMatrix small = r.components[i + 1].generator_matrix();
                for (const Codeword& row : small.rows()) {
                    CHECK(in_row_space(big, row));
                }
            }
        }
    }
}

TEST_CASE("equivalence holds across random small configurations, extension fields included") {
    std::mt19937_64 rng(77);
    struct Config {
        uint64_t p;
        unsigned m;
        size_t n;
        unsigned k;
    };
    const std::vector<Config> grid{
        {2, 1, 3, 2}, {2, 1, 5, 1}, {2, 1, 7, 1}, {2, 1, 1, 3}, {2, 2, 3, 1}, {2, 2, 5, 1},
        {2, 2, 1, 2}, {3, 1, 2, 2}, {3, 1, 4, 1}, {3, 2, 2, 1}, {3, 2, 4, 1}, {5, 1, 2, 1},
        {5, 1, 3, 1}, {5, 1, 6, 1}, {7, 1, 2, 1}, {3, 1, 8, 1},
    };
    for (const Config& cfg : grid) {
        auto field = Field::make(cfg.p, cfg.m);
        const uint64_t q = field->order();
        std::vector<uint64_t> lambdas;
        if (q <= 9) {
            for (uint64_t l = 1; l < q; ++l) lambdas.push_back(l);
        } else {
            for (int i = 0; i < 3; ++i) lambdas.push_back(1 + rng() % (q - 1));
        }
        uint64_t pk = 1;
        for (unsigned i = 0; i < cfg.k; ++i) pk *= cfg.p;
        const size_t length = cfg.n * static_cast<size_t>(pk);
        for (uint64_t lam : lambdas) {
            const FieldElement lambda = field->element(lam);
            const auto s = repeated_root_structure(field, length, lambda);
            CHECK(s.pk == pk);
            for (int rep = 0; rep < 3; ++rep) {
                Polynomial g(field, {1});
                for (size_t t = 0; t < s.base.factor_count(); ++t) {
                    g = g * pow(s.base.factor(t), static_cast<unsigned>(rng() % (s.pk + 1)));
                }
                const ConstacyclicCode code(lambda, length, g);
                const DecompositionResult r = decompose(code);
                CHECK(verify_equivalence(code, r, 1 << 13));
            }
        }
    }
}

TEST_CASE("decompose_codeword splits and reassembles") {
    std::mt19937_64 rng(43);
    SUBCASE("zero maps to zero parts") {
        auto f2 = Field::make(2);
        const ConstacyclicCode code(f2->one(), 6, Polynomial(f2, {1, 1}));
        const DecompositionResult r = decompose(code);
        const auto parts = decompose_codeword(Codeword(6, 0), r);
        for (const Codeword& part : parts) CHECK(hamming_weight(part) == 0);
    }
    SUBCASE("round trip on random codewords across several codes") {
        struct Pick {
            uint64_t p;
            size_t length;
            uint64_t lambda;
            std::vector<uint64_t> gen;
        };
        const std::vector<Pick> picks{
            {2, 6, 1, {1, 1}},            // <x+1> cyclic of length 6
            {2, 12, 1, {1, 1, 1, 1}},     // length 12, k = 2
            {3, 6, 2, {1, 0, 1}},         // negacyclic-like over F3
            {7, 56, 6, {6, 1, 1}},        // one quadratic at length 56
        };
        for (const Pick& pick : picks) {
            auto field = Field::make(pick.p);
            const ConstacyclicCode code(field->element(pick.lambda), pick.length,
                                        Polynomial(field, pick.gen));
            const DecompositionResult r = decompose(code);
            const GeneratorMatrix m = code.generator_matrix();
            const auto canon = rref(m);
            for (int trial = 0; trial < 1000; ++trial) {
                const Codeword word = random_codeword(m, rng);
                const auto parts = decompose_codeword(word, r);
                REQUIRE(parts.size() == r.components.size());
                for (size_t i = 0; i < parts.size(); ++i) {
                    CHECK(in_row_space(rref(r.components[i].generator_matrix()), parts[i]));
                }
                CHECK(reassemble_codeword(parts, r) == word);
            }
        }
    }
    SUBCASE("non-codewords are rejected") {
        auto f7 = Field::make(7);
        const ConstacyclicCode code(f7->element(6), 56, Polynomial(f7, {6, 1, 1}));
        const DecompositionResult r = decompose(code);
        Codeword w(56, 0);
        w[0] = 1;  // weight-1 words are never in a distance-2 code
        CHECK_THROWS_AS(decompose_codeword(w, r), std::invalid_argument);
    }
    SUBCASE("one-generator code of exponents (7,7,7,6): c_s = 0 below s = 6") {
        auto f7 = Field::make(7);
        const auto s = repeated_root_structure(f7, 56, f7->element(6));
        Polynomial g(f7, {1});
        const auto exps = std::vector<unsigned>{7, 7, 7, 6};  // over canonical order
        for (size_t t = 0; t < 4; ++t) g = g * pow(s.base.factor(t), exps[t]);
        const ConstacyclicCode code(f7->element(6), 56, g);
        CHECK(code.dimension() == 2);
        const DecompositionResult r = decompose(code);
        const GeneratorMatrix m = code.generator_matrix();
        const auto parts = decompose_codeword(m.row(0), r);
        // components are largest first, so parts[0] = c_6 and the rest are zero
        CHECK(hamming_weight(parts[0]) > 0);
        for (size_t i = 1; i < parts.size(); ++i) CHECK(hamming_weight(parts[i]) == 0);
    }
}

TEST_CASE("code_distance on the flagship examples") {
    auto f7 = Field::make(7);
    const FieldElement lam = f7->element(6);
    const auto s = repeated_root_structure(f7, 56, lam);
    auto code_for = [&](const std::vector<unsigned>& exps) {
        Polynomial g(f7, {1});
        for (size_t t = 0; t < 4; ++t) g = g * pow(s.base.factor(t), exps[t]);
        return ConstacyclicCode(lam, 56, g);
    };
    SUBCASE("(1,1,1,1) has distance 2, exact") {
        const DistanceBound b = code_distance(code_for({1, 1, 1, 1}));
        CHECK(b.distance == 2);
        CHECK(b.exact);
    }
    SUBCASE("(7,7,7,6) has distance 49, exact") {
        const DistanceBound b = code_distance(code_for({7, 7, 7, 6}));
        CHECK(b.distance == 49);
        CHECK(b.exact);
    }
    SUBCASE("the full code has distance 1") {
        const DistanceBound b = code_distance(code_for({0, 0, 0, 0}));
        CHECK(b.distance == 1);
        CHECK(b.exact);
    }
    SUBCASE("the zero code reports the 0 sentinel") {
        const DistanceBound b = code_distance(code_for({7, 7, 7, 7}));
        CHECK(b.distance == 0);
    }
}

TEST_SUITE_END();
