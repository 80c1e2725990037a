#include <doctest.h>

#include <algorithm>
#include <random>

#include "constacode/constacyclic.hpp"
#include "constacode/decomp.hpp"
#include "constacode/matprod.hpp"

using namespace constacode;

namespace {

// direct evaluation of the definition: flatten [c_1..c_alpha] . A column-major
std::vector<Codeword> oracle_product_codewords(const std::vector<GeneratorMatrix>& components,
                                               const MatrixOverField& a, uint64_t limit) {
    const Field& F = *a.field();
    const size_t n = components.front().length();
    const size_t beta = a.col_count();
    std::vector<std::vector<Codeword>> sets;
    sets.reserve(components.size());
    for (const GeneratorMatrix& c : components) sets.push_back(codeword_set(c, limit));
    std::vector<Codeword> out;
    std::vector<size_t> pick(components.size(), 0);
    while (true) {
        Codeword w(n * beta, 0);
        for (size_t t = 0; t < beta; ++t) {
            for (size_t i = 0; i < components.size(); ++i) {
                const uint64_t scale = a.code_at(i, t);
                for (size_t j = 0; j < n; ++j) {
                    w[j + t * n] = F.add(w[j + t * n], F.mul(scale, sets[i][pick[i]][j]));
                }
            }
        }
        out.push_back(std::move(w));
        size_t pos = pick.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++pick[pos] < sets[pos].size()) {
                done = false;
                break;
            }
            pick[pos] = 0;
            if (pos == 0) break;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("matprod");

TEST_CASE("matrix basics: transpose, inverse, rank") {
    auto f7 = Field::make(7);
    const MatrixOverField a(f7, 2, 2, {1, 2, 3, 4});
    const MatrixOverField inv = a.inverse();
    const MatrixOverField id = MatrixOverField::identity(f7, 2);
    // a * inv = id
    for (size_t r = 0; r < 2; ++r) {
        for (size_t c = 0; c < 2; ++c) {
            uint64_t acc = 0;
            for (size_t i = 0; i < 2; ++i) acc = f7->add(acc, f7->mul(a.code_at(r, i), inv.code_at(i, c)));
            CHECK(acc == id.code_at(r, c));
        }
    }
    CHECK(a.transposed().code_at(0, 1) == 3);
    CHECK(a.rank() == 2);
    CHECK(MatrixOverField(f7, 2, 2, {1, 2, 2, 4}).rank() == 1);
    CHECK_THROWS_AS(MatrixOverField(f7, 2, 2, {1, 2, 2, 4}).inverse(), std::invalid_argument);
}

TEST_CASE("matrix_product_code implements the (u|u+v) construction") {
    auto f2 = Field::make(2);
    const MatrixOverField a(f2, 2, 2, {1, 1, 0, 1});
    const GeneratorMatrix c1(f2, 2, {{1, 1}});
    const GeneratorMatrix c2(f2, 2, {{1, 0}, {0, 1}});
    const GeneratorMatrix prod = matrix_product_code({c1, c2}, a);
    CHECK(prod.length() == 4);
    CHECK(rank(prod) == 3);
    // codeword for c1=(1,1), c2=(1,0) is (1,1,0,1)
    const auto words = codeword_set(prod, 1 << 12);
    CHECK(std::find(words.begin(), words.end(), Codeword{1, 1, 0, 1}) != words.end());
    CHECK(words == oracle_product_codewords({c1, c2}, a, 1 << 12));
}

TEST_CASE("matrix_product_code edge cases") {
    auto f7 = Field::make(7);
    SUBCASE("zero components give the zero code") {
        const GeneratorMatrix zero(f7, 3);
        const MatrixOverField a(f7, 2, 2, {1, 1, 0, 1});
        CHECK(rank(matrix_product_code({zero, zero}, a)) == 0);
    }
    SUBCASE("alpha = beta = 1 with A = [1] returns the component") {
        const GeneratorMatrix c(f7, 3, {{1, 2, 3}});
        const MatrixOverField a(f7, 1, 1, {1});
        CHECK(codes_equal(matrix_product_code({c}, a), c));
    }
    SUBCASE("dimension mismatch is rejected") {
        const GeneratorMatrix c(f7, 3, {{1, 2, 3}});
        const MatrixOverField a(f7, 2, 2, {1, 1, 0, 1});
        CHECK_THROWS_AS(matrix_product_code({c}, a), std::invalid_argument);
    }
}

TEST_CASE("matrix-product dimension is the sum of component dimensions") {
    std::mt19937_64 rng(37);
    auto f3 = Field::make(3);
    for (int trial = 0; trial < 30; ++trial) {
        // random full-rank square A
        const size_t alpha = 2 + rng() % 2;
        MatrixOverField a(f3, alpha, alpha);
        do {
            for (size_t r = 0; r < alpha; ++r) {
                for (size_t c = 0; c < alpha; ++c) a.set_code(r, c, rng() % 3);
            }
        } while (a.rank() != alpha);
        std::vector<GeneratorMatrix> comps;
        size_t dim_sum = 0;
        for (size_t i = 0; i < alpha; ++i) {
            const size_t k = rng() % 3;
            std::vector<Codeword> rows(k, Codeword(4));
            for (auto& row : rows) {
                for (auto& v : row) v = rng() % 3;
            }
            GeneratorMatrix m(f3, 4, rows);
            dim_sum += rank(m);
            comps.push_back(std::move(m));
        }
        CHECK(rank(matrix_product_code(comps, a)) == dim_sum);
    }
}

TEST_CASE("is_nsc") {
    auto f7 = Field::make(7);
    auto f2 = Field::make(2);
    CHECK(is_nsc(expansion_matrix(f7, 1)));
    CHECK_FALSE(is_nsc(MatrixOverField::identity(f2, 2)));  // zero in the first row
    CHECK_FALSE(is_nsc(expansion_matrix(f2, 2)));           // rows 1-2, columns (1,3) are singular
    CHECK(is_nsc(MatrixOverField(f2, 1, 2, {1, 1})));
    CHECK_THROWS_AS(is_nsc(MatrixOverField(f2, 3, 2)), std::invalid_argument);
}

TEST_CASE("matrix_product_distance_bound") {
    auto f7 = Field::make(7);
    const MatrixOverField a = expansion_matrix(f7, 1);
    SUBCASE("all components of distance 1 except a zero tail gives 2") {
        const DistanceBound b = matrix_product_distance_bound({1, 1, 1, 1, 1, 1, 0}, a, true);
        CHECK(b.distance == 2);
        CHECK(b.exact);
    }
    SUBCASE("single live component in the top row gives 49") {
        const DistanceBound b = matrix_product_distance_bound({7, 0, 0, 0, 0, 0, 0}, a, true);
        CHECK(b.distance == 49);
        CHECK(b.exact);
    }
    SUBCASE("single component with A = [1]") {
        const MatrixOverField one(f7, 1, 1, {1});
        const DistanceBound b = matrix_product_distance_bound({5}, one, true);
        CHECK(b.distance == 5);
        CHECK(b.exact);
    }
    SUBCASE("all-zero components report the zero code") {
        const DistanceBound b = matrix_product_distance_bound({0, 0, 0, 0, 0, 0, 0}, a, true);
        CHECK(b.distance == 0);
        CHECK(b.exact);
    }
    SUBCASE("non-NSC matrices fall back to exact prefix distances") {
        auto f2 = Field::make(2);
        const MatrixOverField a4 = expansion_matrix(f2, 2);
        // prefix distances of [1111/1010/1100/1000] are 4, 2, 2, 1
        const DistanceBound b = matrix_product_distance_bound({1, 1, 1, 1}, a4, true);
        CHECK(b.distance == 1);
        CHECK_FALSE(b.exact);
        const DistanceBound b2 = matrix_product_distance_bound({1, 2, 0, 0}, a4, true);
        CHECK(b2.distance == 4);
        CHECK_FALSE(b2.exact);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(matrix_product_distance_bound({1, 1}, a, true), std::invalid_argument);
    }
}

TEST_CASE("nested NSC instances are exact against exhaustive enumeration") {
    auto f3 = Field::make(3);
    const MatrixOverField a = expansion_matrix(f3, 1);
    REQUIRE(is_nsc(a));
    const FieldElement lam0 = f3->element(2);
    // nested negacyclic components of length 2 over F3: x^2+1 is irreducible,
    // so the choices per level are full, <x^2+1> (zero) -- plus mixed towers
    const auto s = repeated_root_structure(f3, 2, lam0);
    const Polynomial f = s.base.factor(0);
    for (unsigned split = 0; split <= 3; ++split) {
        std::vector<GeneratorMatrix> comps;
        std::vector<uint64_t> dists;
        for (unsigned i = 0; i < 3; ++i) {
            const bool full = i < split;
            ConstacyclicCode c(lam0, 2, full ? Polynomial(f3, {1}) : f);
            comps.push_back(c.generator_matrix());
            dists.push_back(full ? 1 : 0);
        }
        const DistanceBound b = matrix_product_distance_bound(dists, a, true);
        const GeneratorMatrix prod = matrix_product_code(comps, a);
        if (rank(prod) == 0) {
            CHECK(b.distance == 0);
        } else {
            CHECK(min_distance(prod) == b.distance);
            CHECK(b.exact);
        }
    }
}

TEST_CASE("matrix-product dual identity") {
    auto f2 = Field::make(2);
    SUBCASE("alpha = 1 is dual(C) = dual(C)") {
        const MatrixOverField one(f2, 1, 1, {1});
        CHECK(matrix_product_dual_identity({GeneratorMatrix(f2, 3, {{1, 1, 0}})}, one));
    }
    SUBCASE("the (u|u+v) instance") {
        const MatrixOverField a(f2, 2, 2, {1, 1, 0, 1});
        const GeneratorMatrix c1(f2, 2, {{1, 1}});
        const GeneratorMatrix c2(f2, 2, {{1, 0}, {0, 1}});
        CHECK(matrix_product_dual_identity({c1, c2}, a));
    }
    SUBCASE("random nonsingular instances over F3 and F7") {
        std::mt19937_64 rng(41);
        for (auto field : {Field::make(3), Field::make(7)}) {
            for (int trial = 0; trial < 20; ++trial) {
                const size_t alpha = 2 + rng() % 2;
                MatrixOverField a(field, alpha, alpha);
                do {
                    for (size_t r = 0; r < alpha; ++r) {
                        for (size_t c = 0; c < alpha; ++c) a.set_code(r, c, rng() % field->order());
                    }
                } while (a.rank() != alpha);
                std::vector<GeneratorMatrix> comps;
                for (size_t i = 0; i < alpha; ++i) {
                    std::vector<Codeword> rows(rng() % 3, Codeword(4));
                    for (auto& row : rows) {
                        for (auto& v : row) v = rng() % field->order();
                    }
                    comps.emplace_back(field, 4, rows);
                }
                CHECK(matrix_product_dual_identity(comps, a));
            }
        }
    }
    SUBCASE("the length-56 components of one f1^2 f2 f3 f4 code") {
        auto f7 = Field::make(7);
        const auto s = repeated_root_structure(f7, 56, f7->element(6));
        // exponent 2 on x^2+x+6, 1 on the others
        std::vector<unsigned> exps(4, 1);
        for (size_t t = 0; t < 4; ++t) {
            if (s.base.factor(t) == Polynomial(f7, {6, 1, 1})) exps[t] = 2;
        }
        const auto gens = component_generators(s.base, exps, 7);
        std::vector<GeneratorMatrix> comps;
        for (size_t c = gens.size(); c-- > 0;) {
            comps.push_back(ConstacyclicCode(s.lambda0, 8, gens[c]).generator_matrix());
        }
        CHECK(matrix_product_dual_identity(comps, expansion_matrix(f7, 1)));
    }
    SUBCASE("rejects rectangular matrices") {
        const MatrixOverField a(f2, 1, 2, {1, 1});
        CHECK_THROWS_AS(matrix_product_dual_identity({GeneratorMatrix(f2, 2, {{1, 1}})}, a), std::invalid_argument);
    }
}

TEST_SUITE_END();
