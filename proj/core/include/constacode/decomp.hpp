#pragma once

#include <cstdint>
#include <vector>

#include "constacode/constacyclic.hpp"
#include "constacode/field.hpp"
#include "constacode/lincode.hpp"
#include "constacode/matprod.hpp"
#include "constacode/polyring.hpp"

namespace constacode {

/// The matrix-product form of a lambda-constacyclic code of length p^k * n:
/// the code is the image, under `map`, of the matrix-product code
/// [C_{p^k-1}, ..., C_1, C_0] . A of the nested lambda0-constacyclic
/// components of length n. Components are stored largest first, matching the
/// row order of A.
struct DecompositionResult {
    FieldElement lambda0;
    unsigned k;
    uint64_t pk;
    size_t n;
    uint64_t n_prime;  // inverse of n modulo p^k
    MatrixOverField a;
    MonomialMap map;
    std::vector<ConstacyclicCode> components;  // components[i] = C_{p^k-1-i}
    std::vector<unsigned> exponents;           // source generator over canonical base factors
    Factorization base_factors;
};

/// The p^k x p^k coefficient matrix of the (v-1)-adic expansion: row i holds
/// the coefficients of (v-1)^(p^k-1-i) in ascending powers of v, so entry
/// (i, j) is (-1)^(p^k-1-i-j) * binomial(p^k-1-i, j) reduced into the prime
/// subfield. Anti-diagonal of units, hence always nonsingular.
MatrixOverField expansion_matrix(const FieldPtr& field, unsigned k);

/// Component generators g_s = prod of the factors whose exponent exceeds s,
/// for s = 0, ..., p^k - 1 (ascending s). The divisibility chain
/// g_{p^k-1} | ... | g_1 | g_0 | x^n - lambda0 holds by construction.
std::vector<Polynomial> component_generators(const Factorization& base, const std::vector<unsigned>& exponents,
                                             uint64_t pk);

/// The coordinate map of the equivalence: with indices split as i = j + t*n,
/// sigma(j + t*n) = j + n*s and the scalar at output coordinate j + t*n is
/// lambda0^s, where s = (t - n'*j) mod p^k. For lambda = 1 every scalar is
/// one and the map is a pure permutation.
MonomialMap decomposition_monomial_map(const FieldPtr& field, unsigned k, size_t n, const FieldElement& lambda0);

/// Decomposes a constacyclic code of length p^k * n (k maximal, inferred
/// from the length) into its matrix-product form.
DecompositionResult decompose(const ConstacyclicCode& code, uint64_t seed = 0);

/// Splits a codeword of the source code into its component words
/// (c_{p^k-1}, ..., c_0), aligned with result.components. Each returned part
/// is checked for membership in its component; failure means the word is not
/// in the source code.
std::vector<Codeword> decompose_codeword(const Codeword& word, const DecompositionResult& result);

/// Inverse of decompose_codeword: rebuilds the source codeword from
/// component words.
Codeword reassemble_codeword(const std::vector<Codeword>& parts, const DecompositionResult& result);

/// Row-space identity: the monomial image of the source code equals the
/// matrix-product code of the components. Exact at any size. When
/// exhaustive_limit is nonzero and the code has at most that many words, the
/// full codeword sets are compared as well.
bool verify_equivalence(const ConstacyclicCode& code, const DecompositionResult& result,
                        uint64_t exhaustive_limit = 0);

/// Minimum distance through the decomposition and the matrix-product bound;
/// exact whenever the expansion matrix is NSC (the components are always
/// nested). The zero code reports {0, true}.
DistanceBound code_distance(const DecompositionResult& result, uint64_t budget = kDefaultDistanceBudget);
DistanceBound code_distance(const ConstacyclicCode& code, uint64_t budget = kDefaultDistanceBudget);

}  // namespace constacode
