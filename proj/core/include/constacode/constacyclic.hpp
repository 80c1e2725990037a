#pragma once

#include <cstdint>
#include <vector>

#include "constacode/field.hpp"
#include "constacode/lincode.hpp"
#include "constacode/polyring.hpp"

namespace constacode {

/// A lambda-constacyclic code of length N over GF(p^m), represented by its
/// unique monic generator polynomial dividing x^N - lambda (checked at
/// construction). The zero code is g = x^N - lambda, the full code g = 1.
class ConstacyclicCode {
  public:
    ConstacyclicCode(FieldElement lambda, size_t length, Polynomial generator);

    const FieldPtr& field() const noexcept { return lambda_.field(); }
    const FieldElement& lambda() const noexcept { return lambda_; }
    size_t length() const noexcept { return length_; }
    const Polynomial& generator() const noexcept { return generator_; }
    size_t dimension() const noexcept { return length_ - generator_degree_; }
    bool is_zero_code() const noexcept { return generator_degree_ == length_; }

    /// Row i is the coefficient vector of x^i g(x); degrees stay below N, so
    /// no reduction is ever needed and the rows are visibly independent.
    GeneratorMatrix generator_matrix() const;

  private:
    FieldElement lambda_;
    size_t length_;
    Polynomial generator_;
    size_t generator_degree_;
};

/// True iff the lambda-constacyclic shift (c_0,...,c_{N-1}) ->
/// (lambda c_{N-1}, c_0, ..., c_{N-2}) of every generator row stays inside
/// the row space.
bool shift_closed(const GeneratorMatrix& m, const FieldElement& lambda);

/// The repeated-root shape of x^N - lambda: N = p^k * n with gcd(p, n) = 1
/// and k maximal, lambda0 the unique p^k-th root of lambda, and the canonical
/// factorization of x^n - lambda0 (each factor has multiplicity p^k in
/// x^N - lambda).
struct RepeatedRootStructure {
    unsigned k;
    uint64_t pk;
    size_t n;
    FieldElement lambda0;
    Factorization base;
};
RepeatedRootStructure repeated_root_structure(const FieldPtr& field, size_t length, const FieldElement& lambda,
                                              uint64_t seed = 0);

/// One code per monic divisor of x^N - lambda, i.e. per exponent vector over
/// the canonical factor list, in lexicographic exponent order.
std::vector<ConstacyclicCode> enumerate_codes(const FieldPtr& field, size_t length, const FieldElement& lambda,
                                              uint64_t seed = 0);

/// Multiplicity of each factor of `base` in g; throws if g is not a product
/// of those factors.
std::vector<unsigned> exponents_over(const Factorization& base, const Polynomial& g);

/// Multiplicity of each canonical factor of x^n - lambda0 in the generator.
std::vector<unsigned> factor_exponents(const ConstacyclicCode& code, uint64_t seed = 0);

}  // namespace constacode
