#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "constacode/field.hpp"

namespace constacode {

/// Dense univariate polynomial over GF(p^m). Coefficients are element codes,
/// constant term first, no trailing zeros; the zero polynomial is the empty
/// sequence and has no numeric degree.
class Polynomial {
  public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::vector<uint64_t> coeff_codes);

    static Polynomial constant(const FieldElement& value);
    static Polynomial monomial(FieldPtr field, size_t degree, uint64_t coeff_code = 1);
    /// x^n - c, the constacyclic modulus shape used throughout.
    static Polynomial xn_minus_c(FieldPtr field, size_t n, uint64_t c_code);

    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree of a nonzero polynomial; the zero polynomial has none and
    /// asking for it throws.
    size_t degree() const;
    const std::vector<uint64_t>& coeffs() const noexcept { return coeffs_; }
    uint64_t coeff_code(size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    FieldElement coeff(size_t i) const;
    FieldElement leading_coeff() const;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    Polynomial operator-() const;
    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<uint64_t> coeffs_;
};

bool operator==(const Polynomial& a, const Polynomial& b) noexcept;
bool operator!=(const Polynomial& a, const Polynomial& b) noexcept;
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const FieldElement& s, const Polynomial& f);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& divisor, const Polynomial& value);
Polynomial make_monic(const Polynomial& f);
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial g;  // monic gcd
    Polynomial u;
    Polynomial v;  // g = u*a + v*b
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

FieldElement eval(const Polynomial& f, const FieldElement& x);
Polynomial derivative(const Polynomial& f);
Polynomial reciprocal(const Polynomial& f);
Polynomial powmod(const Polynomial& base, uint64_t exponent, const Polynomial& modulus);
Polynomial pow(const Polynomial& base, unsigned exponent);

/// Canonical order: ascending degree, then ascending lexicographic on the
/// coefficient digit sequences read constant term first; zero sorts first.
int compare(const Polynomial& a, const Polynomial& b);

/// Distinct-degree sieve: f is irreducible iff x^(q^d) = x mod f and the
/// partial Frobenius powers x^(q^(d/l)) - x are coprime to f for every prime
/// l dividing d = deg f.
bool is_irreducible(const Polynomial& f);

class NonSquarefreeError : public std::invalid_argument {
  public:
    NonSquarefreeError(const std::string& message, Polynomial witness);
    const Polynomial& witness() const noexcept { return witness_; }

  private:
    Polynomial witness_;
};

/// Complete factorization into distinct monic irreducibles with
/// multiplicities, canonically ordered. Construction re-verifies everything:
/// each factor irreducible, factors pairwise distinct, and unit times the
/// product of the powers equal to the expected polynomial.
class Factorization {
  public:
    Factorization(FieldElement unit, std::vector<std::pair<Polynomial, unsigned>> factors,
                  const Polynomial& expected_product);

    const FieldElement& unit() const noexcept { return unit_; }
    const std::vector<std::pair<Polynomial, unsigned>>& factors() const noexcept { return factors_; }
    size_t factor_count() const noexcept { return factors_.size(); }
    const Polynomial& factor(size_t t) const { return factors_.at(t).first; }
    unsigned multiplicity(size_t t) const { return factors_.at(t).second; }
    Polynomial product() const;
    /// Same factors with every multiplicity scaled by e; this is the
    /// (x^n - c)^(p^k) step for repeated-root moduli.
    Factorization scaled(unsigned e) const;

  private:
    FieldElement unit_;
    std::vector<std::pair<Polynomial, unsigned>> factors_;
};

/// Factors a squarefree polynomial: squarefreeness gate, distinct-degree
/// stage, then seeded equal-degree splitting. Deterministic for a fixed seed,
/// and the canonical factor order makes the result seed-independent as a set.
Factorization factor_squarefree(const Polynomial& f, uint64_t seed = 0);

/// Factorization of x^n - lambda0 (requires gcd(p, n) = 1, which makes the
/// input squarefree).
Factorization factor_constacyclic_modulus(size_t n, const FieldElement& lambda0, uint64_t seed = 0);

}  // namespace constacode
