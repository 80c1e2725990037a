#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace constacode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of GF(p^m). The base-p digits of `code` are the coefficients of
/// the representative polynomial, constant term first, so every element is
/// stored in canonical form and equality is a plain code comparison.
class FieldElement {
  public:
    FieldElement(FieldPtr field, uint64_t code);

    const FieldPtr& field() const noexcept { return field_; }
    uint64_t code() const noexcept { return code_; }
    std::vector<uint64_t> digits() const;

    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(int64_t e) const;

    std::string to_string() const;

  private:
    FieldPtr field_;
    uint64_t code_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
bool operator==(const FieldElement& a, const FieldElement& b) noexcept;
bool operator!=(const FieldElement& a, const FieldElement& b) noexcept;

/// GF(p^m) with a fixed monic irreducible modulus of degree m over GF(p),
/// stored constant term first. Construction validates primality of p and
/// irreducibility of the modulus. When no modulus is supplied, the canonical
/// one is the lexicographically smallest monic irreducible of degree m
/// (coefficient sequences compared constant term first; x itself for m = 1),
/// so two independent constructions of the same field interoperate.
///
/// Fields are immutable; all operations are pure and thread-safe.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static FieldPtr make(uint64_t p, unsigned m = 1);
    static FieldPtr make(uint64_t p, unsigned m, const std::vector<uint64_t>& modulus);

    uint64_t characteristic() const noexcept { return p_; }
    unsigned extension_degree() const noexcept { return m_; }
    uint64_t order() const noexcept { return q_; }
    const std::vector<uint64_t>& modulus() const noexcept { return modulus_; }

    /// Structural equality (same p, m and modulus). Elements of compatible
    /// fields may be mixed; anything else is a hard error, never a coercion.
    bool compatible(const Field& other) const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(uint64_t code) const;
    FieldElement from_digits(const std::vector<uint64_t>& digits) const;
    /// Embeds an integer into the prime subfield; negative values wrap, so
    /// from_int(-1) is the additive inverse of one.
    FieldElement from_int(int64_t value) const;

    std::vector<uint64_t> digits_of(uint64_t code) const;
    uint64_t code_from_digits(const std::vector<uint64_t>& digits) const;
    /// Lexicographic comparison of digit sequences, constant term first.
    int compare_codes(uint64_t a, uint64_t b) const;

    // Arithmetic on raw element codes. Hot paths use these directly; the
    // FieldElement operators defer to them.
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t pow(uint64_t a, int64_t e) const;

    /// The unique nonzero root of x^(p^k) = lambda, computed as lambda^e with
    /// e the inverse of p^k modulo p^m - 1 (the Frobenius power is a
    /// bijection on the multiplicative group).
    uint64_t pk_root(uint64_t lambda, unsigned k) const;

    /// q*q addition/multiplication tables, present when q <= 256.
    const uint8_t* add_table() const noexcept { return add_lut_.empty() ? nullptr : add_lut_.data(); }
    const uint8_t* mul_table() const noexcept { return mul_lut_.empty() ? nullptr : mul_lut_.data(); }

    std::string element_to_string(uint64_t code) const;

    struct PrivateTag {};
    Field(PrivateTag, uint64_t p, unsigned m, std::vector<uint64_t> modulus);

  private:
    uint64_t generic_add(uint64_t a, uint64_t b) const;
    uint64_t generic_mul(uint64_t a, uint64_t b) const;
    uint64_t pow_u64(uint64_t a, uint64_t e) const;

    uint64_t p_ = 0;
    unsigned m_ = 0;
    uint64_t q_ = 0;
    std::vector<uint64_t> modulus_;
    std::vector<uint8_t> add_lut_;
    std::vector<uint8_t> mul_lut_;
    std::vector<uint8_t> inv_lut_;
};

FieldElement pk_root(const FieldElement& lambda, unsigned k);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime_u64(uint64_t n);

}  // namespace constacode
