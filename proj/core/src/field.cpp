#include "constacode/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace constacode {

namespace {

constexpr uint64_t kLutMaxOrder = 256;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

uint64_t addmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
    // a, b < mod; avoids overflow for mod close to 2^64
    return (a >= mod - b && b != 0) ? a - (mod - b) : a + b;
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
    if (mod == 1) return 0;
    uint64_t result = 1;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) result = mulmod_u64(result, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return result;
}

uint64_t invmod_u64(uint64_t a, uint64_t mod) {
    if (mod == 1) return 0;
    __int128 t = 0, new_t = 1;
    __int128 r = mod, new_r = a % mod;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::logic_error("invmod: arguments are not coprime");
    if (t < 0) t += mod;
    return static_cast<uint64_t>(t);
}

// ---- polynomials over GF(p) with u64 coefficients, constant term first ----
// Only what modulus validation and the canonical-modulus search need; the
// general GF(p^m)[x] machinery lives in polyring.

using PVec = std::vector<uint64_t>;

void pv_trim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PVec pv_sub(PVec a, const PVec& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = addmod_u64(a[i], (p - b[i]) % p, p);
    pv_trim(a);
    return a;
}

void pv_make_monic(PVec& f, uint64_t p) {
    if (f.empty() || f.back() == 1) return;
    uint64_t s = powmod_u64(f.back(), p - 2, p);
    for (auto& c : f) c = mulmod_u64(c, s, p);
}

// remainder of a modulo monic f
PVec pv_mod(PVec a, const PVec& f, uint64_t p) {
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        uint64_t c = a.back();
        a.pop_back();
        if (c == 0) continue;
        const size_t shift = a.size() - df;
        for (size_t i = 0; i < df; ++i) {
            uint64_t sub = mulmod_u64(c, f[i], p);
            a[shift + i] = addmod_u64(a[shift + i], (p - sub) % p, p);
        }
    }
    pv_trim(a);
    return a;
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = addmod_u64(out[i + j], mulmod_u64(a[i], b[j], p), p);
        }
    }
    return pv_mod(std::move(out), f, p);
}

PVec pv_powmod(PVec base, uint64_t exp, const PVec& f, uint64_t p) {
    PVec result{1};
    base = pv_mod(std::move(base), f, p);
    while (exp != 0) {
        if (exp & 1) result = pv_mulmod(result, base, f, p);
        base = pv_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return result;
}

PVec pv_gcd(PVec a, PVec b, uint64_t p) {
    while (!b.empty()) {
        pv_make_monic(b, p);
        PVec r = pv_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree >= 1 over GF(p): irreducible iff x^(p^d) = x mod f and
// gcd(x^(p^(d/l)) - x, f) = 1 for every prime l dividing d.
bool pv_irreducible(const PVec& f, uint64_t p) {
    const size_t d = f.size() - 1;
    if (d == 1) return true;
    const PVec x{0, 1};
    std::vector<PVec> frob(d + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = x;
    for (size_t i = 1; i <= d; ++i) frob[i] = pv_powmod(frob[i - 1], p, f, p);
    if (frob[d] != x) return false;
    size_t rest = d;
    for (size_t l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        PVec g = pv_gcd(f, pv_sub(frob[d / l], x, p), p);
        if (g.size() != 1) return false;
    }
    if (rest > 1) {
        PVec g = pv_gcd(f, pv_sub(frob[d / rest], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

PVec canonical_modulus(uint64_t p, unsigned m) {
    if (m == 1) return {0, 1};  // x
    PVec f(m + 1, 0);
    f[m] = 1;
    std::vector<uint64_t> c(m, 0);
    while (true) {
        if (c[0] != 0) {  // constant term zero means divisible by x
            for (unsigned i = 0; i < m; ++i) f[i] = c[i];
            if (pv_irreducible(f, p)) return f;
        }
        // advance (c0,...,c_{m-1}) in lexicographic order: last digit fastest
        size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++c[pos] < p) break;
            c[pos] = 0;
            if (pos == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    static constexpr uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t s : small) {
        if (n % s == 0) return n == s;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : small) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---- Field ----

Field::Field(PrivateTag, uint64_t p, unsigned m, std::vector<uint64_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (q_ > UINT64_MAX / p_) throw std::invalid_argument("field order does not fit in 64 bits");
        q_ *= p_;
    }
    if (q_ <= kLutMaxOrder) {
        add_lut_.resize(q_ * q_);
        mul_lut_.resize(q_ * q_);
        inv_lut_.assign(q_, 0);
        for (uint64_t a = 0; a < q_; ++a) {
            for (uint64_t b = 0; b < q_; ++b) {
                add_lut_[a * q_ + b] = static_cast<uint8_t>(generic_add(a, b));
                mul_lut_[a * q_ + b] = static_cast<uint8_t>(generic_mul(a, b));
            }
        }
        for (uint64_t a = 1; a < q_; ++a) inv_lut_[a] = static_cast<uint8_t>(pow_u64(a, q_ - 2));
    }
}

FieldPtr Field::make(uint64_t p, unsigned m) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    PVec mod = canonical_modulus(p, m);
    return std::make_shared<Field>(PrivateTag{}, p, m, std::move(mod));
}

FieldPtr Field::make(uint64_t p, unsigned m, const std::vector<uint64_t>& modulus) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    if (modulus.size() != m + 1) throw std::invalid_argument("modulus degree must equal the extension degree");
    for (uint64_t d : modulus) {
        if (d >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (m >= 2 && !pv_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over GF(p)");
    return std::make_shared<Field>(PrivateTag{}, p, m, modulus);
}

bool Field::compatible(const Field& other) const noexcept {
    if (this == &other) return true;
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), 0); }

FieldElement Field::one() const { return FieldElement(shared_from_this(), 1); }

FieldElement Field::element(uint64_t code) const {
    if (code >= q_) throw std::invalid_argument("element code out of range");
    return FieldElement(shared_from_this(), code);
}

FieldElement Field::from_digits(const std::vector<uint64_t>& digits) const {
    return FieldElement(shared_from_this(), code_from_digits(digits));
}

FieldElement Field::from_int(int64_t value) const {
    int64_t p = static_cast<int64_t>(p_);
    int64_t r = value % p;
    if (r < 0) r += p;
    return FieldElement(shared_from_this(), static_cast<uint64_t>(r));
}

std::vector<uint64_t> Field::digits_of(uint64_t code) const {
    std::vector<uint64_t> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = code % p_;
        code /= p_;
    }
    return out;
}

uint64_t Field::code_from_digits(const std::vector<uint64_t>& digits) const {
    if (digits.size() != m_) throw std::invalid_argument("digit sequence must have length m");
    uint64_t code = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("digit out of range");
        code = code * p_ + digits[i];
    }
    return code;
}

int Field::compare_codes(uint64_t a, uint64_t b) const {
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t da = a % p_, db = b % p_;
        if (da != db) return da < db ? -1 : 1;
        a /= p_;
        b /= p_;
    }
    return 0;
}

uint64_t Field::generic_add(uint64_t a, uint64_t b) const {
    if (m_ == 1) return addmod_u64(a, b, p_);
    uint64_t code = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        code += addmod_u64(a % p_, b % p_, p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return code;
}

uint64_t Field::generic_mul(uint64_t a, uint64_t b) const {
    if (m_ == 1) return mulmod_u64(a, b, p_);
    if (a == 0 || b == 0) return 0;
    std::vector<uint64_t> da = digits_of(a), db = digits_of(b);
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            prod[i + j] = addmod_u64(prod[i + j], mulmod_u64(da[i], db[j], p_), p_);
        }
    }
    // fold x^m, ..., x^(2m-2) down using x^m = -(lower part of the modulus)
    for (size_t d = prod.size(); d-- > m_;) {
        uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t sub = mulmod_u64(c, modulus_[i], p_);
            prod[d - m_ + i] = addmod_u64(prod[d - m_ + i], (p_ - sub) % p_, p_);
        }
    }
    uint64_t code = 0;
    for (size_t i = m_; i-- > 0;) code = code * p_ + prod[i];
    return code;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (!add_lut_.empty()) return add_lut_[a * q_ + b];
    return generic_add(a, b);
}

uint64_t Field::neg(uint64_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    uint64_t code = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t d = a % p_;
        code += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return code;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (!mul_lut_.empty()) return mul_lut_[a * q_ + b];
    return generic_mul(a, b);
}

uint64_t Field::pow_u64(uint64_t a, uint64_t e) const {
    uint64_t result = 1, base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!inv_lut_.empty()) return inv_lut_[a];
    return pow_u64(a, q_ - 2);
}

uint64_t Field::pow(uint64_t a, int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("zero raised to a negative power");
    }
    const uint64_t group = q_ - 1;
    if (group == 1) return 1;
    int64_t r = e % static_cast<int64_t>(group);
    if (r < 0) r += static_cast<int64_t>(group);
    return pow_u64(a, static_cast<uint64_t>(r));
}

uint64_t Field::pk_root(uint64_t lambda, unsigned k) const {
    if (lambda == 0) throw std::domain_error("pk_root of zero");
    const uint64_t group = q_ - 1;
    if (group == 1) return 1;
    uint64_t pk = powmod_u64(p_ % group, k, group);
    uint64_t e = invmod_u64(pk, group);  // gcd(p^k, p^m - 1) = 1
    return pow_u64(lambda, e);
}

std::string Field::element_to_string(uint64_t code) const {
    if (m_ == 1) return std::to_string(code);
    std::string out = "(";
    auto d = digits_of(code);
    for (unsigned i = 0; i < m_; ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    out += ")";
    return out;
}

// ---- FieldElement ----

namespace {

const Field& common_field(const FieldElement& a, const FieldElement& b) {
    const Field& fa = *a.field();
    if (!fa.compatible(*b.field())) throw std::invalid_argument("field mismatch between operands");
    return fa;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, uint64_t code) : field_(std::move(field)), code_(code) {
    if (!field_) throw std::invalid_argument("element requires a field");
    if (code_ >= field_->order()) throw std::invalid_argument("element code out of range");
}

std::vector<uint64_t> FieldElement::digits() const { return field_->digits_of(code_); }

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(code_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(code_)); }

FieldElement FieldElement::pow(int64_t e) const { return FieldElement(field_, field_->pow(code_, e)); }

std::string FieldElement::to_string() const { return field_->element_to_string(code_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field(), common_field(a, b).add(a.code(), b.code()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field(), common_field(a, b).sub(a.code(), b.code()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field(), common_field(a, b).mul(a.code(), b.code()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field(), common_field(a, b).mul(a.code(), b.field()->inv(b.code())));
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field()->compatible(*b.field()) && a.code() == b.code();
}

bool operator!=(const FieldElement& a, const FieldElement& b) noexcept { return !(a == b); }

FieldElement pk_root(const FieldElement& lambda, unsigned k) {
    return FieldElement(lambda.field(), lambda.field()->pk_root(lambda.code(), k));
}

}  // namespace constacode
