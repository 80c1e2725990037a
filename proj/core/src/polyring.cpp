#include "constacode/polyring.hpp"

#include <algorithm>
#include <random>

namespace constacode {

namespace {

void trim(std::vector<uint64_t>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const Field& common_field(const Polynomial& a, const Polynomial& b) {
    const Field& fa = *a.field();
    if (!fa.compatible(*b.field())) throw std::invalid_argument("field mismatch between polynomials");
    return fa;
}

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("polynomial requires a field");
}

Polynomial::Polynomial(FieldPtr field, std::vector<uint64_t> coeff_codes)
    : field_(std::move(field)), coeffs_(std::move(coeff_codes)) {
    if (!field_) throw std::invalid_argument("polynomial requires a field");
    for (uint64_t c : coeffs_) {
        if (c >= field_->order()) throw std::invalid_argument("coefficient code out of range");
    }
    trim(coeffs_);
}

Polynomial Polynomial::constant(const FieldElement& value) {
    return Polynomial(value.field(), {value.code()});
}

Polynomial Polynomial::monomial(FieldPtr field, size_t degree, uint64_t coeff_code) {
    std::vector<uint64_t> c(degree + 1, 0);
    c[degree] = coeff_code;
    return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::xn_minus_c(FieldPtr field, size_t n, uint64_t c_code) {
    std::vector<uint64_t> c(n + 1, 0);
    c[0] = field->neg(c_code);
    c[n] = field->add(c[n], 1);  // n = 0 collapses to 1 - c
    return Polynomial(std::move(field), std::move(c));
}

size_t Polynomial::degree() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no degree");
    return coeffs_.size() - 1;
}

FieldElement Polynomial::coeff(size_t i) const { return field_->element(coeff_code(i)); }

FieldElement Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return field_->element(coeffs_.back());
}

Polynomial Polynomial::operator-() const {
    std::vector<uint64_t> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = field_->neg(coeffs_[i]);
    return Polynomial(field_, std::move(c));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        uint64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const bool unit_coeff = (c == 1) && i > 0;
        if (!unit_coeff) out += field_->element_to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field()->compatible(*b.field()) && a.coeffs() == b.coeffs();
}

bool operator!=(const Polynomial& a, const Polynomial& b) noexcept { return !(a == b); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const Field& F = common_field(a, b);
    std::vector<uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff_code(i), b.coeff_code(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const Field& F = common_field(a, b);
    std::vector<uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff_code(i), b.coeff_code(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const Field& F = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    std::vector<uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint64_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
        }
    }
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const FieldElement& s, const Polynomial& f) {
    if (!s.field()->compatible(*f.field())) throw std::invalid_argument("field mismatch");
    std::vector<uint64_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.field()->mul(s.code(), f.coeffs()[i]);
    return Polynomial(f.field(), std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    const Field& F = common_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) {
        return {Polynomial(a.field()), a};
    }
    const size_t db = b.degree();
    const uint64_t lc_inv = F.inv(b.coeffs().back());
    std::vector<uint64_t> rem = a.coeffs();
    std::vector<uint64_t> quot(a.degree() - db + 1, 0);
    for (size_t i = rem.size(); i-- > db;) {
        uint64_t c = rem[i];
        if (c == 0) continue;
        uint64_t qc = F.mul(c, lc_inv);
        quot[i - db] = qc;
        for (size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(qc, b.coeffs()[j]));
        }
    }
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

bool divides(const Polynomial& divisor, const Polynomial& value) {
    return divmod(value, divisor).remainder.is_zero();
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return f.leading_coeff().inverse() * f;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    const FieldPtr& field = a.field();
    common_field(a, b);
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial(field, {1}), u1 = Polynomial(field);
    Polynomial v0 = Polynomial(field), v1 = Polynomial(field, {1});
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        Polynomial r2 = qr.remainder;
        Polynomial u2 = u0 - qr.quotient * u1;
        Polynomial v2 = v0 - qr.quotient * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        FieldElement s = r0.leading_coeff().inverse();
        r0 = s * r0;
        u0 = s * u0;
        v0 = s * v0;
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

FieldElement eval(const Polynomial& f, const FieldElement& x) {
    const Field& F = *f.field();
    if (!F.compatible(*x.field())) throw std::invalid_argument("field mismatch");
    uint64_t acc = 0;
    for (size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x.code()), f.coeffs()[i]);
    return f.field()->element(acc);
}

Polynomial derivative(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) return Polynomial(f.field());
    const Field& F = *f.field();
    std::vector<uint64_t> c(f.degree());
    for (size_t i = 1; i < f.coeffs().size(); ++i) {
        uint64_t scale = F.from_int(static_cast<int64_t>(i % F.characteristic())).code();
        c[i - 1] = F.mul(f.coeffs()[i], scale);
    }
    return Polynomial(f.field(), std::move(c));
}

Polynomial reciprocal(const Polynomial& f) {
    std::vector<uint64_t> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Polynomial(f.field(), std::move(c));
}

Polynomial powmod(const Polynomial& base, uint64_t exponent, const Polynomial& modulus) {
    Polynomial result(base.field(), {1});
    Polynomial b = divmod(base, modulus).remainder;
    while (exponent != 0) {
        if (exponent & 1) result = divmod(result * b, modulus).remainder;
        exponent >>= 1;
        if (exponent != 0) b = divmod(b * b, modulus).remainder;
    }
    return result;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(base.field(), {1});
    Polynomial b = base;
    while (exponent != 0) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent != 0) b = b * b;
    }
    return result;
}

int compare(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return 0;
        return a.is_zero() ? -1 : 1;
    }
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const Field& F = *a.field();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = F.compare_codes(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("irreducibility is undefined for constants");
    const size_t d = f.degree();
    if (d == 1) return true;
    const uint64_t q = f.field()->order();
    const Polynomial x = Polynomial::monomial(f.field(), 1);
    std::vector<Polynomial> frob;  // frob[i] = x^(q^(i+1)) mod f
    frob.reserve(d);
    Polynomial h = x;
    for (size_t i = 0; i < d; ++i) {
        h = powmod(h, q, f);
        frob.push_back(h);
    }
    if (frob[d - 1] != divmod(x, f).remainder) return false;
    size_t rest = d;
    auto coprime_at = [&](size_t i) {
        Polynomial g = gcd(f, frob[i - 1] - x);
        return !g.is_zero() && g.degree() == 0;
    };
    for (size_t l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        if (!coprime_at(d / l)) return false;
    }
    if (rest > 1 && !coprime_at(d / rest)) return false;
    return true;
}

NonSquarefreeError::NonSquarefreeError(const std::string& message, Polynomial witness)
    : std::invalid_argument(message), witness_(std::move(witness)) {}

// ---- Factorization ----

Factorization::Factorization(FieldElement unit, std::vector<std::pair<Polynomial, unsigned>> factors,
                             const Polynomial& expected_product)
    : unit_(std::move(unit)), factors_(std::move(factors)) {
    if (unit_.is_zero()) throw std::invalid_argument("factorization unit must be nonzero");
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    for (size_t i = 0; i < factors_.size(); ++i) {
        const auto& [poly, mult] = factors_[i];
        if (mult == 0) throw std::invalid_argument("factor multiplicity must be positive");
        if (!poly.is_monic()) throw std::invalid_argument("factors must be monic");
        if (!is_irreducible(poly)) throw std::invalid_argument("factor is reducible: " + poly.to_string());
        if (i > 0 && compare(factors_[i - 1].first, poly) == 0) {
            throw std::invalid_argument("duplicate factor: " + poly.to_string());
        }
    }
    if (product() != expected_product) throw std::invalid_argument("factorization does not re-multiply to its source");
}

Polynomial Factorization::product() const {
    Polynomial out = Polynomial::constant(unit_);
    for (const auto& [poly, mult] : factors_) out = out * pow(poly, mult);
    return out;
}

Factorization Factorization::scaled(unsigned e) const {
    if (e == 0) throw std::invalid_argument("multiplicity scale must be positive");
    std::vector<std::pair<Polynomial, unsigned>> scaled_factors;
    scaled_factors.reserve(factors_.size());
    for (const auto& [poly, mult] : factors_) scaled_factors.emplace_back(poly, mult * e);
    return Factorization(unit_.pow(static_cast<int64_t>(e)), std::move(scaled_factors), pow(product(), e));
}

// ---- factor_squarefree ----

namespace {

Polynomial random_poly_below(const FieldPtr& field, size_t degree_bound, std::mt19937_64& rng) {
    const uint64_t q = field->order();
    std::vector<uint64_t> c(degree_bound);
    for (auto& v : c) v = rng() % q;
    return Polynomial(field, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
// irreducibles of degree d. Odd q uses the norm map composed with the
// (q-1)/2 power, so no exponent ever exceeds 64 bits; q even uses the
// F_2-trace.
void split_equal_degree(const Polynomial& f, size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldPtr& field = f.field();
    const uint64_t q = field->order();
    const Polynomial one(field, {1});
    for (int attempts = 0; attempts < 10000; ++attempts) {
        Polynomial r = random_poly_below(field, f.degree(), rng);
        if (r.is_zero()) continue;
        Polynomial g = gcd(r, f);
        if (g.degree() == 0) {
            Polynomial t(field);
            if (q % 2 == 1) {
                Polynomial s = r;
                for (size_t i = 1; i < d; ++i) s = divmod(powmod(s, q, f) * r, f).remainder;
                t = powmod(s, (q - 1) / 2, f) - one;
            } else {
                const size_t bits = static_cast<size_t>(field->extension_degree()) * d;
                Polynomial acc = divmod(r, f).remainder;
                t = acc;
                for (size_t i = 1; i < bits; ++i) {
                    acc = powmod(acc, 2, f);
                    t = t + acc;
                }
            }
            g = gcd(t, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_equal_degree(make_monic(g), d, rng, out);
            split_equal_degree(make_monic(divmod(f, g).quotient), d, rng, out);
            return;
        }
    }
    throw std::logic_error("equal-degree splitting failed to converge");
}

}  // namespace

Factorization factor_squarefree(const Polynomial& f, uint64_t seed) {
    if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("cannot factor a constant");
    Polynomial fp = derivative(f);
    Polynomial g = gcd(f, fp);  // gcd(f, 0) = monic f, which covers f' = 0
    if (g.is_zero() || g.degree() > 0) {
        throw NonSquarefreeError("input is not squarefree; gcd(f, f') = " + g.to_string(), g);
    }
    const FieldElement unit = f.leading_coeff();
    const uint64_t q = f.field()->order();
    const Polynomial x = Polynomial::monomial(f.field(), 1);

    // distinct-degree stage
    std::vector<std::pair<Polynomial, size_t>> groups;
    Polynomial fstar = make_monic(f);
    Polynomial h = divmod(x, fstar).remainder;
    size_t d = 0;
    while (!fstar.is_zero() && fstar.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, q, fstar);
        Polynomial gd = gcd(h - x, fstar);
        if (gd.degree() > 0) {
            groups.emplace_back(gd, d);
            fstar = divmod(fstar, gd).quotient;
            if (fstar.degree() == 0) break;
            h = divmod(h, fstar).remainder;
        }
    }
    if (fstar.degree() > 0) groups.emplace_back(fstar, fstar.degree());

    // equal-degree stage
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Polynomial, unsigned>> factors;
    for (const auto& [group, deg] : groups) {
        std::vector<Polynomial> parts;
        split_equal_degree(group, deg, rng, parts);
        for (auto& part : parts) factors.emplace_back(std::move(part), 1u);
    }
    return Factorization(unit, std::move(factors), f);
}

Factorization factor_constacyclic_modulus(size_t n, const FieldElement& lambda0, uint64_t seed) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (lambda0.is_zero()) throw std::invalid_argument("constacyclic constant must be nonzero");
    const FieldPtr& field = lambda0.field();
    if (n % field->characteristic() == 0) {
        throw std::invalid_argument("p divides n; x^n - c is not squarefree");
    }
    return factor_squarefree(Polynomial::xn_minus_c(field, n, lambda0.code()), seed);
}

}  // namespace constacode
