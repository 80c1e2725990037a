#include "constacode/constacyclic.hpp"

#include <stdexcept>

namespace constacode {

ConstacyclicCode::ConstacyclicCode(FieldElement lambda, size_t length, Polynomial generator)
    : lambda_(std::move(lambda)), length_(length), generator_(std::move(generator)), generator_degree_(0) {
    if (length_ == 0) throw std::invalid_argument("code length must be positive");
    if (lambda_.is_zero()) throw std::invalid_argument("constacyclic constant must be nonzero");
    if (!lambda_.field()->compatible(*generator_.field())) throw std::invalid_argument("field mismatch");
    if (generator_.is_zero() || !generator_.is_monic()) {
        throw std::invalid_argument("generator must be a monic polynomial");
    }
    generator_degree_ = generator_.degree();
    if (generator_degree_ > length_) throw std::invalid_argument("generator degree exceeds the code length");
    const Polynomial modulus = Polynomial::xn_minus_c(lambda_.field(), length_, lambda_.code());
    if (!divides(generator_, modulus)) {
        throw std::invalid_argument("generator does not divide x^N - lambda");
    }
}

GeneratorMatrix ConstacyclicCode::generator_matrix() const {
    const size_t k = dimension();
    std::vector<Codeword> rows(k, Codeword(length_, 0));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j <= generator_degree_; ++j) rows[i][i + j] = generator_.coeff_code(j);
    }
    return GeneratorMatrix(lambda_.field(), length_, std::move(rows));
}

bool shift_closed(const GeneratorMatrix& m, const FieldElement& lambda) {
    if (!m.field()->compatible(*lambda.field())) throw std::invalid_argument("field mismatch");
    const Field& F = *m.field();
    const size_t n = m.length();
    const GeneratorMatrix canon = rref(m);
    for (const Codeword& row : m.rows()) {
        Codeword shifted(n);
        shifted[0] = F.mul(lambda.code(), row[n - 1]);
        for (size_t i = 1; i < n; ++i) shifted[i] = row[i - 1];
        if (!in_row_space(canon, shifted)) return false;
    }
    return true;
}

RepeatedRootStructure repeated_root_structure(const FieldPtr& field, size_t length, const FieldElement& lambda,
                                              uint64_t seed) {
    if (length == 0) throw std::invalid_argument("length must be positive");
    if (!field->compatible(*lambda.field())) throw std::invalid_argument("field mismatch");
    const uint64_t p = field->characteristic();
    unsigned k = 0;
    uint64_t pk = 1;
    size_t n = length;
    while (n % p == 0) {
        n /= p;
        ++k;
        pk *= p;
    }
    FieldElement lambda0 = pk_root(lambda, k);
    Factorization base = factor_constacyclic_modulus(n, lambda0, seed);
    return {k, pk, n, std::move(lambda0), std::move(base)};
}

std::vector<ConstacyclicCode> enumerate_codes(const FieldPtr& field, size_t length, const FieldElement& lambda,
                                              uint64_t seed) {
    const RepeatedRootStructure s = repeated_root_structure(field, length, lambda, seed);
    const size_t r = s.base.factor_count();
    const unsigned max_exp = static_cast<unsigned>(s.pk);
    std::vector<unsigned> exps(r, 0);
    std::vector<ConstacyclicCode> out;
    while (true) {
        Polynomial g(field, {1});
        for (size_t t = 0; t < r; ++t) g = g * pow(s.base.factor(t), exps[t]);
        out.emplace_back(lambda, length, std::move(g));
        // advance the exponent vector in lexicographic order (last index fastest)
        size_t pos = r;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++exps[pos] <= max_exp) {
                done = false;
                break;
            }
            exps[pos] = 0;
            if (pos == 0) break;
        }
        if (done) break;
    }
    return out;
}

std::vector<unsigned> exponents_over(const Factorization& base, const Polynomial& g_in) {
    std::vector<unsigned> exps(base.factor_count(), 0);
    Polynomial g = g_in;
    for (size_t t = 0; t < exps.size(); ++t) {
        const Polynomial& f = base.factor(t);
        while (!g.is_one()) {
            DivMod qr = divmod(g, f);
            if (!qr.remainder.is_zero()) break;
            ++exps[t];
            g = std::move(qr.quotient);
        }
    }
    if (!g.is_one()) throw std::invalid_argument("polynomial is not a product of the given factors");
    return exps;
}

std::vector<unsigned> factor_exponents(const ConstacyclicCode& code, uint64_t seed) {
    const RepeatedRootStructure s = repeated_root_structure(code.field(), code.length(), code.lambda(), seed);
    return exponents_over(s.base, code.generator());
}

}  // namespace constacode
