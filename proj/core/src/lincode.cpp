#include "constacode/lincode.hpp"

#include <algorithm>
#include <numeric>

namespace constacode {

namespace {

void check_codes(const Field& field, const Codeword& word) {
    for (uint64_t c : word) {
        if (c >= field.order()) throw std::invalid_argument("element code out of range");
    }
}

}  // namespace

// ---- MonomialMap ----

MonomialMap::MonomialMap(FieldPtr field, std::vector<size_t> sigma, std::vector<uint64_t> scalar_codes)
    : field_(std::move(field)), sigma_(std::move(sigma)), scalars_(std::move(scalar_codes)) {
    if (!field_) throw std::invalid_argument("monomial map requires a field");
    if (sigma_.size() != scalars_.size()) throw std::invalid_argument("permutation and scalar lengths differ");
    std::vector<bool> seen(sigma_.size(), false);
    for (size_t s : sigma_) {
        if (s >= sigma_.size() || seen[s]) throw std::invalid_argument("sigma is not a permutation");
        seen[s] = true;
    }
    for (uint64_t r : scalars_) {
        if (r == 0 || r >= field_->order()) throw std::invalid_argument("monomial scalars must be nonzero");
    }
}

MonomialMap MonomialMap::identity(FieldPtr field, size_t length) {
    std::vector<size_t> sigma(length);
    std::iota(sigma.begin(), sigma.end(), size_t{0});
    return MonomialMap(std::move(field), std::move(sigma), std::vector<uint64_t>(length, 1));
}

bool MonomialMap::is_permutation() const noexcept {
    return std::all_of(scalars_.begin(), scalars_.end(), [](uint64_t r) { return r == 1; });
}

Codeword MonomialMap::apply(const Codeword& word) const {
    if (word.size() != sigma_.size()) throw std::invalid_argument("word length does not match the map");
    Codeword out(word.size());
    for (size_t i = 0; i < word.size(); ++i) out[i] = field_->mul(scalars_[i], word[sigma_[i]]);
    return out;
}

// ---- GeneratorMatrix ----

GeneratorMatrix::GeneratorMatrix(FieldPtr field, size_t length) : field_(std::move(field)), length_(length) {
    if (!field_) throw std::invalid_argument("generator matrix requires a field");
}

GeneratorMatrix::GeneratorMatrix(FieldPtr field, size_t length, std::vector<Codeword> rows)
    : field_(std::move(field)), length_(length), rows_(std::move(rows)) {
    if (!field_) throw std::invalid_argument("generator matrix requires a field");
    for (const Codeword& r : rows_) {
        if (r.size() != length_) throw std::invalid_argument("row length does not match code length");
        check_codes(*field_, r);
    }
}

FieldElement GeneratorMatrix::at(size_t r, size_t c) const { return field_->element(rows_.at(r).at(c)); }

// ---- operations ----

GeneratorMatrix rref(const GeneratorMatrix& m) {
    const Field& F = *m.field();
    std::vector<Codeword> rows = m.rows();
    const size_t n = m.length();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t pivot = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const uint64_t scale = F.inv(rows[r][c]);
        if (scale != 1) {
            for (size_t j = c; j < n; ++j) rows[r][j] = F.mul(rows[r][j], scale);
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const uint64_t factor = rows[i][c];
            for (size_t j = c; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return GeneratorMatrix(m.field(), n, std::move(rows));
}

size_t rank(const GeneratorMatrix& m) { return rref(m).row_count(); }

GeneratorMatrix dual(const GeneratorMatrix& m) {
    const Field& F = *m.field();
    const GeneratorMatrix R = rref(m);
    const size_t n = m.length();
    const size_t k = R.row_count();
    std::vector<size_t> pivots(k);
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < k; ++i) {
        size_t c = 0;
        while (R.rows()[i][c] == 0) ++c;
        pivots[i] = c;
        is_pivot[c] = true;
    }
    std::vector<Codeword> rows;
    rows.reserve(n - k);
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Codeword w(n, 0);
        w[f] = 1;
        for (size_t i = 0; i < k; ++i) w[pivots[i]] = F.neg(R.rows()[i][f]);
        rows.push_back(std::move(w));
    }
    return GeneratorMatrix(m.field(), n, std::move(rows));
}

namespace {

// Steps that walk a coefficient through every field element by single
// accumulations: delta[c] = c - (c-1) as field elements for c >= 1, and
// delta[0] closes the cycle from q-1 back to 0. Adding the same row over and
// over would only visit the prime-subfield multiples, so the deltas are
// essential for extension fields.
std::vector<uint64_t> coefficient_deltas(const Field& field) {
    const uint64_t q = field.order();
    std::vector<uint64_t> delta(q);
    delta[0] = field.neg(q - 1);
    for (uint64_t c = 1; c < q; ++c) delta[c] = field.sub(c, c - 1);
    return delta;
}

// Depth-first enumeration of one representative per scalar class of nonzero
// messages (first nonzero digit pinned to 1); weights are invariant under
// scalar multiples, so the minimum over classes is the true minimum.
template <typename T, typename MulFn, typename AddFn>
uint64_t min_weight_by_enumeration(const std::vector<std::vector<T>>& rows, size_t n, uint64_t q,
                                   const std::vector<T>& delta, MulFn mul, AddFn add) {
    const size_t k = rows.size();
    std::vector<T> word(n, T(0));
    uint64_t best = UINT64_MAX;
    auto step = [&](const std::vector<T>& r, T scale) {
        for (size_t i = 0; i < n; ++i) word[i] = add(word[i], mul(scale, r[i]));
    };
    auto visit = [&]() {
        uint64_t w = 0;
        for (size_t i = 0; i < n; ++i) w += (word[i] != T(0));
        if (w != 0 && w < best) best = w;
    };
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == k) {
            visit();
            return;
        }
        self(self, depth + 1);
        for (uint64_t c = 1; c < q; ++c) {
            step(rows[depth], delta[c]);
            self(self, depth + 1);
        }
        step(rows[depth], delta[0]);  // wrap the coefficient back to zero
    };
    for (size_t lead = 0; lead < k; ++lead) {
        std::fill(word.begin(), word.end(), T(0));
        step(rows[lead], T(1));
        rec(rec, lead + 1);
    }
    return best;
}

}  // namespace

std::optional<uint64_t> min_distance(const GeneratorMatrix& m, uint64_t budget) {
    const GeneratorMatrix R = rref(m);
    const size_t k = R.row_count();
    if (k == 0) return 0;  // zero code sentinel
    const Field& F = *m.field();
    const uint64_t q = F.order();
    unsigned __int128 count = 1;
    for (size_t i = 0; i < k; ++i) {
        count *= q;
        if (count - 1 > budget) return std::nullopt;
    }
    const size_t n = m.length();
    const std::vector<uint64_t> delta64 = coefficient_deltas(F);
    if (const uint8_t* add_tab = F.add_table()) {
        const uint8_t* mul_tab = F.mul_table();
        std::vector<std::vector<uint8_t>> rows(k, std::vector<uint8_t>(n));
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < n; ++j) rows[i][j] = static_cast<uint8_t>(R.rows()[i][j]);
        }
        std::vector<uint8_t> delta(delta64.begin(), delta64.end());
        auto mul = [mul_tab, q](uint8_t a, uint8_t b) { return mul_tab[static_cast<size_t>(a) * q + b]; };
        auto add = [add_tab, q](uint8_t a, uint8_t b) { return add_tab[static_cast<size_t>(a) * q + b]; };
        return min_weight_by_enumeration(rows, n, q, delta, mul, add);
    }
    auto mul = [&F](uint64_t a, uint64_t b) { return F.mul(a, b); };
    auto add = [&F](uint64_t a, uint64_t b) { return F.add(a, b); };
    return min_weight_by_enumeration(R.rows(), n, q, delta64, mul, add);
}

GeneratorMatrix apply_monomial(const GeneratorMatrix& m, const MonomialMap& map) {
    if (m.length() != map.length()) throw std::invalid_argument("monomial map length does not match the code");
    if (!m.field()->compatible(*map.field())) throw std::invalid_argument("field mismatch");
    std::vector<Codeword> rows;
    rows.reserve(m.row_count());
    for (const Codeword& r : m.rows()) rows.push_back(map.apply(r));
    return GeneratorMatrix(m.field(), m.length(), std::move(rows));
}

bool codes_equal(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (!a.field()->compatible(*b.field())) throw std::invalid_argument("field mismatch");
    if (a.length() != b.length()) throw std::invalid_argument("length mismatch");
    return rref(a).rows() == rref(b).rows();
}

bool in_row_space(const GeneratorMatrix& canonical, const Codeword& word) {
    if (word.size() != canonical.length()) throw std::invalid_argument("word length mismatch");
    const Field& F = *canonical.field();
    Codeword w = word;
    for (const Codeword& row : canonical.rows()) {
        size_t p = 0;
        while (row[p] == 0) ++p;
        if (w[p] == 0) continue;
        const uint64_t factor = w[p];
        for (size_t j = p; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(factor, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](uint64_t c) { return c == 0; });
}

Codeword encode(const GeneratorMatrix& m, const Codeword& message) {
    if (message.size() != m.row_count()) throw std::invalid_argument("message length must equal the row count");
    const Field& F = *m.field();
    Codeword out(m.length(), 0);
    for (size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], F.mul(message[i], m.rows()[i][j]));
    }
    return out;
}

std::vector<Codeword> codeword_set(const GeneratorMatrix& m, uint64_t limit) {
    const GeneratorMatrix R = rref(m);
    const Field& F = *m.field();
    const uint64_t q = F.order();
    const size_t k = R.row_count();
    unsigned __int128 count = 1;
    for (size_t i = 0; i < k; ++i) {
        count *= q;
        if (count > limit) throw std::invalid_argument("code too large to enumerate");
    }
    std::vector<Codeword> out;
    out.reserve(static_cast<size_t>(count));
    Codeword word(m.length(), 0);
    const std::vector<uint64_t> delta = coefficient_deltas(F);
    auto step = [&](size_t depth, uint64_t scale) {
        for (size_t j = 0; j < word.size(); ++j) {
            word[j] = F.add(word[j], F.mul(scale, R.rows()[depth][j]));
        }
    };
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == k) {
            out.push_back(word);
            return;
        }
        self(self, depth + 1);
        for (uint64_t c = 1; c < q; ++c) {
            step(depth, delta[c]);
            self(self, depth + 1);
        }
        step(depth, delta[0]);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t hamming_weight(const Codeword& word) {
    uint64_t w = 0;
    for (uint64_t c : word) w += (c != 0);
    return w;
}

}  // namespace constacode
