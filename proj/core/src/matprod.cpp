#include "constacode/matprod.hpp"

#include <stdexcept>

namespace constacode {

MatrixOverField::MatrixOverField(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
}

MatrixOverField::MatrixOverField(FieldPtr field, size_t rows, size_t cols, std::vector<uint64_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match the shape");
    for (uint64_t e : entries_) {
        if (e >= field_->order()) throw std::invalid_argument("element code out of range");
    }
}

MatrixOverField MatrixOverField::identity(FieldPtr field, size_t n) {
    MatrixOverField m(std::move(field), n, n);
    for (size_t i = 0; i < n; ++i) m.set_code(i, i, 1);
    return m;
}

void MatrixOverField::set_code(size_t r, size_t c, uint64_t v) {
    if (v >= field_->order()) throw std::invalid_argument("element code out of range");
    entries_[r * cols_ + c] = v;
}

FieldElement MatrixOverField::at(size_t r, size_t c) const { return field_->element(code_at(r, c)); }

MatrixOverField MatrixOverField::transposed() const {
    MatrixOverField out(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.set_code(c, r, code_at(r, c));
    }
    return out;
}

MatrixOverField MatrixOverField::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("only square matrices can be inverted");
    const Field& F = *field_;
    const size_t n = rows_;
    // Gauss-Jordan on [A | I]
    std::vector<std::vector<uint64_t>> work(n, std::vector<uint64_t>(2 * n, 0));
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) work[r][c] = code_at(r, c);
        work[r][n + r] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = n;
        for (size_t r = c; r < n; ++r) {
            if (work[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) throw std::invalid_argument("matrix is singular");
        std::swap(work[c], work[pivot]);
        const uint64_t scale = F.inv(work[c][c]);
        for (size_t j = 0; j < 2 * n; ++j) work[c][j] = F.mul(work[c][j], scale);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || work[r][c] == 0) continue;
            const uint64_t factor = work[r][c];
            for (size_t j = 0; j < 2 * n; ++j) work[r][j] = F.sub(work[r][j], F.mul(factor, work[c][j]));
        }
    }
    MatrixOverField out(field_, n, n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) out.set_code(r, c, work[r][n + c]);
    }
    return out;
}

size_t MatrixOverField::rank() const {
    std::vector<Codeword> rows(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        rows[r].assign(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
    }
    return rref(GeneratorMatrix(field_, cols_, std::move(rows))).row_count();
}

bool operator==(const MatrixOverField& a, const MatrixOverField& b) noexcept {
    return a.field()->compatible(*b.field()) && a.row_count() == b.row_count() &&
           a.col_count() == b.col_count() && a.entries() == b.entries();
}

GeneratorMatrix matrix_product_code(const std::vector<GeneratorMatrix>& components, const MatrixOverField& a) {
    const size_t alpha = a.row_count();
    const size_t beta = a.col_count();
    if (components.size() != alpha) throw std::invalid_argument("component count must equal the row count of A");
    if (alpha == 0) throw std::invalid_argument("matrix-product code needs at least one component");
    const size_t n = components.front().length();
    const Field& F = *a.field();
    for (const GeneratorMatrix& c : components) {
        if (c.length() != n) throw std::invalid_argument("components must share one length");
        if (!c.field()->compatible(F)) throw std::invalid_argument("field mismatch");
    }
    std::vector<Codeword> rows;
    for (size_t i = 0; i < alpha; ++i) {
        for (const Codeword& g : components[i].rows()) {
            Codeword w(n * beta, 0);
            for (size_t t = 0; t < beta; ++t) {
                const uint64_t scale = a.code_at(i, t);
                if (scale == 0) continue;
                for (size_t j = 0; j < n; ++j) w[j + t * n] = F.mul(scale, g[j]);
            }
            rows.push_back(std::move(w));
        }
    }
    return GeneratorMatrix(a.field(), n * beta, std::move(rows));
}

namespace {

bool nonsingular(const MatrixOverField& a, const std::vector<size_t>& cols) {
    // Gaussian elimination on the t x t submatrix of the first t rows
    const Field& F = *a.field();
    const size_t t = cols.size();
    std::vector<std::vector<uint64_t>> w(t, std::vector<uint64_t>(t));
    for (size_t r = 0; r < t; ++r) {
        for (size_t c = 0; c < t; ++c) w[r][c] = a.code_at(r, cols[c]);
    }
    for (size_t c = 0; c < t; ++c) {
        size_t pivot = t;
        for (size_t r = c; r < t; ++r) {
            if (w[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == t) return false;
        std::swap(w[c], w[pivot]);
        const uint64_t inv = F.inv(w[c][c]);
        for (size_t r = c + 1; r < t; ++r) {
            if (w[r][c] == 0) continue;
            const uint64_t factor = F.mul(w[r][c], inv);
            for (size_t j = c; j < t; ++j) w[r][j] = F.sub(w[r][j], F.mul(factor, w[c][j]));
        }
    }
    return true;
}

bool next_combination(std::vector<size_t>& c, size_t n) {
    const size_t t = c.size();
    size_t i = t;
    while (i > 0) {
        --i;
        if (c[i] != n - t + i) {
            ++c[i];
            for (size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_nsc(const MatrixOverField& a) {
    const size_t alpha = a.row_count();
    const size_t beta = a.col_count();
    if (alpha > beta) throw std::invalid_argument("NSC requires alpha <= beta");
    for (size_t t = 1; t <= alpha; ++t) {
        std::vector<size_t> cols(t);
        for (size_t i = 0; i < t; ++i) cols[i] = i;
        do {
            if (!nonsingular(a, cols)) return false;
        } while (next_combination(cols, beta));
    }
    return true;
}

DistanceBound matrix_product_distance_bound(const std::vector<uint64_t>& component_distances, const MatrixOverField& a,
                              bool nested, uint64_t budget) {
    const size_t alpha = a.row_count();
    const size_t beta = a.col_count();
    if (component_distances.size() != alpha) {
        throw std::invalid_argument("one distance per component is required");
    }
    if (a.rank() != alpha) throw std::invalid_argument("A must have full row rank");
    bool all_zero = true;
    for (uint64_t d : component_distances) all_zero = all_zero && (d == 0);
    if (all_zero) return {0, true};  // zero code
    const bool nsc = (alpha <= beta) && is_nsc(a);
    uint64_t best = UINT64_MAX;
    for (size_t i = 1; i <= alpha; ++i) {
        const uint64_t d = component_distances[i - 1];
        if (d == 0) continue;
        uint64_t delta_i;
        if (nsc) {
            delta_i = beta - i + 1;
        } else {
            std::vector<Codeword> prefix(i);
            for (size_t r = 0; r < i; ++r) {
                prefix[r].resize(beta);
                for (size_t c = 0; c < beta; ++c) prefix[r][c] = a.code_at(r, c);
            }
            auto dist = min_distance(GeneratorMatrix(a.field(), beta, std::move(prefix)), budget);
            if (!dist) throw BudgetExceeded("row-prefix distance enumeration exceeded the budget");
            delta_i = *dist;
        }
        best = std::min(best, d * delta_i);
    }
    return {best, nested && nsc};
}

bool matrix_product_dual_identity(const std::vector<GeneratorMatrix>& components, const MatrixOverField& a) {
    if (a.row_count() != a.col_count()) throw std::invalid_argument("A must be square");
    const MatrixOverField b = a.inverse().transposed();
    std::vector<GeneratorMatrix> duals;
    duals.reserve(components.size());
    for (const GeneratorMatrix& c : components) duals.push_back(dual(c));
    const GeneratorMatrix lhs = dual(matrix_product_code(components, a));
    const GeneratorMatrix rhs = matrix_product_code(duals, b);
    return codes_equal(lhs, rhs);
}

}  // namespace constacode
