#pragma once

#include <cstdint>
#include <vector>

#include "constacode/field.hpp"
#include "constacode/lincode.hpp"

namespace constacode {

/// Dense rectangular matrix over GF(p^m), row-major element codes.
class MatrixOverField {
  public:
    MatrixOverField(FieldPtr field, size_t rows, size_t cols);
    MatrixOverField(FieldPtr field, size_t rows, size_t cols, std::vector<uint64_t> entries);
    static MatrixOverField identity(FieldPtr field, size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    size_t row_count() const noexcept { return rows_; }
    size_t col_count() const noexcept { return cols_; }
    uint64_t code_at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set_code(size_t r, size_t c, uint64_t v);
    FieldElement at(size_t r, size_t c) const;
    const std::vector<uint64_t>& entries() const noexcept { return entries_; }

    MatrixOverField transposed() const;
    MatrixOverField inverse() const;  // throws on non-square or singular input
    size_t rank() const;

  private:
    FieldPtr field_;
    size_t rows_;
    size_t cols_;
    std::vector<uint64_t> entries_;
};

bool operator==(const MatrixOverField& a, const MatrixOverField& b) noexcept;

/// Generator matrix of [C_1,...,C_alpha] . A, flattened column-major: the
/// codeword entry at matrix position (row j, column t) lands at coordinate
/// j + t*n. Built by stacking, for component i and generator row g, the word
/// whose column-t block is A(i,t) * g.
GeneratorMatrix matrix_product_code(const std::vector<GeneratorMatrix>& components, const MatrixOverField& a);

/// Non-singular by columns: for every t <= alpha, each t x t submatrix drawn
/// from the first t rows (columns ascending) is nonsingular.
bool is_nsc(const MatrixOverField& a);

struct DistanceBound {
    uint64_t distance;
    bool exact;
};

/// The matrix-product distance bound: delta = min over components with
/// nonzero distance of d_i * delta_i, where delta_i is beta - i + 1 for NSC
/// matrices and otherwise the exact distance of the code spanned by the
/// first i rows of A. Component distances use the 0 sentinel for zero
/// components. Exact when the components are nested (largest first) and A is
/// NSC. All components zero reports the zero code: {0, true}.
DistanceBound matrix_product_distance_bound(const std::vector<uint64_t>& component_distances, const MatrixOverField& a,
                              bool nested, uint64_t budget = kDefaultDistanceBudget);

/// Checks dual([C_1..C_a].A) == [C_1^perp..C_a^perp].(A^-1)^tr as row spaces.
bool matrix_product_dual_identity(const std::vector<GeneratorMatrix>& components, const MatrixOverField& a);

}  // namespace constacode
