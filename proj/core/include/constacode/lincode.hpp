#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "constacode/field.hpp"

namespace constacode {

/// Codewords are vectors of element codes over one field.
using Codeword = std::vector<uint64_t>;

inline constexpr uint64_t kDefaultDistanceBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coordinate permutation plus nonzero per-coordinate scalars. Application
/// rule: output coordinate i is scalar[i] times input coordinate sigma(i).
class MonomialMap {
  public:
    MonomialMap(FieldPtr field, std::vector<size_t> sigma, std::vector<uint64_t> scalar_codes);
    static MonomialMap identity(FieldPtr field, size_t length);

    const FieldPtr& field() const noexcept { return field_; }
    size_t length() const noexcept { return sigma_.size(); }
    const std::vector<size_t>& sigma() const noexcept { return sigma_; }
    const std::vector<uint64_t>& scalar_codes() const noexcept { return scalars_; }
    bool is_permutation() const noexcept;  // all scalars one

    Codeword apply(const Codeword& word) const;

  private:
    FieldPtr field_;
    std::vector<size_t> sigma_;
    std::vector<uint64_t> scalars_;
};

/// Rows spanning a linear code of length n; rows may be dependent, the
/// canonical form (reduced row echelon, zero rows dropped) is what defines
/// code identity.
class GeneratorMatrix {
  public:
    GeneratorMatrix(FieldPtr field, size_t length);
    GeneratorMatrix(FieldPtr field, size_t length, std::vector<Codeword> rows);

    const FieldPtr& field() const noexcept { return field_; }
    size_t length() const noexcept { return length_; }
    size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<Codeword>& rows() const noexcept { return rows_; }
    const Codeword& row(size_t i) const { return rows_.at(i); }
    FieldElement at(size_t r, size_t c) const;

  private:
    FieldPtr field_;
    size_t length_;
    std::vector<Codeword> rows_;
};

/// Reduced row echelon form with zero rows dropped; idempotent, and two
/// matrices generate the same code iff their rref rows agree.
GeneratorMatrix rref(const GeneratorMatrix& m);
size_t rank(const GeneratorMatrix& m);

/// Null space of m under the standard inner product; dimension n - rank.
GeneratorMatrix dual(const GeneratorMatrix& m);

/// Exact minimum nonzero Hamming weight by message enumeration, or nullopt
/// when the (p^m)^k - 1 nonzero messages exceed the budget. The zero code
/// reports the distinguished sentinel 0.
std::optional<uint64_t> min_distance(const GeneratorMatrix& m, uint64_t budget = kDefaultDistanceBudget);

GeneratorMatrix apply_monomial(const GeneratorMatrix& m, const MonomialMap& map);

bool codes_equal(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Membership test against a matrix already in rref form.
bool in_row_space(const GeneratorMatrix& canonical, const Codeword& word);

Codeword encode(const GeneratorMatrix& m, const Codeword& message);

/// Every codeword (including zero), sorted; throws if the code has more than
/// `limit` words. Intended for exhaustive small-instance checks.
std::vector<Codeword> codeword_set(const GeneratorMatrix& m, uint64_t limit);

uint64_t hamming_weight(const Codeword& word);

}  // namespace constacode
