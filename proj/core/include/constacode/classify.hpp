#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "constacode/constacyclic.hpp"
#include "constacode/decomp.hpp"
#include "constacode/field.hpp"

namespace constacode {

/// One classified code: its exponent vector over the canonical factors, the
/// dimension, the matrix-product distance (0 sentinel for the zero code) and
/// whether the value is exact.
struct ClassificationRow {
    std::vector<unsigned> exponents;
    size_t dimension;
    uint64_t distance;
    bool exact;
};

struct ClassificationReport {
    FieldPtr field;
    size_t n = 0;
    unsigned k = 0;
    uint64_t pk = 1;
    size_t length = 0;  // p^k * n
    FieldElement lambda;
    FieldElement lambda0;
    Factorization base_factors;
    MatrixOverField a;
    bool nsc = false;
    /// Distance of the length-n code generated by the product of the factor
    /// subset encoded in the index bitmask (bit t = canonical factor t).
    std::vector<uint64_t> subset_distances;
    std::vector<ClassificationRow> rows;  // lexicographic exponent order
    std::vector<std::pair<uint64_t, uint64_t>> by_distance;                  // (d, N_d), d ascending
    std::vector<std::tuple<uint64_t, size_t, uint64_t>> by_distance_dim;     // (d, k_d, count)
};

/// Classifies every constacyclic code of length p^k * n over the field: one
/// row per exponent vector. Component distances are enumerated once per
/// squarefree divisor of x^n - lambda0 (2^r codes) and every row is then a
/// table lookup through the distance bound. Deterministic output order;
/// `jobs` only partitions the row loop.
ClassificationReport classify(const FieldPtr& field, size_t n, unsigned k, const FieldElement& lambda,
                              uint64_t budget = kDefaultDistanceBudget, unsigned jobs = 1, uint64_t seed = 0);

/// TSV rendering: '#' header lines (field, factors, matrix), the row table,
/// then the two aggregate tables. Byte-identical across runs and job counts.
std::string render_classification_tsv(const ClassificationReport& report);

/// JSON rendering with a top-level schema version.
std::string render_classification_json(const ClassificationReport& report);

}  // namespace constacode
