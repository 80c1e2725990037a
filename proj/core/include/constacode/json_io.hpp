#pragma once

#include <json.hpp>

#include "constacode/constacyclic.hpp"
#include "constacode/decomp.hpp"
#include "constacode/field.hpp"
#include "constacode/lincode.hpp"
#include "constacode/matprod.hpp"
#include "constacode/polyring.hpp"

namespace constacode {

// Wire formats. Field elements are arrays of m digits, constant term first;
// polynomials are arrays of elements, constant term first.

nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldPtr& field, const nlohmann::json& j);

nlohmann::json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const FieldPtr& field, const nlohmann::json& j);

nlohmann::json factorization_to_json(const Factorization& f);

nlohmann::json genmatrix_to_json(const GeneratorMatrix& m);

nlohmann::json matrix_to_json(const MatrixOverField& m);

nlohmann::json code_to_json(const ConstacyclicCode& code);

nlohmann::json decomposition_to_json(const DecompositionResult& result);

}  // namespace constacode
