#include "constacode/json_io.hpp"

namespace constacode {

nlohmann::json field_to_json(const Field& field) {
    return {{"p", field.characteristic()}, {"m", field.extension_degree()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const nlohmann::json& j) {
    const uint64_t p = j.at("p").get<uint64_t>();
    const unsigned m = j.at("m").get<unsigned>();
    if (j.contains("modulus")) return Field::make(p, m, j.at("modulus").get<std::vector<uint64_t>>());
    return Field::make(p, m);
}

nlohmann::json element_to_json(const FieldElement& e) { return e.digits(); }

FieldElement element_from_json(const FieldPtr& field, const nlohmann::json& j) {
    return field->from_digits(j.get<std::vector<uint64_t>>());
}

nlohmann::json poly_to_json(const Polynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (uint64_t c : f.coeffs()) out.push_back(f.field()->digits_of(c));
    return out;
}

Polynomial poly_from_json(const FieldPtr& field, const nlohmann::json& j) {
    std::vector<uint64_t> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(field->code_from_digits(item.get<std::vector<uint64_t>>()));
    return Polynomial(field, std::move(coeffs));
}

nlohmann::json factorization_to_json(const Factorization& f) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [poly, mult] : f.factors()) {
        factors.push_back({{"poly", poly_to_json(poly)}, {"mult", mult}});
    }
    return {{"unit", element_to_json(f.unit())}, {"factors", std::move(factors)}};
}

nlohmann::json genmatrix_to_json(const GeneratorMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Codeword& row : m.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (uint64_t c : row) r.push_back(m.field()->digits_of(c));
        rows.push_back(std::move(r));
    }
    return {{"n", m.length()}, {"rows", std::move(rows)}};
}

nlohmann::json matrix_to_json(const MatrixOverField& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t r = 0; r < m.row_count(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.col_count(); ++c) row.push_back(m.field()->digits_of(m.code_at(r, c)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.row_count()}, {"cols", m.col_count()}, {"entries", std::move(entries)}};
}

nlohmann::json code_to_json(const ConstacyclicCode& code) {
    return {{"lambda", element_to_json(code.lambda())},
            {"n", code.length()},
            {"g", poly_to_json(code.generator())},
            {"exponents", factor_exponents(code)},
            {"dim", code.dimension()}};
}

nlohmann::json decomposition_to_json(const DecompositionResult& result) {
    nlohmann::json components = nlohmann::json::array();
    for (const ConstacyclicCode& c : result.components) components.push_back(code_to_json(c));
    nlohmann::json scalars = nlohmann::json::array();
    for (uint64_t s : result.map.scalar_codes()) scalars.push_back(result.lambda0.field()->digits_of(s));
    return {{"lambda0", element_to_json(result.lambda0)},
            {"n_prime", result.n_prime},
            {"A", matrix_to_json(result.a)},
            {"sigma", result.map.sigma()},
            {"scalars", std::move(scalars)},
            {"components", std::move(components)}};
}

}  // namespace constacode
