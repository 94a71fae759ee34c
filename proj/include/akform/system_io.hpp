#pragma once

#include <string>

#include <json.hpp>

#include "akform/bases.hpp"
#include "akform/qmatrix.hpp"
#include "akform/vector_field.hpp"

namespace akform {

/// Reports keep insertion order so identical inputs serialize to identical
/// bytes.
using Json = nlohmann::ordered_json;

/// System files carry a field as {"k": ..., "components": [...]} with k+1
/// component polynomials, each a list of {"exponents": [...], "coeff":
/// "p/q"}. Parse failures throw std::invalid_argument naming the offending
/// location.
VectorField system_from_json(const Json& j);
Json system_to_json(const VectorField& x);
VectorField load_system_file(const std::string& path);

Json monomial_to_json(const Monomial& m);
Json polynomial_to_json(const Polynomial& p);
Json vf_to_json(const VectorField& x);
Json matrix_to_json(const QMatrix& m);
Json poly_basis_to_json(const PolyBasis& b);
Json vf_basis_to_json(const VFBasis& b);

/// Canonical report serialization: two-space indent, trailing newline.
std::string dump_report(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace akform
