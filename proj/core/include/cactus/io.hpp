#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cactus/reduce.hpp"

namespace cactus::io {

using json = nlohmann::json;

json field_to_json(const FieldSpec& fs);
FieldSpec field_from_json(const json& j);

// Scalars: canonical residues as JSON integers over F_p, strings in lowest
// terms ("a" or "a/b") over the rationals.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, FieldSpec fs);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, FieldSpec fs);

json mat_to_json(const Mat& m);  // row-major array of rows
Mat mat_from_json(const json& j, FieldSpec fs, std::size_t rows, std::size_t cols);

json subspace_to_json(const Subspace& u);  // canonical basis rows

json algebra_to_json(const LocalAlgebra& a);  // table descriptor
// Accepts {"kind":"table"|"jet"|"point"|"monomial_quotient", ...}.
LocalAlgebra algebra_from_json(const json& j, FieldSpec fs);

json scheme_to_json(const EmbeddedFiniteScheme& r);

struct ParsedScheme {
  EmbeddedFiniteScheme scheme;
  std::optional<Subspace> plane;
};
ParsedScheme scheme_from_json(const json& j);

json trace_to_json(const ShrinkTrace& t);

// Content digest (FNV-1a over the canonical serialization).
std::string digest(const EmbeddedFiniteScheme& r);

Subspace plane_from_rows(const json& rows, FieldSpec fs, std::size_t ambient);
// Inline syntax: semicolon-separated rows of comma-separated scalars.
Subspace plane_from_inline(const std::string& text, FieldSpec fs, std::size_t ambient);

}  // namespace cactus::io
