#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ses/pencils.hpp"

namespace ses {

inline constexpr int kSchemaVersion = 1;

nlohmann::json pencil_to_json(const AltPencil& P);
AltPencil pencil_from_json(const nlohmann::json& j);

AltPencil load_pencil(const std::string& path);
void save_pencil(const AltPencil& P, const std::string& path);

/// Parses "x^2+2x+1" style univariate polynomials.  Coefficients are
/// reduced into the field unless strict, which rejects out-of-range ones.
UniPoly parse_poly(const std::string& text, const FieldSpec& F, bool strict);

std::string poly_to_string(const UniPoly& f);
/// Prints with variables X, Y, Z, then X3, X4, ...
std::string form_to_string(const HomForm& f);

}  // namespace ses
