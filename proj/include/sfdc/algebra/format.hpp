#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sfdc/algebra/field_elem.hpp"

namespace sfdc {

enum class ThetaStyle { unicode, ascii };

// Canonical string form, e.g. "θ^2 + (n-1)*K*θ". Terms follow the canonical
// order; coefficients are written in front, parenthesized unless they are
// integers, and a negative leading coefficient becomes a minus sign.
std::string to_string(const DiagramPoly& p, ThetaStyle style = ThetaStyle::unicode);
std::string to_string(const NumericPoly& p, ThetaStyle style = ThetaStyle::unicode);
std::string to_string(const SymbolicElem& e, ThetaStyle style = ThetaStyle::unicode);
std::string to_string(const NumericElem& e, ThetaStyle style = ThetaStyle::unicode);

// Parses an expression in n, K and θ (or its ASCII alias t) built from
// integers, + - * / ^ and parentheses. Division is only allowed by θ- and
// K-free subexpressions. Throws ParseError.
DiagramPoly parse_poly(std::string_view text);

// JSON form: list of {a, b, num_coeffs, den_coeffs}; a is the θ-degree, b the
// K-degree, coefficient lists hold rationals as strings, ascending in n.
nlohmann::json to_json(const DiagramPoly& p);
DiagramPoly diagram_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFunN& r);
RatFunN ratfun_from_json(const nlohmann::json& j);

}  // namespace sfdc
