#pragma once

#include "abelrat/diagram.hpp"

#include <json.hpp>

#include <array>
#include <string>

namespace abelrat {

using Json = nlohmann::ordered_json;

// Expression over t: +, -, *, ^, parentheses, rational literals p/q. Whitespace is ignored.
// Throws ParseError with the position inside the expression (line 1 unless it spans lines).
RatPoly parse_polynomial(const std::string& text);

// Array of "p/q" strings (index = power) or an expression string.
RatPoly poly_from_json(const Json& j);
Json poly_to_json(const RatPoly& p);
Json rational_to_json(const Rational& q);

// "2,4,6" -> {2, 4, 6}. Throws ParseError.
std::array<int, 3> parse_exponents(const std::string& text);

// Throws ParseError on malformed JSON or coefficient expressions, InvalidEquation on invalid content.
AbelEquation parse_equation_document(const std::string& text);
AbelEquation equation_from_json(const Json& doc);
Json equation_to_json(const AbelEquation& eq);

}  // namespace abelrat
