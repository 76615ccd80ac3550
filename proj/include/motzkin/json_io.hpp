#pragma once

#include <string>

#include "json.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

using Json = nlohmann::ordered_json;

/// Variable names of the JSON schema, in exponent order.
const std::array<std::string, kNumPublicVars>& json_variable_names();

/// { "variables": [...], "terms": [ { "coeff": "n/d", "exp": [...], "q": "A2/2" } ] }
/// in ascending grlex order. Throws IndexOutOfRange for the auxiliary variables.
Json poly_to_json(const Poly& p);
/// Inverse of poly_to_json; the "q" field is ignored.
Poly poly_from_json(const Json& doc);

/// { "order": L, "coefficients": [ poly documents by length ] }
Json series_to_json(const Series& s);
Series series_from_json(const Json& doc);

/// Exact rational from "n", "n/d" or "-n/d". Throws IndexOutOfRange.
Rational parse_rational(const std::string& text);
/// Always "n/d".
std::string format_rational(const Rational& r);

}  // namespace motzkin
