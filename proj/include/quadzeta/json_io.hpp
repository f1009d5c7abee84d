#pragma once

#include <json.hpp>

#include "quadzeta/arcspace.hpp"
#include "quadzeta/inertia.hpp"
#include "quadzeta/laurent.hpp"
#include "quadzeta/polynomial.hpp"
#include "quadzeta/series.hpp"
#include "quadzeta/set_expression.hpp"

// JSON encodings:
//   LaurentPolynomial  [[exponent, "coefficient"], ...]    ascending exponent
//   TruncatedSeries    {"order": N, "terms": [[n, <polynomial>], ...]}
//   SetExpression      {"atom": "quadric_affine", "c": 1, "s": 2, "t": 1}
//                      {"op": "product", "children": [...]}
//   PolynomialGerm     {"nvars": d, "terms": [[[e1, ..., ed], "p/q"], ...]}
// Decoders throw Error(SyntaxError) on shape errors and MalformedExpression
// on invalid set expressions.

namespace quadzeta::json_io {

using json = nlohmann::json;

json encode(const LaurentPolynomial& p);
json encode(const TruncatedSeries& series);
json encode(const SetExpression& expression);
json encode(const PolynomialGerm& germ);
json encode(const Inertia& inertia);
json encode(const ArcStratumReport& report);

LaurentPolynomial decode_laurent(const json& value);
TruncatedSeries decode_series(const json& value);
SetExpression decode_set_expression(const json& value);
PolynomialGerm decode_germ(const json& value);

} // namespace quadzeta::json_io
