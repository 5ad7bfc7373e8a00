#pragma once

// JSON forms of the value types. Coefficients travel as decimal strings so
// arbitrary-precision integers survive the round trip.
//
//   QLaurent  {"terms": [{"q": e, "c": "123"}, ...]}           ascending in q
//   QRat      {"num": QLaurent, "den": QLaurent}
//   MultiPoly {"nvars": n+1, "terms": [{"x": [e_0, ...], "coeff": QLaurent}]}
//   Alphabet  {"nvars": n+1, "plus": [{"q": j, "x": i|null}], "minus": [...]}
//   CTQuery   {"n": n, "v": [...], "lambda": [...], "a": [...], "m": m}
//   Report    {"checked": N, "violations": [...], "elapsed_s": t}

#include <json.hpp>

#include "qdyson/dyson.hpp"
#include "qdyson/suites.hpp"
#include "qdyson/symfunc.hpp"

namespace qdyson {

using Json = nlohmann::json;

Json to_json(const QLaurent& f);
Json to_json(const QRat& f);
Json to_json(const MultiPoly& f);
Json to_json(const Alphabet& x);
Json to_json(const CTQuery& q);
Json to_json(const Violation& v);
Json to_json(const Report& r);

// All parsers throw UsageError on malformed input. query_from_json checks
// shape only; call CTQuery::validate() before computing with the result.
QLaurent qlaurent_from_json(const Json& j);
QRat qrat_from_json(const Json& j);
MultiPoly multipoly_from_json(const Json& j);
Alphabet alphabet_from_json(const Json& j);
CTQuery query_from_json(const Json& j);
Violation violation_from_json(const Json& j);
Report report_from_json(const Json& j);

}  // namespace qdyson
