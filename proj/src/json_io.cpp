#include "qdyson/json_io.hpp"

#include <string>

namespace qdyson {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw UsageError("malformed integer string \"" + s + "\"");
  return z;
}

IntVec int_array(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an integer array");
  return j.get<IntVec>();
}

}  // namespace

Json to_json(const QLaurent& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"q", e}, {"c", c.get_str()}});
  return {{"terms", std::move(terms)}};
}

Json to_json(const QRat& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"x", e}, {"coeff", to_json(c)}});
  return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

Json to_json(const Alphabet& x) {
  auto letters = [](const std::vector<Letter>& ls) {
    Json out = Json::array();
    for (const auto& l : ls) out.push_back({{"q", l.qexp}, {"x", l.var ? Json(*l.var) : Json(nullptr)}});
    return out;
  };
  return {{"nvars", x.nvars()}, {"plus", letters(x.plus())}, {"minus", letters(x.minus())}};
}

Json to_json(const CTQuery& q) {
  return {{"n", q.n}, {"v", q.v}, {"lambda", q.lambda}, {"a", q.a}, {"m", q.m}};
}

Json to_json(const Violation& v) {
  Json j = {{"query", to_json(v.query)}, {"got", to_json(v.got)}};
  j["expected"] = v.expected ? to_json(*v.expected) : Json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const Report& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return {{"checked", r.checked}, {"violations", std::move(vs)}, {"elapsed_s", r.elapsed_s}};
}

QLaurent qlaurent_from_json(const Json& j) {
  return guarded("QLaurent", [&] {
    std::vector<QLaurent::Term> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("q").get<int>(), parse_integer(t.at("c").get<std::string>()));
    return QLaurent::from_terms(std::move(terms));
  });
}

QRat qrat_from_json(const Json& j) {
  return guarded("QRat", [&] {
    QLaurent den = qlaurent_from_json(j.at("den"));
    if (den.is_zero()) throw UsageError("QRat JSON with zero denominator");
    return QRat(qlaurent_from_json(j.at("num")), std::move(den));
  });
}

MultiPoly multipoly_from_json(const Json& j) {
  return guarded("MultiPoly", [&] {
    MultiPoly f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) f.add_term(int_array(t.at("x")), qlaurent_from_json(t.at("coeff")));
    return f;
  });
}

Alphabet alphabet_from_json(const Json& j) {
  return guarded("Alphabet", [&] {
    auto letters = [](const Json& arr) {
      std::vector<Letter> out;
      for (const auto& l : arr) {
        Letter x{l.at("q").get<int>(), std::nullopt};
        if (!l.at("x").is_null()) x.var = l.at("x").get<int>();
        out.push_back(x);
      }
      return out;
    };
    return Alphabet(j.at("nvars").get<int>(), letters(j.at("plus")), letters(j.at("minus")));
  });
}

CTQuery query_from_json(const Json& j) {
  return guarded("query", [&] {
    CTQuery q;
    q.n = j.at("n").get<int>();
    q.v = int_array(j.at("v"));
    q.lambda = int_array(j.at("lambda"));
    q.a = int_array(j.at("a"));
    q.m = j.at("m").get<int>();
    return q;
  });
}

Violation violation_from_json(const Json& j) {
  return guarded("violation", [&] {
    Violation v;
    v.query = query_from_json(j.at("query"));
    if (!j.at("expected").is_null()) v.expected = qrat_from_json(j.at("expected"));
    v.got = qlaurent_from_json(j.at("got"));
    if (j.contains("note")) v.note = j.at("note").get<std::string>();
    return v;
  });
}

Report report_from_json(const Json& j) {
  return guarded("Report", [&] {
    Report r;
    r.checked = j.at("checked").get<std::size_t>();
    for (const auto& v : j.at("violations")) r.violations.push_back(violation_from_json(v));
    r.elapsed_s = j.at("elapsed_s").get<double>();
    return r;
  });
}

}  // namespace qdyson
