#pragma once

// File formats (all vertices 1-indexed):
//   complex  {"n": 3, "facets": [[1,2],[2,3]], "weights": [1,2]}   weights optional
//   ideal    {"n": 3, "gens": [[1,1,0],[0,1,1]]}
//   basis    {"n": 3, "basis": [{"a": [1,1,0], "k": 1}, ...], "truncated": false}
// Text rendering uses variables x1..xn and t, e.g. x1*x2^2*t^3.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vca/complex.hpp"
#include "vca/error.hpp"
#include "vca/monomial.hpp"

namespace vca::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<Int>();
}

inline std::vector<Int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace detail

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

inline WeightedComplex complex_from_json(const json& j) {
  RawComplex raw;
  raw.n = detail::as_int(detail::field(j, "n"), "n");
  const json& facets = detail::field(j, "facets");
  if (!facets.is_array()) throw InvalidInput("facets must be an array");
  for (const auto& f : facets) raw.facets.push_back(detail::as_int_list(f, "facet"));
  if (j.contains("weights")) raw.weights = detail::as_int_list(j.at("weights"), "weights");
  return validate(raw);
}

inline json complex_to_json(const WeightedComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) {
    json one = json::array();
    for (int v : f) one.push_back(v + 1);
    facets.push_back(one);
  }
  return {{"n", c.n()}, {"facets", facets}, {"weights", c.weights()}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
  const Int n = detail::as_int(detail::field(j, "n"), "n");
  if (n < 1) throw InvalidInput("n must be positive");
  const json& gens = detail::field(j, "gens");
  if (!gens.is_array()) throw InvalidInput("gens must be an array");
  std::vector<ExponentVector> vs;
  for (const auto& g : gens) {
    auto v = detail::as_int_list(g, "generator");
    if (static_cast<Int>(v.size()) != n) throw InvalidInput("generator length differs from n");
    for (Int e : v)
      if (e < 0) throw InvalidInput("negative exponent");
    vs.push_back(std::move(v));
  }
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(vs));
}

inline json ideal_to_json(const MonomialIdeal& i) { return {{"n", i.n()}, {"gens", i.generators()}}; }

inline json cover_point_to_json(const CoverPoint& p) { return {{"a", p.a}, {"k", p.k}}; }

inline CoverPoint cover_point_from_json(const json& j) {
  CoverPoint p;
  p.a = detail::as_int_list(detail::field(j, "a"), "a");
  p.k = detail::as_int(detail::field(j, "k"), "k");
  return p;
}

inline json presentation_to_json(const AlgebraPresentation& p) {
  json basis = json::array();
  for (const auto& g : p.generators) basis.push_back(cover_point_to_json(g));
  return {{"n", p.n}, {"basis", basis}, {"truncated", p.truncated}};
}

inline std::string render_monomial(const ExponentVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string render_cover_point(const CoverPoint& p) {
  std::string t = p.k == 0 ? "" : (p.k == 1 ? "t" : "t^" + std::to_string(p.k));
  std::string m = render_monomial(p.a);
  if (t.empty()) return m;
  return m == "1" ? t : m + "*" + t;
}

inline std::string render_ideal(const MonomialIdeal& i) {
  if (i.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t t = 0; t < i.size(); ++t) s += (t ? ", " : "") + render_monomial(i.generators()[t]);
  return s + ")";
}

/// One generator per line in listing order.
inline std::string presentation_to_text(const AlgebraPresentation& p) {
  std::string out;
  for (const auto& g : p.generators) out += render_cover_point(g) + "\n";
  return out;
}

/// Parses "a1,a2,...,an;k".
inline CoverPoint parse_cover(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw InvalidInput("cover must look like \"a1,...,an;k\"");
  CoverPoint p;
  auto parse_int = [&](const std::string& tok) -> Int {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: \"" + tok + "\"");
    }
    if (used != tok.size()) throw InvalidInput("not an integer: \"" + tok + "\"");
    return v;
  };
  std::stringstream ss(text.substr(0, semi));
  std::string tok;
  while (std::getline(ss, tok, ',')) p.a.push_back(parse_int(tok));
  p.k = parse_int(text.substr(semi + 1));
  for (Int e : p.a)
    if (e < 0) throw InvalidInput("negative cover entry");
  if (p.k < 0) throw InvalidInput("negative order");
  return p;
}

}  // namespace vca::io
