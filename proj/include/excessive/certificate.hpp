// Copyright 2026 The Excessive Index Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON certificates. Edges are written as endpoint pairs so a certificate
// does not depend on the edge numbering of the reader.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "excessive/constructions.hpp"
#include "excessive/cover.hpp"
#include "excessive/fractional.hpp"
#include "excessive/graph6.hpp"
#include "excessive/solver.hpp"

namespace excessive {

inline constexpr int kCertificateSchema = 1;

using Json = nlohmann::ordered_json;

struct Certificate {
  std::string graph6;
  int m = 0;
  std::optional<int> value;  // absent when infinite
  bool infinite = false;
  bool exact = false;
  int lower = 0;
  std::optional<int> upper;
  std::optional<Cover> cover;
  std::optional<LowerBoundCert> lower_cert;
  std::optional<EdgeId> non_extendable_edge;
  std::optional<std::string> strategy;
  std::vector<std::string> trace;
  std::optional<FractionalPM> fractional;
};

namespace detail {

inline Json edge_json(Graph const& g, EdgeId e) { return Json::array({g.edge(e).u, g.edge(e).v}); }

inline Json edges_json(Graph const& g, EdgeSet const& s) {
  Json a = Json::array();
  for (EdgeId e : s) a.push_back(edge_json(g, e));
  return a;
}

[[noreturn]] inline void schema(std::string const& what) { throw Error(ErrorCode::Schema, what); }

inline EdgeId edge_from_json(Graph const& g, Json const& j, std::string const& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    schema(where + ": expected an endpoint pair [u, v]");
  const int u = j[0].get<int>(), v = j[1].get<int>();
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    schema(where + ": vertex out of range in [" + std::to_string(u) + "," + std::to_string(v) + "]");
  auto e = g.edge_between(u, v);
  if (!e) schema(where + ": [" + std::to_string(u) + "," + std::to_string(v) + "] is not an edge");
  return *e;
}

inline Rational rational_from_string(std::string const& s, std::string const& where) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(s.substr(0, slash), &used);
    if (used != s.substr(0, slash).size()) schema(where + ": bad rational '" + s + "'");
    long long den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1 || den == 0) schema(where + ": bad rational '" + s + "'");
    }
    return Rational(num, den);
  } catch (std::logic_error const&) {
    schema(where + ": bad rational '" + s + "'");
  }
}

}  // namespace detail

inline Json lower_cert_json(Graph const& g, LowerBoundCert const& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["bound"] = c.bound;
  if (c.kind == LowerBoundKind::Exclusion) j["edges"] = detail::edges_json(g, c.exclusion_edges);
  if (c.kind == LowerBoundKind::Exhaustion) {
    j["refuted"] = c.refuted;
    j["search_nodes"] = c.search_nodes;
  }
  return j;
}

inline Json to_json(Graph const& g, Certificate const& c) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["graph6"] = c.graph6.empty() ? write_graph6(g) : c.graph6;
  j["m"] = c.m;
  if (c.infinite)
    j["value"] = "inf";
  else if (c.value)
    j["value"] = *c.value;
  else
    j["value"] = nullptr;
  j["exact"] = c.exact;
  j["lower"] = c.lower;
  if (c.upper) j["upper"] = *c.upper;
  if (c.cover) {
    Json ms = Json::array();
    for (auto const& m : c.cover->matchings) ms.push_back(detail::edges_json(g, m.edges()));
    j["matchings"] = std::move(ms);
  }
  if (c.lower_cert) j["lower_bound"] = lower_cert_json(g, *c.lower_cert);
  if (c.non_extendable_edge) j["non_extendable_edge"] = detail::edge_json(g, *c.non_extendable_edge);
  if (c.strategy) j["strategy"] = *c.strategy;
  if (!c.trace.empty()) j["trace"] = c.trace;
  if (c.fractional) {
    Json w = Json::array();
    for (EdgeId e = 0; e < g.size(); ++e)
      w.push_back(Json::array({g.edge(e).u, g.edge(e).v, to_string(c.fractional->weight[e])}));
    j["fractional_pm"] = std::move(w);
  }
  return j;
}

inline Certificate certificate_of(Graph const& g, int m, IndexResult const& r) {
  Certificate c;
  c.graph6 = write_graph6(g);
  c.m = m;
  c.exact = r.exact;
  c.infinite = r.exact && r.value.is_infinite();
  if (r.exact && !c.infinite) c.value = r.value.get();
  c.lower = r.lower;
  c.upper = r.upper;
  c.cover = r.certificate_upper;
  c.lower_cert = r.certificate_lower;
  c.non_extendable_edge = r.non_extendable_edge;
  return c;
}

/// Certificate for a construction. Exact when the cover meets the counting
/// bound. m is read off the cover (n-1 for every structural strategy).
inline Certificate certificate_of(Graph const& g, StrategyOutcome const& o) {
  Certificate c;
  c.graph6 = write_graph6(g);
  c.m = o.cover.m.value_or(o.cover.matchings.empty() ? g.order() / 2 - 1 : o.cover.matchings.front().size());
  c.cover = o.cover;
  c.upper = o.cover.size();
  c.lower_cert = counting_bound(g, c.m);
  c.lower = c.lower_cert->bound;
  c.exact = c.lower == *c.upper;
  if (c.exact) c.value = *c.upper;
  c.strategy = to_string(o.strategy);
  c.trace = o.trace;
  c.fractional = o.fractional;
  return c;
}

/// Parses a certificate together with its host graph. Throws Schema with the
/// offending field, or graph6 errors for a bad host.
inline std::pair<CubicGraph, Certificate> parse_certificate(Json const& j) {
  using detail::schema;
  if (!j.is_object()) schema("certificate must be a JSON object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    schema("missing schema_version");
  if (j["schema_version"].get<int>() != kCertificateSchema)
    schema("unsupported schema_version " + std::to_string(j["schema_version"].get<int>()));
  if (!j.contains("graph6") || !j["graph6"].is_string()) schema("missing graph6");
  if (!j.contains("m") || !j["m"].is_number_integer()) schema("missing m");
  CubicGraph g = parse_graph6(j["graph6"].get<std::string>());
  Certificate c;
  c.graph6 = j["graph6"].get<std::string>();
  c.m = j["m"].get<int>();
  if (j.contains("value")) {
    auto const& v = j["value"];
    if (v.is_string() && v.get<std::string>() == "inf")
      c.infinite = true;
    else if (v.is_number_integer())
      c.value = v.get<int>();
    else if (!v.is_null())
      schema("value must be an integer, \"inf\" or null");
  }
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean()) schema("exact must be a boolean");
    c.exact = j["exact"].get<bool>();
  }
  if (j.contains("lower")) {
    if (!j["lower"].is_number_integer()) schema("lower must be an integer");
    c.lower = j["lower"].get<int>();
  }
  if (j.contains("upper")) {
    if (!j["upper"].is_number_integer()) schema("upper must be an integer");
    c.upper = j["upper"].get<int>();
  }
  if (j.contains("matchings")) {
    if (!j["matchings"].is_array()) schema("matchings must be an array");
    Cover cov;
    int i = 0;
    for (auto const& mj : j["matchings"]) {
      if (!mj.is_array()) schema("matching " + std::to_string(i) + " must be an array");
      EdgeSet s;
      for (auto const& ej : mj) s.push_back(detail::edge_from_json(g, ej, "matching " + std::to_string(i)));
      // Keep duplicates visible to the verifier instead of silently merging.
      auto sorted = normalized(s);
      if (sorted.size() != s.size()) schema("matching " + std::to_string(i) + " lists an edge twice");
      cov.matchings.emplace_back(std::move(s));
      ++i;
    }
    cov.m = c.m;
    c.cover = std::move(cov);
  }
  if (j.contains("lower_bound")) {
    auto const& lj = j["lower_bound"];
    if (!lj.is_object() || !lj.contains("kind") || !lj["kind"].is_string() || !lj.contains("bound") ||
        !lj["bound"].is_number_integer())
      schema("lower_bound needs kind and bound");
    LowerBoundCert lc;
    const auto kind = lj["kind"].get<std::string>();
    if (kind == "counting") {
      lc.kind = LowerBoundKind::Counting;
    } else if (kind == "exclusion") {
      lc.kind = LowerBoundKind::Exclusion;
      if (!lj.contains("edges") || !lj["edges"].is_array()) schema("exclusion bound needs edges");
      for (auto const& ej : lj["edges"]) lc.exclusion_edges.push_back(detail::edge_from_json(g, ej, "lower_bound"));
      lc.exclusion_edges = normalized(lc.exclusion_edges);
    } else if (kind == "exhaustion") {
      lc.kind = LowerBoundKind::Exhaustion;
      if (!lj.contains("refuted") || !lj["refuted"].is_number_integer()) schema("exhaustion bound needs refuted");
      lc.refuted = lj["refuted"].get<int>();
      if (lj.contains("search_nodes") && lj["search_nodes"].is_number_integer())
        lc.search_nodes = lj["search_nodes"].get<std::int64_t>();
    } else {
      schema("unknown lower_bound kind '" + kind + "'");
    }
    lc.bound = lj["bound"].get<int>();
    c.lower_cert = lc;
  }
  if (j.contains("non_extendable_edge"))
    c.non_extendable_edge = detail::edge_from_json(g, j["non_extendable_edge"], "non_extendable_edge");
  if (j.contains("strategy")) {
    if (!j["strategy"].is_string()) schema("strategy must be a string");
    c.strategy = j["strategy"].get<std::string>();
  }
  if (j.contains("trace")) {
    if (!j["trace"].is_array()) schema("trace must be an array");
    for (auto const& t : j["trace"]) {
      if (!t.is_string()) schema("trace entries must be strings");
      c.trace.push_back(t.get<std::string>());
    }
  }
  if (j.contains("fractional_pm")) {
    if (!j["fractional_pm"].is_array()) schema("fractional_pm must be an array");
    FractionalPM w;
    w.weight.assign(static_cast<std::size_t>(g.size()), Rational(0));
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (auto const& ej : j["fractional_pm"]) {
      if (!ej.is_array() || ej.size() != 3 || !ej[2].is_string()) schema("fractional_pm entries are [u, v, \"p/q\"]");
      EdgeId e = detail::edge_from_json(g, Json::array({ej[0], ej[1]}), "fractional_pm");
      w.weight[e] = detail::rational_from_string(ej[2].get<std::string>(), "fractional_pm");
      seen[e] = 1;
    }
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!seen[e]) schema("fractional_pm misses edge " + describe_edge(g, e));
    c.fractional = std::move(w);
  }
  return {std::move(g), std::move(c)};
}

inline std::pair<CubicGraph, Certificate> parse_certificate(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  return parse_certificate(j);
}

/// Checks every claim a certificate makes. Exhaustion bounds are re-derived
/// by search within `budget`.
inline Verdict verify_certificate(CubicGraph const& g, Certificate const& c,
                                  std::int64_t budget = default_budget()) {
  if (c.m < 1 || c.m > g.n()) return Verdict::fail("m = " + std::to_string(c.m) + " outside [1, n]");
  if (c.infinite) {
    if (!c.non_extendable_edge) return Verdict::fail("infinite value without a non-extendable edge");
    if (extendable(g, {*c.non_extendable_edge}, c.m))
      return Verdict::fail("edge " + describe_edge(g, *c.non_extendable_edge) + " lies in some [" +
                           std::to_string(c.m) + "]-matching");
    return Verdict::pass();
  }
  if (c.cover) {
    if (auto v = verify_cover(g, *c.cover, c.m); !v) return v;
    if (c.upper && *c.upper != c.cover->size())
      return Verdict::fail("upper bound " + std::to_string(*c.upper) + " differs from the cover size " +
                           std::to_string(c.cover->size()));
  } else if (c.upper) {
    return Verdict::fail("upper bound without a cover");
  }
  if (c.lower_cert) {
    if (auto v = verify_exhaustion(g, c.m, *c.lower_cert, budget); !v) return Verdict::fail("lower bound: " + v.diagnostic);
    if (c.lower_cert->bound < c.lower)
      return Verdict::fail("lower bound certificate gives " + std::to_string(c.lower_cert->bound) + " < claimed " +
                           std::to_string(c.lower));
  } else if (c.lower > 0) {
    return Verdict::fail("lower bound without a certificate");
  }
  if (c.exact) {
    if (!c.value || !c.cover) return Verdict::fail("exact value needs a value and a cover");
    if (c.cover->size() != *c.value)
      return Verdict::fail("cover has " + std::to_string(c.cover->size()) + " matchings, value is " +
                           std::to_string(*c.value));
    if (c.lower != *c.value)
      return Verdict::fail("lower bound " + std::to_string(c.lower) + " does not meet the value " +
                           std::to_string(*c.value));
  }
  if (c.fractional)
    if (auto bad = fractional_pm_violation(g, *c.fractional)) return Verdict::fail("fractional_pm: " + *bad);
  return Verdict::pass();
}

}  // namespace excessive
