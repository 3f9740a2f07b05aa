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

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excessive/bf.hpp"
#include "excessive/coloring.hpp"
#include "excessive/connectivity.hpp"
#include "excessive/cover.hpp"
#include "excessive/cycles.hpp"
#include "excessive/fractional.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"
#include "excessive/solver.hpp"

namespace excessive {

enum class Strategy { Coloring, DisjointMN, Oddness2, Oddness4, ThreeStar, Circumference, BF5, ExactFallback };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Coloring: return "coloring";
    case Strategy::DisjointMN: return "disjoint_MN";
    case Strategy::Oddness2: return "oddness2";
    case Strategy::Oddness4: return "oddness4";
    case Strategy::ThreeStar: return "three_star";
    case Strategy::Circumference: return "circumference";
    case Strategy::BF5: return "bf5";
    case Strategy::ExactFallback: return "exact_fallback";
  }
  return "?";
}

struct StrategyOutcome {
  Strategy strategy = Strategy::Coloring;
  Cover cover;
  std::vector<std::string> trace;
  std::optional<FractionalPM> fractional;  // set by the four-odd-circuit construction
};

namespace detail {

inline std::string edge_str(Graph const& g, EdgeId e) {
  return "[" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "]";
}

inline std::string set_str(Graph const& g, EdgeSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + edge_str(g, s[i]);
  return out + "}";
}

inline std::string named(Graph const& g, std::string const& name, EdgeSet const& s) {
  return name + " (" + std::to_string(s.size()) + ") = " + set_str(g, s);
}

// Rebalances to n-1 and checks the result; a failure here is a bug.
inline Cover finish_cover(Graph const& g, Cover c, std::vector<std::string> const& trace) {
  const int target = g.order() / 2 - 1;
  c = rebalance_cover(g, std::move(c), target);
  if (auto v = verify_cover(g, c, target); !v) {
    std::string all;
    for (auto const& t : trace) all += "\n  " + t;
    throw Error(ErrorCode::StructureViolation, "constructed cover does not verify: " + v.diagnostic + all);
  }
  return c;
}

[[noreturn]] inline void structure_violation(std::string const& what, std::vector<std::string> const& trace) {
  std::string all;
  for (auto const& t : trace) all += "\n  " + t;
  throw Error(ErrorCode::StructureViolation, what + all);
}

// Proper 2-coloring of a subgraph whose components are paths and even
// cycles. Paths are colored from their lower-index end.
inline std::pair<EdgeSet, EdgeSet> two_color(Graph const& g, EdgeSet const& h,
                                             std::vector<std::string> const& trace) {
  std::vector<std::vector<EdgeId>> at(static_cast<std::size_t>(g.order()));
  for (EdgeId e : h) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (auto const& a : at)
    if (a.size() > 2) structure_violation("subgraph to 2-color has a vertex of degree > 2", trace);
  std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
  auto walk = [&](Vertex start, EdgeId first) {
    Vertex x = start;
    EdgeId e = first;
    int c = 0;
    while (e >= 0 && color[e] < 0) {
      color[e] = c;
      c ^= 1;
      x = g.neighbor(x, e);
      EdgeId next = -1;
      for (EdgeId f : at[x])
        if (f != e) next = f;
      if (next >= 0 && color[next] >= 0) {
        if (color[next] == color[e]) structure_violation("odd cycle in subgraph to 2-color", trace);
        break;
      }
      e = next;
    }
  };
  for (Vertex v = 0; v < g.order(); ++v)
    if (at[v].size() == 1 && color[at[v][0]] < 0) walk(v, at[v][0]);
  for (EdgeId e : h)
    if (color[e] < 0) walk(g.edge(e).u, e);
  std::pair<EdgeSet, EdgeSet> out;
  for (EdgeId e : h) (color[e] == 0 ? out.first : out.second).push_back(e);
  return out;
}

inline void require_order8(Graph const& g) {
  if (g.order() < 8) throw Error(ErrorCode::OrderTooSmall, "construction needs order >= 8");
}

}  // namespace detail

/// Four [n-1]-matchings from a 3-edge-coloring M1, M2, M3 and the first
/// n-4 edges of M1.
inline StrategyOutcome cover_from_coloring(Graph const& g, ThreeColoring const& col,
                                           std::vector<std::string> trace = {}) {
  detail::require_order8(g);
  const int n = g.order() / 2;
  EdgeSet m4(col[0].begin(), col[0].begin() + (n - 4));
  trace.push_back(detail::named(g, "M1", col[0].edges()));
  trace.push_back(detail::named(g, "M2", col[1].edges()));
  trace.push_back(detail::named(g, "M3", col[2].edges()));
  trace.push_back(detail::named(g, "M4 (first n-4 edges of M1)", m4));
  Cover c{{col[0], col[1], col[2], Matching(m4)}, std::nullopt};
  StrategyOutcome out{Strategy::Coloring, detail::finish_cover(g, std::move(c), trace), std::move(trace), std::nullopt};
  return out;
}

inline StrategyOutcome cover_via_coloring(CubicGraph const& g) {
  detail::require_order8(g);
  auto col = three_edge_coloring(g);
  if (!col) throw Error(ErrorCode::NotColorable, "graph is not 3-edge-colorable");
  return cover_from_coloring(g, *col);
}

/// From a perfect matching M and a disjoint [n-1]-matching N.
inline StrategyOutcome cover_via_disjoint_MN(Graph const& g, Matching const& M, Matching const& N,
                                             std::vector<std::string> trace = {}) {
  detail::require_order8(g);
  const int n = g.order() / 2;
  if (!is_perfect(g, M)) throw Error(ErrorCode::PreconditionViolated, "M is not a perfect matching");
  if (!N.valid_in(g) || N.size() != n - 1)
    throw Error(ErrorCode::PreconditionViolated, "N is not an [n-1]-matching");
  if (!set_intersection(M.edges(), N.edges()).empty())
    throw Error(ErrorCode::PreconditionViolated, "M and N intersect");
  trace.push_back(detail::named(g, "M", M.edges()));
  trace.push_back(detail::named(g, "N", N.edges()));
  EdgeSet h = complement(g, set_union(M.edges(), N.edges()));
  trace.push_back(detail::named(g, "H", h));
  auto covered = covered_vertices(g, N.edges());
  std::vector<Vertex> free;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!covered[x]) free.push_back(x);
  const Vertex u = free[0], v = free[1];
  trace.push_back("u = " + std::to_string(u) + ", v = " + std::to_string(v));

  if (auto uv = g.edge_between(u, v); uv && contains(h, *uv)) {
    // N + uv is a perfect matching disjoint from M: a 3-edge-coloring.
    EdgeSet n2 = set_union(N.edges(), {*uv});
    EdgeSet third = complement(g, set_union(M.edges(), n2));
    trace.push_back("u ~ v: N + [u,v] is a perfect matching disjoint from M");
    auto out = cover_from_coloring(g, {M, Matching(n2), Matching(third)}, std::move(trace));
    out.strategy = Strategy::DisjointMN;
    return out;
  }
  std::vector<int> hdeg(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : h) {
    ++hdeg[g.edge(e).u];
    ++hdeg[g.edge(e).v];
  }
  EdgeSet L, at_u, at_v;
  for (EdgeId e : h) {
    auto [a, b] = g.edge(e);
    if (hdeg[a] == 1 && hdeg[b] == 1) L.push_back(e);
    if (a == u || b == u) at_u.push_back(e);
    if (a == v || b == v) at_v.push_back(e);
  }
  if (static_cast<int>(L.size()) != n - 3 || at_u.size() != 2 || at_v.size() != 2)
    detail::structure_violation("H does not have the expected degree profile", trace);
  const EdgeId e1 = at_u[0], e2 = at_u[1], f1 = at_v[0], f2 = at_v[1];
  const EdgeId drop = L.front();
  EdgeSet L1 = set_union(L, normalized({e1, f1}));
  EdgeSet L2 = set_difference(set_union(L, normalized({e2, f2})), {drop});
  trace.push_back(detail::named(g, "L", L));
  trace.push_back("e1 = " + detail::edge_str(g, e1) + ", e2 = " + detail::edge_str(g, e2) +
                  ", f1 = " + detail::edge_str(g, f1) + ", f2 = " + detail::edge_str(g, f2) +
                  ", e = " + detail::edge_str(g, drop));
  trace.push_back(detail::named(g, "L1", L1));
  trace.push_back(detail::named(g, "L2", L2));
  Cover c{{M, N, Matching(L1), Matching(L2)}, std::nullopt};
  if (!c.matchings[2].valid_in(g) || !c.matchings[3].valid_in(g))
    detail::structure_violation("L1 or L2 is not a matching", trace);
  auto cover = detail::finish_cover(g, std::move(c), trace);
  return {Strategy::DisjointMN, std::move(cover), std::move(trace), std::nullopt};
}

/// Largest matching inside a 2-factor: even circuits alternately, odd
/// circuits leave their first vertex exposed.
inline Matching matching_in_two_factor(TwoFactor const& f) {
  EdgeSet out;
  for (auto const& ce : f.cycle_edges) {
    const std::size_t k = ce.size();
    for (std::size_t j = k % 2; j + (k % 2) < k; j += 2) out.push_back(ce[j]);
  }
  return Matching(std::move(out));
}

inline StrategyOutcome cover_via_oddness2(CubicGraph const& g,
                                          std::int64_t pm_budget = kDefaultPerfectMatchingBudget) {
  detail::require_order8(g);
  auto cert = oddness_certificate(g, pm_budget);
  if (cert.oddness == 0) {
    auto out = cover_via_coloring(g);
    out.strategy = Strategy::Oddness2;
    out.trace.insert(out.trace.begin(), "oddness 0: routed to the coloring construction");
    return out;
  }
  if (cert.oddness != 2)
    throw Error(ErrorCode::WrongOddness, "oddness is " + std::to_string(cert.oddness) + ", not 2");
  auto const& F = cert.witness;
  std::vector<std::string> trace;
  trace.push_back(detail::named(g, "F", F.edges) + " with 2 odd circuits");
  Matching N = matching_in_two_factor(F);
  auto out = cover_via_disjoint_MN(g, F.complement, N, std::move(trace));
  out.strategy = Strategy::Oddness2;
  return out;
}

/// Pipeline for a perfect matching M1 whose 2-factor has exactly four odd
/// circuits, on a cyclically 4-connected graph.
inline StrategyOutcome oddness4_pipeline(CubicGraph const& g, Matching const& M1, bool check_gate = true) {
  detail::require_order8(g);
  auto F = two_factor_of(g, M1);
  if (F.odd_count != 4)
    throw Error(ErrorCode::WrongOddness, "2-factor of M1 has " + std::to_string(F.odd_count) + " odd circuits");
  std::vector<std::string> trace;
  trace.push_back(detail::named(g, "M1", M1.edges()));
  trace.push_back(detail::named(g, "F", F.edges));
  auto w = canonical_fractional_pm(g, M1, check_gate);
  trace.push_back("w = 1/5 on M1, 2/5 elsewhere; validated as a fractional perfect matching");
  // In each odd circuit: its lowest-index edge and the lower-index neighbour.
  EdgeSet L;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (std::size_t i = 0; i < F.cycles.size(); ++i) {
    auto const& ce = F.cycle_edges[i];
    if (ce.size() % 2 == 0) continue;
    std::size_t k = static_cast<std::size_t>(std::min_element(ce.begin(), ce.end()) - ce.begin());
    EdgeId prev = ce[(k + ce.size() - 1) % ce.size()], next = ce[(k + 1) % ce.size()];
    EdgeId partner = std::min(prev, next);
    pairs.emplace_back(ce[k], partner);
    L.push_back(ce[k]);
    L.push_back(partner);
  }
  L = normalized(L);
  trace.push_back(detail::named(g, "L", L));
  std::vector<Rational> c(static_cast<std::size_t>(g.size()), Rational(0));
  for (EdgeId e : L) c[e] = 1;
  Matching M2 = max_weight_perfect_matching(g, c);
  trace.push_back(detail::named(g, "M2", M2.edges()));
  const Rational lhs = matching_value(M2, c), rhs = w.dot(c);
  trace.push_back("c.chi(M2) = " + to_string(lhs) + " >= c.w = " + to_string(rhs));
  if (lhs < rhs) detail::structure_violation("max-weight perfect matching below c.w", trace);
  EdgeSet meet = set_intersection(M2.edges(), L);
  if (meet.size() != 4) detail::structure_violation("|M2 & L| = " + std::to_string(meet.size()) + ", expected 4", trace);
  EdgeSet H = set_difference(complement(g, M1.edges()), meet);
  trace.push_back(detail::named(g, "H", H));
  auto [n1, n2] = detail::two_color(g, H, trace);
  const int n = g.order() / 2;
  if (static_cast<int>(n1.size()) != n - 2 || static_cast<int>(n2.size()) != n - 2)
    detail::structure_violation("H does not split into two [n-2]-matchings", trace);
  trace.push_back(detail::named(g, "N1", n1));
  trace.push_back(detail::named(g, "N2", n2));
  Cover cov{{M1, M2, Matching(n1), Matching(n2)}, std::nullopt};
  auto cover = detail::finish_cover(g, std::move(cov), trace);
  return {Strategy::Oddness4, std::move(cover), std::move(trace), std::move(w)};
}

inline StrategyOutcome cover_via_oddness4(CubicGraph const& g,
                                          std::int64_t pm_budget = kDefaultPerfectMatchingBudget) {
  detail::require_order8(g);
  if (!is_cyclically_k_connected(g, 4))
    throw Error(ErrorCode::NotCyclically4Connected, "graph has a cyclic cut of size < 4");
  if (is_three_edge_colorable(g)) throw Error(ErrorCode::WrongOddness, "oddness is 0, not 4");
  std::optional<Matching> m1;
  int best = -1;
  std::int64_t seen = 0;
  bool capped = false;
  for_each_perfect_matching(g, [&](Matching&& pm) {
    if (++seen > pm_budget) {
      capped = true;
      return false;
    }
    int odd = two_factor_of(g, pm).odd_count;
    if (best < 0 || odd < best) best = odd;
    if (odd == 2) return false;
    if (odd == 4 && !m1) m1 = pm;
    return true;
  });
  if (best == 2) throw Error(ErrorCode::WrongOddness, "oddness is 2, not 4");
  if (capped) throw Error(ErrorCode::CapExceeded, "perfect matching budget exhausted");
  if (!m1) throw Error(ErrorCode::WrongOddness, "oddness is " + std::to_string(best) + ", not 4");
  return oddness4_pipeline(g, *m1);
}

/// From a spanning theta: N is the complement of the theta edges, M
/// alternates the even circuit Q2 + Q3 and the inner part of Q1.
inline StrategyOutcome cover_via_3star(CubicGraph const& g, ThetaWitness w) {
  detail::require_order8(g);
  if (auto bad = theta_violation(g, w)) throw Error(ErrorCode::InvalidWitness, *bad);
  int even = -1;
  for (int i = 0; i < 3 && even < 0; ++i)
    if (w.internal(i) % 2 == 0) even = i;
  if (even < 0) throw Error(ErrorCode::NoEvenPath, "no path with an even number of internal vertices");
  std::swap(w.paths[0], w.paths[even]);
  std::vector<std::string> trace;
  trace.push_back("a = " + std::to_string(w.a) + ", b = " + std::to_string(w.b) +
                  ", r = " + std::to_string(w.internal(0)) + ", s = " + std::to_string(w.internal(1)) +
                  ", t = " + std::to_string(w.internal(2)));
  EdgeSet theta = theta_edges(g, w);
  Matching N(complement(g, theta));
  // C = Q2 followed by Q3 reversed, as a closed vertex walk from a.
  std::vector<Vertex> C = w.paths[1];
  for (auto it = w.paths[2].rbegin() + 1; it + 1 != w.paths[2].rend(); ++it) C.push_back(*it);
  auto ce = cycle_edge_set(g, C);
  EdgeSet M;
  for (std::size_t i = 0; i < ce.size(); i += 2) M.push_back(ce[i]);
  std::vector<Vertex> Q(w.paths[0].begin() + 1, w.paths[0].end() - 1);
  auto qe = path_edges(g, Q);
  for (std::size_t i = 0; i < qe.size(); i += 2) M.push_back(qe[i]);
  trace.push_back("C = Q2 + Q3 of length " + std::to_string(ce.size()) + ", Q of " + std::to_string(qe.size()) +
                  " edges");
  trace.push_back(detail::named(g, "Q", normalized(qe)));
  Matching MM(std::move(M));
  if (MM.size() != g.n() || !MM.valid_in(g))
    detail::structure_violation("alternating C and Q does not give a perfect matching", trace);
  auto out = cover_via_disjoint_MN(g, MM, N, std::move(trace));
  out.strategy = Strategy::ThreeStar;
  return out;
}

inline StrategyOutcome cover_via_3star(CubicGraph const& g, int cap = kDefaultCycleCap) {
  detail::require_order8(g);
  auto w = three_star_witness(g, cap);
  if (!w) throw Error(ErrorCode::InvalidWitness, "graph is not 3*-connected");
  return cover_via_3star(g, *w);
}

/// Circumference at least 2n-2.
inline StrategyOutcome cover_via_circumference(CubicGraph const& g, int cap = kDefaultCycleCap) {
  detail::require_order8(g);
  const int n = g.n();
  auto lc = circumference(g, cap);
  if (lc.length < 2 * n - 2)
    throw Error(ErrorCode::CircumferenceTooSmall, "circumference " + std::to_string(lc.length) + " < 2n-2");
  std::vector<std::string> head{"circumference " + std::to_string(lc.length)};
  if (lc.length == 2 * n) {
    // Hamiltonian: alternate the cycle, chords form the third class.
    auto ce = cycle_edge_set(g, lc.cycle);
    EdgeSet a, b;
    for (std::size_t i = 0; i < ce.size(); ++i) (i % 2 ? b : a).push_back(ce[i]);
    EdgeSet chords = complement(g, normalized(ce));
    head.push_back("C Hamiltonian: alternate C, chords form the third color");
    auto out = cover_from_coloring(g, {Matching(a), Matching(b), Matching(chords)}, head);
    out.strategy = Strategy::Circumference;
    return out;
  }
  if (lc.length == 2 * n - 1) {
    head.push_back("circumference 2n-1: graph is 3*-connected");
    auto out = cover_via_3star(g, cap);
    out.strategy = Strategy::Circumference;
    out.trace.insert(out.trace.begin(), head.begin(), head.end());
    return out;
  }
  auto const& C = lc.cycle;
  auto ce = cycle_edge_set(g, C);
  EdgeSet M1, N;
  for (std::size_t i = 0; i < ce.size(); ++i) (i % 2 ? N : M1).push_back(ce[i]);
  M1 = normalized(M1);
  N = normalized(N);
  std::vector<char> on_c(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : C) on_c[x] = 1;
  std::vector<Vertex> out_c;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!on_c[x]) out_c.push_back(x);
  const Vertex u = out_c[0], v = out_c[1];
  std::vector<std::string> trace = head;
  trace.push_back("C = cycle of length 2n-2, u = " + std::to_string(u) + ", v = " + std::to_string(v));
  trace.push_back(detail::named(g, "M1", M1));
  trace.push_back(detail::named(g, "N", N));
  if (auto uv = g.edge_between(u, v)) {
    trace.push_back("u ~ v: M = M1 + [u,v]");
    auto out = cover_via_disjoint_MN(g, Matching(set_union(M1, {*uv})), Matching(N), std::move(trace));
    out.strategy = Strategy::Circumference;
    return out;
  }
  EdgeSet L;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (on_c[g.edge(e).u] && on_c[g.edge(e).v] && !contains(M1, e) && !contains(N, e)) L.push_back(e);
  trace.push_back(detail::named(g, "L (chords of C)", L));
  if (static_cast<int>(L.size()) != n - 4) detail::structure_violation("chords of C are not an [n-4]-matching", trace);
  std::vector<int> side(static_cast<std::size_t>(g.order()), 0);  // 1: adjacent to u, 2: adjacent to v
  std::vector<Vertex> nu, nv;
  for (EdgeId e : g.incident(u)) {
    nu.push_back(g.neighbor(u, e));
    side[nu.back()] = 1;
  }
  for (EdgeId e : g.incident(v)) {
    nv.push_back(g.neighbor(v, e));
    side[nv.back()] = 2;
  }
  std::sort(nu.begin(), nu.end());
  std::sort(nv.begin(), nv.end());
  // Components of M1 + L: walk the odd paths from their ends.
  EdgeSet ml = set_union(M1, L);
  std::vector<std::vector<EdgeId>> at(static_cast<std::size_t>(g.order()));
  for (EdgeId e : ml) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  std::optional<std::pair<Vertex, Vertex>> ends;
  for (Vertex s : nu) {
    Vertex x = s;
    EdgeId via = -1;
    for (;;) {
      EdgeId nxt = -1;
      for (EdgeId f : at[x])
        if (f != via) nxt = f;
      if (nxt < 0) break;
      via = nxt;
      x = g.neighbor(x, nxt);
    }
    if (side[x] == 2) {
      ends = std::pair{s, x};
      break;
    }
  }
  if (!ends) detail::structure_violation("no odd path of M1 + L joins a neighbour of u to one of v", trace);
  const Vertex u1 = ends->first, v1 = ends->second;
  Vertex u2 = -1, v2 = -1;
  for (Vertex x : nu)
    if (x != u1 && u2 < 0) u2 = x;
  for (Vertex x : nv)
    if (x != v1 && v2 < 0) v2 = x;
  trace.push_back("u1 = " + std::to_string(u1) + ", u2 = " + std::to_string(u2) + ", v1 = " + std::to_string(v1) +
                  ", v2 = " + std::to_string(v2));
  EdgeSet H = ml;
  for (auto [x, y] : {std::pair{u, u1}, std::pair{u, u2}, std::pair{v, v1}, std::pair{v, v2}})
    H.push_back(*g.edge_between(x, y));
  H = normalized(H);
  trace.push_back(detail::named(g, "H", H));
  auto [a, b] = detail::two_color(g, H, trace);
  if (a.size() < b.size()) std::swap(a, b);
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n - 1)
    detail::structure_violation("color classes of H are not of sizes n and n-1", trace);
  auto out = cover_via_disjoint_MN(g, Matching(a), Matching(b), std::move(trace));
  out.strategy = Strategy::Circumference;
  return out;
}

/// Two perfect matchings meeting in at most one edge. `intersection` is 0
/// when a disjoint pair exists.
struct NearDisjointPair {
  Matching m1, m2;
  int intersection = 0;
};

inline constexpr int kNearDisjointOrderCap = 40;

/// Exhaustive pair search in enumeration order; nullopt when every pair of
/// perfect matchings shares two or more edges.
inline std::optional<NearDisjointPair> find_near_disjoint_pms(CubicGraph const& g,
                                                              int cap = kNearDisjointOrderCap) {
  if (g.order() > cap)
    throw Error(ErrorCode::CapExceeded, "near-disjoint pair search capped at order " + std::to_string(cap));
  if (auto col = three_edge_coloring(g)) return NearDisjointPair{(*col)[0], (*col)[1], 0};
  auto pms = perfect_matchings(g);
  for (std::size_t i = 0; i < pms.size(); ++i)
    for (std::size_t j = i + 1; j < pms.size(); ++j)
      if (set_intersection(pms[i].edges(), pms[j].edges()).size() <= 1) {
        int k = static_cast<int>(set_intersection(pms[i].edges(), pms[j].edges()).size());
        return NearDisjointPair{pms[i], pms[j], k};
      }
  return std::nullopt;
}

/// Disjoint-pair pipeline on a near-disjoint pair: M = M1, N = M2 minus the
/// shared edge.
inline StrategyOutcome cover_via_near_disjoint(CubicGraph const& g, NearDisjointPair const& p) {
  std::vector<std::string> trace;
  trace.push_back(detail::named(g, "M1", p.m1.edges()));
  trace.push_back(detail::named(g, "M2", p.m2.edges()));
  EdgeSet shared = set_intersection(p.m1.edges(), p.m2.edges());
  if (shared.size() > 1) throw Error(ErrorCode::PreconditionViolated, "M1 and M2 share more than one edge");
  EdgeSet n = p.m2.edges();
  if (shared.empty()) {
    n.erase(n.begin());
    trace.push_back("M1, M2 disjoint; N = M2 minus its first edge");
  } else {
    n = set_difference(n, shared);
    trace.push_back("e = " + detail::edge_str(g, shared[0]) + "; N = M2 - e");
  }
  return cover_via_disjoint_MN(g, p.m1, Matching(n), std::move(trace));
}

/// Five [n-1]-matchings from a Berge-Fulkerson cover.
inline StrategyOutcome cover_via_bf5(CubicGraph const& g, std::array<Matching, 5> const& pms) {
  auto cover = bf5_to_cover(g, pms);
  std::vector<std::string> trace;
  for (int i = 0; i < 5; ++i) trace.push_back(detail::named(g, "P" + std::to_string(i + 1), pms[i].edges()));
  trace.push_back("deleted doubly covered edges once, rebalanced to n-1");
  return {Strategy::BF5, std::move(cover), std::move(trace), std::nullopt};
}

/// Caps used by the dispatcher so that every strategy either answers or
/// fails quickly.
struct DispatchOptions {
  std::int64_t budget = default_budget();
  std::int64_t pm_budget = 200'000;
  int structure_cap = kDefaultCycleCap;
  std::int64_t bf_budget = kDefaultBergeFulkersonBudget;
  bool exact_fallback = true;
};

struct DispatchFailure {
  Strategy strategy;
  std::string reason;
};

/// Tries the constructions in fixed order and returns the first success.
/// Throws AllStrategiesFailed listing every reason.
inline StrategyOutcome cover4_dispatch(CubicGraph const& g, std::optional<int> m_override = std::nullopt,
                                       DispatchOptions const& opt = {}) {
  if (!bridges(g).empty()) throw Error(ErrorCode::HasBridge, "dispatcher needs a 3-graph");
  const int m = m_override.value_or(g.n() - 1);
  std::vector<DispatchFailure> failures;
  auto attempt = [&](Strategy s, auto&& f) -> std::optional<StrategyOutcome> {
    try {
      auto out = f();
      out.strategy = s;
      return out;
    } catch (Error const& e) {
      failures.push_back({s, e.what()});
      return std::nullopt;
    }
  };
  if (m == g.n() - 1) {
    detail::require_order8(g);
    if (auto r = attempt(Strategy::Coloring, [&] {
          auto col = three_edge_coloring(g, opt.budget);
          if (!col) throw Error(ErrorCode::NotColorable, "graph is not 3-edge-colorable");
          return cover_from_coloring(g, *col);
        }))
      return *r;
    if (auto r = attempt(Strategy::Oddness2, [&] { return cover_via_oddness2(g, opt.pm_budget); })) return *r;
    if (auto r = attempt(Strategy::Oddness4, [&] {
          if (g.order() > opt.structure_cap) throw Error(ErrorCode::CapExceeded, "order above structure cap");
          return cover_via_oddness4(g, opt.pm_budget);
        }))
      return *r;
    if (auto r = attempt(Strategy::ThreeStar, [&] { return cover_via_3star(g, opt.structure_cap); })) return *r;
    if (auto r = attempt(Strategy::Circumference, [&] { return cover_via_circumference(g, opt.structure_cap); }))
      return *r;
    if (auto r = attempt(Strategy::DisjointMN, [&] {
          auto p = find_near_disjoint_pms(g, opt.structure_cap);
          if (!p) throw Error(ErrorCode::PreconditionViolated, "no pair of perfect matchings meets in <= 1 edge");
          return cover_via_near_disjoint(g, *p);
        }))
      return *r;
  }
  if (opt.exact_fallback)
    if (auto r = attempt(Strategy::ExactFallback, [&] {
        SolverOptions so;
        so.budget = opt.budget;
        auto res = excessive_index(g, m, so);
        if (res.exact && res.value.is_infinite())
          throw Error(ErrorCode::PreconditionViolated, "index is infinite: an edge lies in no [m]-matching");
        if (!res.exact || !res.certificate_upper)
          throw Error(ErrorCode::CapExceeded, "exact search stopped with bounds [" + std::to_string(res.lower) + ", " +
                                                  (res.upper ? std::to_string(*res.upper) : "?") + "]");
        StrategyOutcome out{Strategy::ExactFallback, *res.certificate_upper, {}, std::nullopt};
        out.trace.push_back("exact search, value " + res.value.str());
        return out;
      }))
    return *r;
  if (m == g.n() - 1) {
    if (auto r = attempt(Strategy::BF5, [&] {
          auto bf = find_berge_fulkerson_cover(g, opt.bf_budget);
          if (!bf) throw Error(ErrorCode::NotBergeFulkersonCover, "no Berge-Fulkerson cover found within budget");
          return cover_via_bf5(g, *bf);
        }))
      return *r;
  }
  std::string why;
  for (auto const& f : failures) why += std::string("\n  ") + to_string(f.strategy) + ": " + f.reason;
  throw Error(ErrorCode::AllStrategiesFailed, "no strategy produced a cover:" + why);
}

}  // namespace excessive
