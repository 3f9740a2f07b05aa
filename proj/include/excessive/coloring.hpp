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

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

using ThreeColoring = std::array<Matching, 3>;

inline constexpr std::int64_t kDefaultColoringBudget = 200'000'000;

namespace detail {

class TaitSearch {
 public:
  TaitSearch(Graph const& g, std::int64_t budget)
      : g_(g), budget_(budget), color_(static_cast<std::size_t>(g.size()), -1),
        used_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<std::vector<int>> run() {
    if (g_.size() == 0) return color_;
    // The three edges at vertex 0 may take any fixed permutation.
    auto inc = g_.incident(0);
    for (int c = 0; c < static_cast<int>(inc.size()); ++c)
      if (!paint(inc[c], c)) return std::nullopt;
    if (search()) return color_;
    return std::nullopt;
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  bool paint(EdgeId e, int c) {
    auto [u, v] = g_.edge(e);
    if ((used_[u] | used_[v]) & (1 << c)) return false;
    color_[e] = c;
    used_[u] |= static_cast<std::uint8_t>(1 << c);
    used_[v] |= static_cast<std::uint8_t>(1 << c);
    return true;
  }

  void unpaint(EdgeId e) {
    auto [u, v] = g_.edge(e);
    int c = color_[e];
    used_[u] &= static_cast<std::uint8_t>(~(1 << c));
    used_[v] &= static_cast<std::uint8_t>(~(1 << c));
    color_[e] = -1;
  }

  bool search() {
    if (++nodes_ > budget_) return false;
    EdgeId best = -1;
    int best_free = 4;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (color_[e] >= 0) continue;
      auto [u, v] = g_.edge(e);
      int free = 3 - std::popcount(static_cast<unsigned>(used_[u] | used_[v]));
      if (free < best_free) {
        best_free = free;
        best = e;
        if (free <= 1) break;
      }
    }
    if (best < 0) return true;
    if (best_free == 0) return false;
    for (int c = 0; c < 3; ++c) {
      if (!paint(best, c)) continue;
      if (search()) return true;
      unpaint(best);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  Graph const& g_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<std::uint8_t> used_;
};

}  // namespace detail

/// Partition of E(g) into three perfect matchings, or nullopt when an
/// exhaustive search shows none exists. Throws CapExceeded when the search
/// budget runs out before a verdict.
inline std::optional<ThreeColoring> three_edge_coloring(Graph const& g,
                                                      std::int64_t budget = kDefaultColoringBudget) {
  detail::TaitSearch search(g, budget);
  auto colors = search.run();
  if (!colors) {
    if (search.exhausted())
      throw Error(ErrorCode::CapExceeded, "3-edge-coloring search budget exhausted");
    return std::nullopt;
  }
  std::array<EdgeSet, 3> classes;
  for (EdgeId e = 0; e < g.size(); ++e) classes[(*colors)[e]].push_back(e);
  return ThreeColoring{Matching(classes[0]), Matching(classes[1]), Matching(classes[2])};
}

inline bool is_three_edge_colorable(Graph const& g) { return three_edge_coloring(g).has_value(); }

/// Proper edge coloring with at most max-degree + 1 colors (Misra-Gries).
/// Returns one color per edge.
inline std::vector<int> proper_edge_coloring(Graph const& g) {
  int delta = 0;
  for (Vertex v = 0; v < g.order(); ++v) delta = std::max(delta, g.degree(v));
  const int colors = delta + 1;
  std::vector<int> color(static_cast<std::size_t>(g.size()), -1);

  auto color_at = [&](Vertex x, int c) -> EdgeId {
    for (EdgeId e : g.incident(x))
      if (color[e] == c) return e;
    return -1;
  };
  auto is_free = [&](Vertex x, int c) { return color_at(x, c) < 0; };
  auto a_free = [&](Vertex x) {
    for (int c = 0; c < colors; ++c)
      if (is_free(x, c)) return c;
    return -1;
  };

  for (EdgeId start = 0; start < g.size(); ++start) {
    Vertex u = g.edge(start).u;
    Vertex v = g.edge(start).v;
    // Maximal fan of u starting at v.
    std::vector<Vertex> fan{v};
    std::vector<char> in_fan(static_cast<std::size_t>(g.order()), 0);
    in_fan[v] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.neighbor(u, e);
        if (in_fan[w] || color[e] < 0) continue;
        if (is_free(fan.back(), color[e])) {
          fan.push_back(w);
          in_fan[w] = 1;
          grew = true;
          break;
        }
      }
    }
    int c = a_free(u);
    int d = a_free(fan.back());
    // Invert the cd-path from u (it starts with a d-edge since c is free at u).
    if (c != d) {
      std::vector<EdgeId> path;
      Vertex x = u;
      int want = d;
      EdgeId prev = -1;
      for (;;) {
        EdgeId e = color_at(x, want);
        if (e < 0 || e == prev) break;
        path.push_back(e);
        prev = e;
        x = g.neighbor(x, e);
        want = want == d ? c : d;
      }
      for (EdgeId e : path) color[e] = color[e] == c ? d : c;
    }
    // First fan prefix that is still a fan and ends at a vertex missing d.
    std::size_t w = fan.size();
    for (std::size_t j = 0; j < fan.size(); ++j) {
      bool prefix_ok = true;
      for (std::size_t i = 0; i + 1 <= j && prefix_ok; ++i) {
        EdgeId next = *g.edge_between(u, fan[i + 1]);
        prefix_ok = color[next] >= 0 && is_free(fan[i], color[next]);
      }
      if (!prefix_ok) break;
      if (is_free(fan[j], d)) {
        w = j;
        break;
      }
    }
    if (w == fan.size())
      throw Error(ErrorCode::StructureViolation, "edge coloring fan rotation failed");
    for (std::size_t i = 0; i < w; ++i) {
      EdgeId here = *g.edge_between(u, fan[i]);
      EdgeId next = *g.edge_between(u, fan[i + 1]);
      color[here] = color[next];
    }
    color[*g.edge_between(u, fan[w])] = d;
  }
  return color;
}

/// Color classes of `proper_edge_coloring`, dropping unused colors.
inline std::vector<Matching> edge_coloring_classes(Graph const& g) {
  auto color = proper_edge_coloring(g);
  std::vector<EdgeSet> classes;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (color[e] >= static_cast<int>(classes.size())) classes.resize(static_cast<std::size_t>(color[e]) + 1);
    classes[color[e]].push_back(e);
  }
  std::vector<Matching> out;
  for (auto& c : classes)
    if (!c.empty()) out.emplace_back(std::move(c));
  return out;
}

/// Spanning 2-regular subgraph, the complement of a perfect matching.
struct TwoFactor {
  Matching complement;
  EdgeSet edges;
  std::vector<std::vector<Vertex>> cycles;      // vertex sequences
  std::vector<std::vector<EdgeId>> cycle_edges;  // edge i joins vertex i and i+1
  int odd_count = 0;
};

inline TwoFactor two_factor_of(Graph const& g, Matching const& pm) {
  if (!is_perfect(g, pm)) throw Error(ErrorCode::NotPerfectMatching, "2-factor needs a perfect matching");
  TwoFactor f;
  f.complement = pm;
  f.edges = complement(g, pm.edges());
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cyc;
    std::vector<EdgeId> ce;
    Vertex x = s;
    EdgeId came = -1;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      EdgeId nxt = -1;
      for (EdgeId e : g.incident(x)) {
        if (pm.contains(e) || e == came) continue;
        nxt = e;
        break;
      }
      ce.push_back(nxt);
      came = nxt;
      x = g.neighbor(x, nxt);
    } while (x != s);
    if (cyc.size() % 2) ++f.odd_count;
    f.cycles.push_back(std::move(cyc));
    f.cycle_edges.push_back(std::move(ce));
  }
  return f;
}

struct OddnessCertificate {
  int oddness = 0;
  TwoFactor witness;
};

inline constexpr std::int64_t kDefaultPerfectMatchingBudget = 20'000'000;

/// Minimum number of odd cycles over all 2-factors, with a witness.
/// Throws NoPerfectMatching, or CapExceeded when the enumeration budget runs
/// out before the minimum is established.
inline OddnessCertificate oddness_certificate(Graph const& g,
                                             std::int64_t pm_budget = kDefaultPerfectMatchingBudget) {
  if (auto col = three_edge_coloring(g)) return {0, two_factor_of(g, (*col)[0])};
  std::optional<OddnessCertificate> best;
  std::int64_t seen = 0;
  bool capped = false;
  for_each_perfect_matching(g, [&](Matching&& pm) {
    if (++seen > pm_budget) {
      capped = true;
      return false;
    }
    // Odd cycle count only; the full witness is built for improvements.
    auto f = two_factor_of(g, pm);
    if (!best || f.odd_count < best->oddness) best = OddnessCertificate{f.odd_count, std::move(f)};
    return best->oddness > 2;
  });
  if (!best) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
  if (capped && best->oddness > 2)
    throw Error(ErrorCode::CapExceeded, "oddness search stopped with upper bound " +
                                            std::to_string(best->oddness));
  return *best;
}

inline int oddness(Graph const& g) { return oddness_certificate(g).oddness; }

}  // namespace excessive
