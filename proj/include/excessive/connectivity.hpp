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

#include <optional>
#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

struct EdgeCut {
  EdgeSet edges;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  bool cyclic = false;
};

struct ConnectivityProfile {
  int bridge_count = 0;
  int edge_connectivity = 0;
  /// Empty when the graph has no two vertex-disjoint cycles, or when the
  /// order exceeds the search cap (then `cyclic_capped` is set).
  std::optional<int> cyclic_edge_connectivity;
  bool cyclic_capped = false;
  bool is_3graph = false;
};

inline constexpr int kDefaultCyclicCap = 64;

/// Bridges of `g` with edge `skip` removed (pass -1 to keep all edges).
inline EdgeSet bridges(Graph const& g, EdgeId skip = -1) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  EdgeSet out;
  int timer = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via || e == skip) continue;
        Vertex w = g.neighbor(f.v, e);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  return normalized(out);
}

/// Edge connectivity capped at 3 (the maximum for cubic graphs).
inline int edge_connectivity(Graph const& g) {
  if (!g.connected()) return 0;
  if (!bridges(g).empty()) return 1;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!bridges(g, e).empty()) return 2;
  return 3;
}

namespace detail {

inline bool induced_has_cycle(Graph const& g, std::vector<char> const& in) {
  // A component with at least as many edges as vertices contains a cycle.
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!in[s] || seen[s]) continue;
    int verts = 0, degsum = 0;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++verts;
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.neighbor(x, e);
        if (!in[y]) continue;
        ++degsum;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (degsum / 2 >= verts) return true;
  }
  return false;
}

// Grows the side S containing vertex 0 one vertex at a time. Each frontier
// vertex either joins S or is fixed outside. A minimum cyclic cut is a
// matching (a vertex with two cut edges can switch sides and shrink the
// cut), so no vertex may carry two cut edges.
class CyclicCutSearch {
 public:
  CyclicCutSearch(Graph const& g, int limit)
      : g_(g), limit_(limit), side_(static_cast<std::size_t>(g.order()), 0),
        cutdeg_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<EdgeCut> run() {
    side_[0] = kIn;
    if (search()) return found_;
    return std::nullopt;
  }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  bool assign(Vertex y, char s, std::vector<Vertex>& touched) {
    side_[y] = s;
    bool ok = true;
    for (EdgeId e : g_.incident(y)) {
      Vertex z = g_.neighbor(y, e);
      if (side_[z] == kUndecided || side_[z] == s) continue;
      ++cut_;
      touched.push_back(y);
      touched.push_back(z);
      if (++cutdeg_[y] > 1 || ++cutdeg_[z] > 1) ok = false;
    }
    if (cut_ > limit_) ok = false;
    return ok;
  }

  void undo(Vertex y, std::vector<Vertex> const& touched) {
    for (std::size_t i = 0; i < touched.size(); i += 2) {
      --cutdeg_[touched[i]];
      --cutdeg_[touched[i + 1]];
      --cut_;
    }
    side_[y] = kUndecided;
  }

  bool search() {
    Vertex next = -1;
    for (Vertex x = 0; x < g_.order() && next < 0; ++x) {
      if (side_[x] != kIn) continue;
      for (EdgeId e : g_.incident(x)) {
        Vertex y = g_.neighbor(x, e);
        if (side_[y] == kUndecided) {
          next = y;
          break;
        }
      }
    }
    if (next < 0) return leaf();
    for (char s : {kIn, kOut}) {
      std::vector<Vertex> touched;
      bool ok = assign(next, s, touched);
      if (ok && search()) return true;
      undo(next, touched);
    }
    return false;
  }

  bool leaf() {
    std::vector<char> in(side_.size()), out(side_.size());
    for (std::size_t v = 0; v < side_.size(); ++v) {
      in[v] = side_[v] == kIn;
      out[v] = !in[v];
    }
    if (!induced_has_cycle(g_, in) || !induced_has_cycle(g_, out)) return false;
    EdgeCut cut;
    for (EdgeId e = 0; e < g_.size(); ++e)
      if (in[g_.edge(e).u] != in[g_.edge(e).v]) cut.edges.push_back(e);
    for (Vertex v = 0; v < g_.order(); ++v) (in[v] ? cut.side_a : cut.side_b).push_back(v);
    cut.cyclic = true;
    found_ = std::move(cut);
    return true;
  }

  Graph const& g_;
  int limit_;
  int cut_ = 0;
  std::vector<char> side_;
  std::vector<int> cutdeg_;
  EdgeCut found_;
};

}  // namespace detail

/// Some cyclic edge cut with at most `limit` edges, if one exists.
inline std::optional<EdgeCut> cyclic_cut_at_most(Graph const& g, int limit,
                                                 int cap = kDefaultCyclicCap) {
  if (g.order() > cap)
    throw Error(ErrorCode::CapExceeded, "cyclic connectivity search capped at order " +
                                            std::to_string(cap));
  if (g.order() == 0) return std::nullopt;
  return detail::CyclicCutSearch(g, limit).run();
}

/// Minimum cyclic edge cut, or nullopt if no two vertex-disjoint cycles exist.
inline std::optional<EdgeCut> min_cyclic_cut(Graph const& g, int cap = kDefaultCyclicCap) {
  for (int k = 1; k <= g.size(); ++k) {
    if (auto cut = cyclic_cut_at_most(g, k, cap)) return cut;
  }
  return std::nullopt;
}

inline std::optional<int> cyclic_edge_connectivity(Graph const& g, int cap = kDefaultCyclicCap) {
  auto cut = min_cyclic_cut(g, cap);
  if (!cut) return std::nullopt;
  return static_cast<int>(cut->edges.size());
}

/// True when no cyclic edge cut has fewer than `k` edges.
inline bool is_cyclically_k_connected(Graph const& g, int k, int cap = kDefaultCyclicCap) {
  return !cyclic_cut_at_most(g, k - 1, cap).has_value();
}

inline ConnectivityProfile connectivity_profile(Graph const& g, int cap = kDefaultCyclicCap) {
  ConnectivityProfile p;
  p.bridge_count = static_cast<int>(bridges(g).size());
  p.edge_connectivity = edge_connectivity(g);
  p.is_3graph = p.bridge_count == 0;
  if (g.order() > cap) {
    p.cyclic_capped = true;
  } else {
    p.cyclic_edge_connectivity = cyclic_edge_connectivity(g, cap);
  }
  return p;
}

}  // namespace excessive
