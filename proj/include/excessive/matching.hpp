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

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

/// Set of pairwise non-adjacent edges, stored as sorted edge indices. The
/// host graph is not stored; `valid_in` checks the invariant against one.
class Matching {
 public:
  Matching() = default;
  explicit Matching(EdgeSet edges) : edges_(normalized(std::move(edges))) {}

  const EdgeSet& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const { return excessive::contains(edges_, e); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool valid_in(Graph const& g) const { return is_matching(g, edges_); }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
};

/// Matching from an edge set, rejecting sets that are not matchings in `g`.
inline Matching make_matching(Graph const& g, EdgeSet edges) {
  Matching m(std::move(edges));
  if (!m.valid_in(g)) throw Error(ErrorCode::SeedNotMatching, "edge set is not a matching");
  return m;
}

inline bool is_perfect(Graph const& g, Matching const& m) {
  return m.valid_in(g) && 2 * m.size() == g.order();
}

namespace detail {

// Edmonds' blossom algorithm, O(V^3). Vertices are visited in index order
// and neighbours in incidence order, so the result is deterministic.
class BlossomMatcher {
 public:
  BlossomMatcher(Graph const& g, std::vector<char> const& allowed)
      : g_(g), allowed_(allowed), n_(g.order()), match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)), base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)), in_blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<Vertex> solve() {
    // Greedy start, then augment from every exposed vertex.
    for (Vertex v = 0; v < n_; ++v) {
      if (!allowed_[v] || match_[v] >= 0) continue;
      for (EdgeId e : g_.incident(v)) {
        Vertex w = g_.neighbor(v, e);
        if (allowed_[w] && match_[w] < 0 && w != v) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (!allowed_[v] || match_[v] >= 0) continue;
      Vertex end = find_path(v);
      while (end >= 0) {
        Vertex pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (EdgeId e : g_.incident(v)) {
        Vertex to = g_.neighbor(v, e);
        if (!allowed_[to] || to == v) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          Vertex next = match_[to];
          used_[next] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  Graph const& g_;
  std::vector<char> const& allowed_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching of `g` minus `forbidden` vertices.
inline Matching maximum_matching(Graph const& g, std::vector<Vertex> const& forbidden = {}) {
  std::vector<char> allowed(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : forbidden) allowed[v] = 0;
  auto mate = detail::BlossomMatcher(g, allowed).solve();
  EdgeSet edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] > v) edges.push_back(*g.edge_between(v, mate[v]));
  }
  return Matching(std::move(edges));
}

inline int matching_number(Graph const& g) { return maximum_matching(g).size(); }

/// True iff some matching of size `m` contains `seed`.
inline bool extendable(Graph const& g, EdgeSet const& seed, int m) {
  if (!is_matching(g, normalized(seed)))
    throw Error(ErrorCode::SeedNotMatching, "seed is not a matching");
  auto s = normalized(seed);
  if (static_cast<int>(s.size()) >= m) return static_cast<int>(s.size()) == m;
  std::vector<Vertex> ends;
  for (EdgeId e : s) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  return static_cast<int>(s.size()) + maximum_matching(g, ends).size() >= m;
}

/// Like `extendable`, but adjacent edge pairs simply answer false.
inline bool co_extendable(Graph const& g, EdgeId e, EdgeId f, int m) {
  if (e == f) return extendable(g, {e}, m);
  auto const& a = g.edge(e);
  auto const& b = g.edge(f);
  if (a.touches(b.u) || a.touches(b.v)) return false;
  return extendable(g, {e, f}, m);
}

/// Extends `seed` to a matching of size exactly `m`, if possible.
inline std::optional<Matching> extend_to_size(Graph const& g, Matching const& seed, int m) {
  if (seed.size() > m) return std::nullopt;
  std::vector<Vertex> ends;
  for (EdgeId e : seed) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  auto rest = maximum_matching(g, ends);
  if (seed.size() + rest.size() < m) return std::nullopt;
  EdgeSet edges = seed.edges();
  for (EdgeId e : rest) {
    if (static_cast<int>(edges.size()) == m) break;
    edges.push_back(e);
  }
  return Matching(std::move(edges));
}

namespace detail {

// Vertex-driven enumeration: the lowest undecided vertex is either left
// exposed (spending one unit of the exposure budget) or matched to a later
// undecided neighbour. Each matching is produced exactly once.
template <class F>
class MatchingEnumerator {
 public:
  MatchingEnumerator(Graph const& g, int m, F& sink) : g_(g), m_(m), sink_(sink),
      state_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() {
    int budget = g_.order() - 2 * m_;
    if (budget < 0) return true;
    return step(0, budget);
  }

 private:
  bool step(Vertex from, int budget) {
    Vertex v = from;
    while (v < g_.order() && state_[v]) ++v;
    if (static_cast<int>(current_.size()) == m_) {
      EdgeSet copy = current_;
      return sink_(Matching(std::move(copy)));
    }
    if (v >= g_.order()) return true;
    state_[v] = 1;
    bool go = true;
    for (EdgeId e : g_.incident(v)) {
      Vertex w = g_.neighbor(v, e);
      if (state_[w]) continue;
      state_[w] = 1;
      current_.push_back(e);
      go = step(v + 1, budget);
      current_.pop_back();
      state_[w] = 0;
      if (!go) break;
    }
    if (go && budget > 0) go = step(v + 1, budget - 1);
    state_[v] = 0;
    return go;
  }

  Graph const& g_;
  int m_;
  F& sink_;
  std::vector<char> state_;
  EdgeSet current_;
};

}  // namespace detail

/// Calls `f(Matching)` for every matching of size `m`; `f` returns false to
/// stop. Returns false when stopped early.
template <class F>
bool for_each_matching(Graph const& g, int m, F&& f) {
  if (m < 0) return true;
  if (m == 0) return f(Matching{});
  detail::MatchingEnumerator<F> en(g, m, f);
  return en.run();
}

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

inline std::vector<Matching> enumerate_matchings(Graph const& g, int m,
                                                 std::int64_t limit = kUnbounded) {
  std::vector<Matching> out;
  if (limit <= 0) return out;
  for_each_matching(g, m, [&](Matching&& mm) {
    out.push_back(std::move(mm));
    return static_cast<std::int64_t>(out.size()) < limit;
  });
  return out;
}

template <class F>
bool for_each_perfect_matching(Graph const& g, F&& f) {
  if (g.order() % 2) return true;
  return for_each_matching(g, g.order() / 2, std::forward<F>(f));
}

inline std::vector<Matching> perfect_matchings(Graph const& g, std::int64_t limit = kUnbounded) {
  if (g.order() % 2) return {};
  return enumerate_matchings(g, g.order() / 2, limit);
}

}  // namespace excessive
