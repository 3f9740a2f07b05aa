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

// Deliberately naive reference implementations. None of these share code
// paths with the library beyond the Graph container itself.

#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "excessive/graph.hpp"
#include "excessive/graph6.hpp"

namespace oracle {

using excessive::EdgeId;
using excessive::Graph;
using excessive::Vertex;

inline std::string data_path(std::string const& file) { return std::string(EXC_DATA_DIR) + "/" + file; }

inline std::vector<excessive::CubicGraph> load_corpus(std::string const& file, int max_order = 1 << 30) {
  std::ifstream in(data_path(file));
  std::vector<excessive::CubicGraph> out;
  for (auto& rec : excessive::read_graph6_stream(in))
    if (rec.graph.order() <= max_order) out.push_back(std::move(rec.graph));
  return out;
}

inline int components(int order, std::vector<std::pair<Vertex, Vertex>> const& edges,
                      std::vector<char> const& alive) {
  std::vector<int> parent(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int count = 0;
  for (int v = 0; v < order; ++v) count += alive[v] ? 1 : 0;
  for (auto [a, b] : edges) {
    if (!alive[a] || !alive[b]) continue;
    int x = find(a), y = find(b);
    if (x != y) {
      parent[x] = y;
      --count;
    }
  }
  return count;
}

inline bool connected_without_edges(Graph const& g, std::vector<char> const& removed) {
  std::vector<std::pair<Vertex, Vertex>> rest;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!removed[e]) rest.emplace_back(g.edge(e).u, g.edge(e).v);
  return components(g.order(), rest, std::vector<char>(static_cast<std::size_t>(g.order()), 1)) == 1;
}

// Subgraph induced by `in` is not a forest.
inline bool has_cycle(Graph const& g, std::vector<char> const& in) {
  int verts = 0, edges = 0;
  for (int v = 0; v < g.order(); ++v) verts += in[v] ? 1 : 0;
  std::vector<std::pair<Vertex, Vertex>> inside;
  for (auto const& e : g.edges())
    if (in[e.u] && in[e.v]) {
      ++edges;
      inside.emplace_back(e.u, e.v);
    }
  int comps = components(g.order(), inside, in);
  return edges > verts - comps;
}

// Minimum cut over all 2^order vertex bipartitions with a cycle on both sides.
inline std::optional<int> cyclic_connectivity(Graph const& g) {
  std::optional<int> best;
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) {
      in[v] = (mask >> v) & 1;
      out[v] = !in[v];
    }
    if (!has_cycle(g, in) || !has_cycle(g, out)) continue;
    int cut = 0;
    for (auto const& e : g.edges()) cut += in[e.u] != in[e.v];
    if (!best || cut < *best) best = cut;
  }
  return best;
}

inline int edge_connectivity(Graph const& g) {
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
  if (!connected_without_edges(g, removed)) return 0;
  for (EdgeId a = 0; a < g.size(); ++a) {
    removed[a] = 1;
    if (!connected_without_edges(g, removed)) return 1;
    removed[a] = 0;
  }
  for (EdgeId a = 0; a < g.size(); ++a)
    for (EdgeId b = a + 1; b < g.size(); ++b) {
      removed[a] = removed[b] = 1;
      bool ok = connected_without_edges(g, removed);
      removed[a] = removed[b] = 0;
      if (!ok) return 2;
    }
  return 3;
}

inline int vertex_connectivity(Graph const& g) {
  const int n = g.order();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto pairs = g.edge_pairs();
  for (int a = 0; a < n; ++a) {
    alive[a] = 0;
    if (components(n, pairs, alive) > 1) return 1;
    alive[a] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      alive[a] = alive[b] = 0;
      bool split = components(n, pairs, alive) > 1;
      alive[a] = alive[b] = 1;
      if (split) return 2;
    }
  return 3;
}

inline int bridge_count(Graph const& g) {
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
  int count = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    removed[e] = 1;
    if (!connected_without_edges(g, removed)) ++count;
    removed[e] = 0;
  }
  return count;
}

// All m-subsets of edges, in lexicographic index order, that are matchings.
inline std::vector<std::vector<EdgeId>> matchings(Graph const& g, int m) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> cur;
  std::function<void(EdgeId)> rec = [&](EdgeId from) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (EdgeId e = from; e < g.size(); ++e) {
      bool ok = true;
      for (EdgeId f : cur) {
        auto const& x = g.edge(e);
        auto const& y = g.edge(f);
        if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) ok = false;
      }
      if (!ok) continue;
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Tries every assignment of 3 colors to edges in index order.
inline bool three_colorable(Graph const& g) {
  std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
  std::function<bool(EdgeId)> rec = [&](EdgeId e) {
    if (e == g.size()) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (Vertex x : {g.edge(e).u, g.edge(e).v})
        for (EdgeId f : g.incident(x))
          if (f < e && color[f] == c) ok = false;
      if (!ok) continue;
      color[e] = c;
      if (rec(e + 1)) return true;
    }
    color[e] = -1;
    return false;
  };
  return rec(0);
}

// Longest cycle by plain DFS over simple paths from every start vertex.
inline int longest_cycle(Graph const& g) {
  int best = 0;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  std::function<void(Vertex, Vertex, int)> rec = [&](Vertex s, Vertex x, int len) {
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.neighbor(x, e);
      if (y == s && len >= 3) best = std::max(best, len);
      if (on[y] || y < s) continue;
      on[y] = 1;
      rec(s, y, len + 1);
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on[s] = 1;
    rec(s, s, 1);
    on[s] = 0;
  }
  return best;
}

// Odd cycle counts of all 2-factors, via complements of brute-force
// perfect matchings.
inline int oddness(Graph const& g) {
  int best = 1 << 30;
  for (auto const& pm : matchings(g, g.order() / 2)) {
    std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : pm) removed[e] = 1;
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!removed[e]) rest.emplace_back(g.edge(e).u, g.edge(e).v);
    // Components of a 2-regular graph are cycles; count odd-sized ones.
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int odd = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
      if (comp[s] >= 0) continue;
      int size = 0;
      std::vector<Vertex> stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++size;
        for (auto [a, b] : rest) {
          Vertex y = a == x ? b : (b == x ? a : -1);
          if (y >= 0 && comp[y] < 0) {
            comp[y] = s;
            stack.push_back(y);
          }
        }
      }
      odd += size % 2;
    }
    best = std::min(best, odd);
  }
  return best;
}

// Smallest k such that k of the given edge sets cover all edges (subset
// search in increasing k).
inline int min_cover(Graph const& g, std::vector<std::vector<EdgeId>> const& family, int cap) {
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int from) -> bool {
      if (static_cast<int>(pick.size()) == k) {
        std::vector<char> cov(static_cast<std::size_t>(g.size()), 0);
        for (int i : pick)
          for (EdgeId e : family[i]) cov[e] = 1;
        return std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
      }
      for (int i = from; i < static_cast<int>(family.size()); ++i) {
        pick.push_back(i);
        if (rec(i)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0)) return k;
  }
  return -1;
}

// Is there a matching of size k avoiding `blocked` vertices? Vertex-by-vertex
// recursion: each vertex is either left exposed or matched to a later one.
inline bool has_matching(Graph const& g, std::vector<char> blocked, int k) {
  int free = 0;
  for (int v = 0; v < g.order(); ++v) free += blocked[v] ? 0 : 1;
  std::function<bool(Vertex, int, int)> rec = [&](Vertex v, int need, int spare) -> bool {
    if (need == 0) return true;
    while (v < g.order() && blocked[v]) ++v;
    if (v == g.order()) return false;
    blocked[v] = 1;
    for (EdgeId e : g.incident(v)) {
      Vertex u = g.neighbor(v, e);
      if (blocked[u]) continue;
      blocked[u] = 1;
      bool ok = rec(v + 1, need - 1, spare);
      blocked[u] = 0;
      if (ok) {
        blocked[v] = 0;
        return true;
      }
    }
    bool ok = spare > 0 && rec(v + 1, need, spare - 1);
    blocked[v] = 0;
    return ok;
  };
  return rec(0, k, free - 2 * k);
}

// Some matching of size m contains all of `edges` (assumed independent).
inline bool in_common_matching(Graph const& g, std::vector<EdgeId> const& edges, int m) {
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (blocked[g.edge(e).u] || blocked[g.edge(e).v]) return false;
    blocked[g.edge(e).u] = blocked[g.edge(e).v] = 1;
  }
  return has_matching(g, blocked, m - static_cast<int>(edges.size()));
}

// Uniform-ish random connected simple cubic graph by pairing half-edges
// with rejection.
inline excessive::CubicGraph random_cubic(int order, std::mt19937& rng) {
  for (;;) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < order; ++v)
      for (int i = 0; i < 3; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      auto a = std::min(stubs[i], stubs[i + 1]), b = std::max(stubs[i], stubs[i + 1]);
      if (a == b || std::find(edges.begin(), edges.end(), std::pair{a, b}) != edges.end()) ok = false;
      edges.emplace_back(a, b);
    }
    if (!ok) continue;
    Graph g(order, edges);
    if (!g.connected()) continue;
    return excessive::build_graph(order, edges);
  }
}

}  // namespace oracle
