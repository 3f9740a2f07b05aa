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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

namespace detail {

inline EdgeList petersen_edges() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return e;
}

inline EdgeList shifted(EdgeList const& edges, int by) {
  EdgeList out;
  for (auto [u, v] : edges) out.emplace_back(u + by, v + by);
  return out;
}

}  // namespace detail

/// K4, K3_3, prism_Y3, cube_Q3, petersen. Petersen: outer cycle 0..4,
/// spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
inline CubicGraph named_graph(std::string const& name) {
  if (name == "K4") return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "K3_3") {
    EdgeList e;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    return build_graph(6, e);
  }
  if (name == "prism_Y3")
    return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "cube_Q3") {
    EdgeList e;
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (int w = v ^ (1 << b); v < w) e.emplace_back(v, w);
    return build_graph(8, e);
  }
  if (name == "petersen") return build_graph(10, detail::petersen_edges());
  throw Error(ErrorCode::UnknownName, "unknown graph name '" + name + "'");
}

inline std::vector<std::string> named_graph_names() {
  return {"K4", "K3_3", "prism_Y3", "cube_Q3", "petersen"};
}

/// Block for the bridged family: one degree-2 vertex (`port`), all other
/// vertices of degree 3, order 2*half + 1.
struct BlockSpec {
  int order = 0;
  EdgeList edges;
  Vertex port = -1;

  int half() const { return (order - 1) / 2; }
};

/// K4 on {0,1,2,3} with edge 01 subdivided by vertex 4.
inline BlockSpec default_block() {
  return {5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4};
}

/// Checks the degree profile and that every block edge lies in a
/// [half]-matching of the block. Throws InvalidBlock.
inline void validate_block(BlockSpec const& b) {
  if (b.order < 3 || b.order % 2 == 0)
    throw Error(ErrorCode::InvalidBlock, "block order must be odd and at least 3");
  Graph g = [&] {
    try {
      return Graph(b.order, b.edges);
    } catch (Error const& e) {
      throw Error(ErrorCode::InvalidBlock, e.what());
    }
  }();
  for (Vertex v = 0; v < b.order; ++v) {
    int want = v == b.port ? 2 : 3;
    if (g.degree(v) != want)
      throw Error(ErrorCode::InvalidBlock, "vertex " + std::to_string(v) + " has degree " +
                                              std::to_string(g.degree(v)));
  }
  if (!g.connected()) throw Error(ErrorCode::InvalidBlock, "block is disconnected");
  if (normalized([&] {
        EdgeSet ids;
        for (auto [u, v] : b.edges) ids.push_back(u < v ? u * b.order + v : v * b.order + u);
        return ids;
      }()).size() != b.edges.size())
    throw Error(ErrorCode::InvalidBlock, "block has parallel edges");
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!extendable(g, {e}, b.half()))
      throw Error(ErrorCode::InvalidBlock, "block edge " + std::to_string(e) + " lies in no [" +
                                              std::to_string(b.half()) + "]-matching");
}

/// Cycle C_m on vertices 0..m-1, block copy i attached to cycle vertex i by
/// a spoke at its port. Order 2m + 2*sum(half).
inline CubicGraph one_conn_family(int m, BlockSpec const& block = default_block()) {
  if (m < 3) throw Error(ErrorCode::BadParameter, "cycle length must be at least 3");
  validate_block(block);
  EdgeList e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < m; ++i) {
    int base = m + i * block.order;
    for (auto [u, v] : block.edges) e.emplace_back(base + u, base + v);
    e.emplace_back(i, base + block.port);
  }
  return build_graph(m + m * block.order, e);
}

/// Edges of the cycle C_m in `one_conn_family(m, ...)`.
inline EdgeSet one_conn_cycle_edges(Graph const& g, int m) {
  EdgeSet out;
  for (int i = 0; i < m; ++i) out.push_back(*g.edge_between(i, (i + 1) % m));
  return normalized(out);
}

/// Ring of k copies of Petersen minus the edge u=0, v=1; unit i occupies
/// vertices 10i..10i+9 and v_i is joined to u_{i+1}.
inline CubicGraph petersen_ring(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "ring needs at least 3 units");
  EdgeList unit;
  for (auto [u, v] : detail::petersen_edges())
    if (!(u == 0 && v == 1)) unit.emplace_back(u, v);
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    for (auto [u, v] : unit) e.emplace_back(10 * i + u, 10 * i + v);
    e.emplace_back(10 * i + 1, 10 * ((i + 1) % k));
  }
  return build_graph(10 * k, e);
}

/// Two copies of Petersen minus vertex 0 (stubs are its neighbours 1, 4, 5)
/// plus a, b, c, each joined to the same-named stub in both copies.
struct HUnit {
  int order = 21;
  EdgeList edges;
  Vertex a = 18, b = 19, c = 20;
  std::array<std::array<Vertex, 3>, 2> stubs{};  // stubs[copy][0..2] -> a, b, c
};

inline HUnit h_unit() {
  HUnit h;
  EdgeList minus0;
  for (auto [u, v] : detail::petersen_edges())
    if (u != 0 && v != 0) minus0.emplace_back(u - 1, v - 1);
  for (int copy = 0; copy < 2; ++copy) {
    for (auto [u, v] : minus0) h.edges.emplace_back(9 * copy + u, 9 * copy + v);
    h.stubs[copy] = {9 * copy + 0, 9 * copy + 3, 9 * copy + 4};
  }
  const std::array<Vertex, 3> poles{h.a, h.b, h.c};
  for (int copy = 0; copy < 2; ++copy)
    for (int j = 0; j < 3; ++j) h.edges.emplace_back(poles[j], h.stubs[copy][j]);
  return h;
}

/// 2m units of H, with u_i, v_i, w_i hanging from a_i, b_i, c_i and the
/// links v_i -- u_{i+m}, v_i -- w_{i+m}, u_i -- w_{i-1} (indices mod 2m).
/// Unit i occupies vertices 24i..24i+23; u, v, w are 24i+21..23.
inline CubicGraph three_conn_family(int m) {
  if (m < 5) throw Error(ErrorCode::BadParameter, "three_conn_family needs m >= 5");
  const int units = 2 * m;
  const HUnit h = h_unit();
  auto U = [](int i) { return 24 * i + 21; };
  auto V = [](int i) { return 24 * i + 22; };
  auto W = [](int i) { return 24 * i + 23; };
  EdgeList e;
  for (int i = 0; i < units; ++i) {
    for (auto [x, y] : h.edges) e.emplace_back(24 * i + x, 24 * i + y);
    e.emplace_back(24 * i + h.a, U(i));
    e.emplace_back(24 * i + h.b, V(i));
    e.emplace_back(24 * i + h.c, W(i));
  }
  for (int i = 0; i < units; ++i) {
    e.emplace_back(V(i), U((i + m) % units));
    e.emplace_back(V(i), W((i + m) % units));
    e.emplace_back(U(i), W((i + units - 1) % units));
  }
  return build_graph(24 * units, e);
}

/// Flower snark J_k: a_i = 4i joined to b_i, c_i, d_i; the b's form a
/// k-cycle; the c's and d's form one 2k-cycle crossing over at the end.
inline CubicGraph flower_snark(int k) {
  if (k < 3 || k % 2 == 0) throw Error(ErrorCode::BadParameter, "flower snark needs odd k >= 3");
  auto a = [](int i) { return 4 * i; };
  auto b = [](int i) { return 4 * i + 1; };
  auto c = [](int i) { return 4 * i + 2; };
  auto d = [](int i) { return 4 * i + 3; };
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    e.emplace_back(a(i), b(i));
    e.emplace_back(a(i), c(i));
    e.emplace_back(a(i), d(i));
    e.emplace_back(b(i), b(j));
    if (j != 0) {
      e.emplace_back(c(i), c(j));
      e.emplace_back(d(i), d(j));
    }
  }
  e.emplace_back(c(k - 1), d(0));
  e.emplace_back(d(k - 1), c(0));
  return build_graph(4 * k, e);
}

/// Dot product of two Petersen graphs. The first copy loses edges 01 and
/// either 23 (i = 1, the two edges joined by an edge) or 79 (i = 2, no edge
/// between them); the second loses adjacent vertices 0 and 1.
inline CubicGraph blanusa(int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::BadParameter, "Blanusa index must be 1 or 2");
  std::pair<Vertex, Vertex> second = i == 1 ? std::pair{2, 3} : std::pair{7, 9};
  EdgeList e;
  for (auto [u, v] : detail::petersen_edges()) {
    if (u == 0 && v == 1) continue;
    if (std::pair{u, v} == second || std::pair{v, u} == second) continue;
    e.emplace_back(u, v);
  }
  // Second copy: vertices 2..9 become 10..17.
  auto relabel = [](Vertex v) { return v + 8; };
  for (auto [u, v] : detail::petersen_edges())
    if (u > 1 && v > 1) e.emplace_back(relabel(u), relabel(v));
  // x = 0 had neighbours 4, 5; y = 1 had neighbours 2, 6.
  e.emplace_back(0, relabel(4));
  e.emplace_back(1, relabel(5));
  e.emplace_back(second.first, relabel(2));
  e.emplace_back(second.second, relabel(6));
  return build_graph(18, e);
}

/// Family name plus integer parameters, as exposed by the CLI.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;
};

inline int param_int(FamilySpec const& s, std::string const& key, std::optional<int> fallback = {}) {
  auto it = s.params.find(key);
  if (it == s.params.end()) {
    if (fallback) return *fallback;
    throw Error(ErrorCode::BadParameter, "family '" + s.family + "' needs parameter " + key);
  }
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (std::exception const&) {
    throw Error(ErrorCode::BadParameter, "parameter " + key + " is not an integer");
  }
}

inline CubicGraph generate(FamilySpec const& s) {
  if (s.family == "named") {
    auto it = s.params.find("name");
    if (it == s.params.end()) throw Error(ErrorCode::BadParameter, "named family needs name=");
    return named_graph(it->second);
  }
  if (s.family == "one_conn") return one_conn_family(param_int(s, "m", 5));
  if (s.family == "petersen_ring") return petersen_ring(param_int(s, "k", 9));
  if (s.family == "three_conn") return three_conn_family(param_int(s, "m", 5));
  if (s.family == "flower") return flower_snark(param_int(s, "k", 5));
  if (s.family == "blanusa") return blanusa(param_int(s, "i", 1));
  for (auto const& n : named_graph_names())
    if (s.family == n) return named_graph(n);
  throw Error(ErrorCode::UnknownName, "unknown family '" + s.family + "'");
}

}  // namespace excessive
