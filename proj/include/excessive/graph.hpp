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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace excessive {

using Vertex = int;
using EdgeId = int;

/// Error categories raised by the library. Every throwing operation raises
/// `Error`; callers that need to branch on the cause inspect `code()`.
enum class ErrorCode {
  NotCubic,
  NotSimple,
  Disconnected,
  OddOrder,
  MalformedGraph6,
  SeedNotMatching,
  NoPerfectMatching,
  NotPerfectMatching,
  NotCyclically4Connected,
  CapExceeded,
  HasBridge,
  SizeMismatch,
  InternalExchangeFailure,
  NotBergeFulkersonCover,
  TooFewDoubleEdges,
  NotColorable,
  OrderTooSmall,
  PreconditionViolated,
  WrongOddness,
  StructureViolation,
  InvalidWitness,
  NoEvenPath,
  CircumferenceTooSmall,
  AllStrategiesFailed,
  UnknownName,
  InvalidBlock,
  BadParameter,
  NotFractionalPM,
  Schema,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::SeedNotMatching: return "SeedNotMatching";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::NotCyclically4Connected: return "NotCyclically4Connected";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::HasBridge: return "HasBridge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InternalExchangeFailure: return "InternalExchangeFailure";
    case ErrorCode::NotBergeFulkersonCover: return "NotBergeFulkersonCover";
    case ErrorCode::TooFewDoubleEdges: return "TooFewDoubleEdges";
    case ErrorCode::NotColorable: return "NotColorable";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongOddness: return "WrongOddness";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::NoEvenPath: return "NoEvenPath";
    case ErrorCode::CircumferenceTooSmall: return "CircumferenceTooSmall";
    case ErrorCode::AllStrategiesFailed: return "AllStrategiesFailed";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidBlock: return "InvalidBlock";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotFractionalPM: return "NotFractionalPM";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex and edge indices. Used directly
/// for fragments (blocks, units) and as the storage behind `CubicGraph`.
class Graph {
 public:
  Graph() = default;

  /// Builds without any validation beyond index range and loop rejection.
  Graph(int order, std::vector<std::pair<Vertex, Vertex>> const& edges)
      : order_(order), incident_(static_cast<std::size_t>(order)) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= order || b >= order)
        throw Error(ErrorCode::BadParameter, "vertex index out of range");
      if (a > b) std::swap(a, b);
      auto id = static_cast<EdgeId>(edges_.size());
      edges_.push_back({a, b});
      incident_[a].push_back(id);
      if (a != b) incident_[b].push_back(id);
    }
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

  Vertex neighbor(Vertex v, EdgeId e) const { return edges_[e].other(v); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    for (EdgeId e : incident_[a])
      if (edges_[e].other(a) == b && edges_[e].u != edges_[e].v) return e;
    return std::nullopt;
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (auto const& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  bool connected() const {
    if (order_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[x]) {
        Vertex y = edges_[e].other(x);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == order_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

class CubicGraph;
CubicGraph build_graph(int order, std::vector<std::pair<Vertex, Vertex>> const& edges);

/// Simple connected 3-regular graph of even order 2n. Instances are only
/// produced by `build_graph`, so every value satisfies the invariants.
class CubicGraph : public Graph {
 public:
  int n() const { return order() / 2; }

 private:
  explicit CubicGraph(Graph g) : Graph(std::move(g)) {}
  friend CubicGraph build_graph(int, std::vector<std::pair<Vertex, Vertex>> const&);
};

/// Validates an edge list on vertices 0..order-1. Edge indices follow the
/// input order.
inline CubicGraph build_graph(int order, std::vector<std::pair<Vertex, Vertex>> const& edges) {
  if (order <= 0) throw Error(ErrorCode::BadParameter, "empty vertex set");
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(a));
  }
  Graph g(order, edges);
  std::vector<std::pair<Vertex, Vertex>> sorted(edges.size());
  std::transform(edges.begin(), edges.end(), sorted.begin(), [](auto p) {
    return std::pair(std::min(p.first, p.second), std::max(p.first, p.second));
  });
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::NotSimple, "parallel edge");
  if (order % 2 != 0) throw Error(ErrorCode::OddOrder, "order " + std::to_string(order) + " is odd");
  for (Vertex v = 0; v < order; ++v) {
    if (g.degree(v) != 3)
      throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(g.degree(v)));
  }
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "graph has several components");
  return CubicGraph(std::move(g));
}

inline CubicGraph build_graph(std::vector<std::pair<Vertex, Vertex>> const& edges) {
  int order = 0;
  for (auto [a, b] : edges) order = std::max({order, a + 1, b + 1});
  return build_graph(order, edges);
}

// Edge-set helpers. Edge sets are sorted vectors of edge indices.

using EdgeSet = std::vector<EdgeId>;

inline EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline EdgeSet set_union(EdgeSet const& a, EdgeSet const& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline EdgeSet set_intersection(EdgeSet const& a, EdgeSet const& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline EdgeSet set_difference(EdgeSet const& a, EdgeSet const& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(EdgeSet const& s, EdgeId e) { return std::binary_search(s.begin(), s.end(), e); }

inline EdgeSet all_edges(Graph const& g) {
  EdgeSet s(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) s[e] = e;
  return s;
}

inline EdgeSet complement(Graph const& g, EdgeSet const& s) { return set_difference(all_edges(g), s); }

/// Vertices covered by an edge set, as a per-vertex flag vector.
inline std::vector<char> covered_vertices(Graph const& g, EdgeSet const& s) {
  std::vector<char> cov(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : s) {
    cov[g.edge(e).u] = 1;
    cov[g.edge(e).v] = 1;
  }
  return cov;
}

inline bool is_matching(Graph const& g, EdgeSet const& s) {
  std::vector<char> cov(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : s) {
    if (e < 0 || e >= g.size()) return false;
    auto [u, v] = g.edge(e);
    if (cov[u] || cov[v]) return false;
    cov[u] = cov[v] = 1;
  }
  return true;
}

/// Girth by BFS from each vertex; 0 for forests.
inline int girth(Graph const& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<EdgeId> via(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (EdgeId e : g.incident(x)) {
        if (e == via[x]) continue;
        Vertex y = g.neighbor(x, e);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          int len = dist[x] + dist[y] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace excessive
