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
#include <optional>
#include <vector>

#include "excessive/connectivity.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

inline constexpr int kDefaultCycleCap = 40;

struct LongestCycle {
  int length = 0;
  std::vector<Vertex> cycle;
};

/// Edges of a closed vertex sequence.
inline EdgeSet cycle_edge_set(Graph const& g, std::vector<Vertex> const& cycle) {
  EdgeSet out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    out.push_back(*g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
  return out;
}

/// Edges of an open vertex sequence, in path order.
inline std::vector<EdgeId> path_edges(Graph const& g, std::vector<Vertex> const& path) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(*g.edge_between(path[i], path[i + 1]));
  return out;
}

namespace detail {

class LongestCycleSearch {
 public:
  explicit LongestCycleSearch(Graph const& g)
      : g_(g), on_path_(static_cast<std::size_t>(g.order()), 0) {}

  LongestCycle run() {
    for (Vertex s = 0; s < g_.order() && best_.length < g_.order(); ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = 1;
      extend();
      on_path_[s] = 0;
    }
    return best_;
  }

 private:
  // Upper bound on the cycle length: path plus vertices still reachable.
  int reachable_bound() {
    if (path_.size() < 2) return g_.order();
    std::vector<char> seen(on_path_.size(), 0);
    std::vector<Vertex> stack{path_.back()};
    int count = 0;
    bool closes = false;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.incident(x)) {
        Vertex y = g_.neighbor(x, e);
        if (y == start_ && x != path_[1]) closes = true;
        if (y <= start_ || on_path_[y] || seen[y]) continue;
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
    return closes ? static_cast<int>(path_.size()) + count : 0;
  }

  void extend() {
    if (best_.length == g_.order()) return;
    if (reachable_bound() <= best_.length) return;
    Vertex x = path_.back();
    for (EdgeId e : g_.incident(x)) {
      Vertex y = g_.neighbor(x, e);
      if (y == start_ && path_.size() >= 3 && path_[1] < path_.back()) {
        if (static_cast<int>(path_.size()) > best_.length) {
          best_.length = static_cast<int>(path_.size());
          best_.cycle = path_;
        }
        continue;
      }
      if (y <= start_ || on_path_[y]) continue;
      on_path_[y] = 1;
      path_.push_back(y);
      extend();
      path_.pop_back();
      on_path_[y] = 0;
      if (best_.length == g_.order()) return;
    }
  }

  Graph const& g_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  LongestCycle best_;
};

}  // namespace detail

/// Exact longest cycle. Throws CapExceeded above `cap` vertices.
inline LongestCycle circumference(Graph const& g, int cap = kDefaultCycleCap) {
  if (g.order() > cap)
    throw Error(ErrorCode::CapExceeded, "circumference search capped at order " + std::to_string(cap));
  return detail::LongestCycleSearch(g).run();
}

/// Two poles joined by three internally disjoint paths spanning V(G).
/// Each path is listed from `a` to `b` inclusive.
struct ThetaWitness {
  Vertex a = -1;
  Vertex b = -1;
  std::array<std::vector<Vertex>, 3> paths;

  int internal(int i) const { return static_cast<int>(paths[i].size()) - 2; }
};

/// Returns a reason when `w` is not a spanning theta of `g`.
inline std::optional<std::string> theta_violation(Graph const& g, ThetaWitness const& w) {
  if (w.a == w.b || w.a < 0 || w.b < 0 || w.a >= g.order() || w.b >= g.order()) return "bad poles";
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  EdgeSet used;
  for (auto const& p : w.paths) {
    if (p.size() < 2 || p.front() != w.a || p.back() != w.b) return "path does not join the poles";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      auto e = g.edge_between(p[i], p[i + 1]);
      if (!e) return "consecutive path vertices are not adjacent";
      used.push_back(*e);
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) ++hits[p[i]];
  }
  auto sorted = normalized(used);
  if (sorted.size() != used.size()) return "paths share an edge";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == w.a || v == w.b) continue;
    if (hits[v] == 0) return "vertex " + std::to_string(v) + " not spanned";
    if (hits[v] > 1) return "paths share internal vertex " + std::to_string(v);
  }
  for (auto const& p : w.paths)
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (p[i] == w.a || p[i] == w.b) return "path passes through a pole";
  return std::nullopt;
}

inline EdgeSet theta_edges(Graph const& g, ThetaWitness const& w) {
  EdgeSet out;
  for (auto const& p : w.paths)
    for (EdgeId e : path_edges(g, p)) out.push_back(e);
  return normalized(out);
}

namespace detail {

// Walks a -Q1-> b -Q2-> a -Q3-> b. Q1 leaves a by its first edge, Q2
// returns by the second and Q3 leaves by the third; with a < b this fixes
// one labelling of every theta.
class ThetaSearch {
 public:
  explicit ThetaSearch(Graph const& g) : g_(g), visited_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<ThetaWitness> run() {
    for (Vertex a = 0; a < g_.order(); ++a) {
      a_ = a;
      auto inc = g_.incident(a);
      visited_[a] = 1;
      remaining_ = g_.order() - 1;
      legs_ = {{{a}, {}, {}}};
      Vertex first = g_.neighbor(a, inc[0]);
      if (step(0, first, inc[0])) return witness();
      visited_[a] = 0;
    }
    return std::nullopt;
  }

 private:
  ThetaWitness witness() const {
    ThetaWitness w;
    w.a = a_;
    w.b = b_;
    w.paths[0] = legs_[0];
    w.paths[1].assign(legs_[1].rbegin(), legs_[1].rend());
    w.paths[2] = legs_[2];
    return w;
  }

  bool reachable_ok(Vertex from) const {
    if (remaining_ == 0) return true;
    std::vector<char> seen(visited_.size(), 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    int count = 0;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.incident(x)) {
        Vertex y = g_.neighbor(x, e);
        if (visited_[y] || seen[y]) continue;
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
    return count == remaining_;
  }

  // Arrive at `x` along edge `via` during leg `leg`.
  bool step(int leg, Vertex x, EdgeId via) {
    auto inc_a = g_.incident(a_);
    if (leg == 0) {
      if (x == a_) return false;
      if (visited_[x]) return false;
      visited_[x] = 1;
      --remaining_;
      legs_[0].push_back(x);
      // Option: x is the second pole.
      if (x > a_) {
        b_ = x;
        b_in_ = via;
        for (EdgeId e : g_.incident(x)) {
          if (e == via) continue;
          legs_[1] = {x};
          b_out_ = e;
          if (step(1, g_.neighbor(x, e), e)) return true;
        }
        b_ = -1;
      }
      // Option: x is internal to Q1.
      if (reachable_ok(x)) {
        for (EdgeId e : g_.incident(x)) {
          if (e == via) continue;
          if (step(0, g_.neighbor(x, e), e)) return true;
        }
      }
      legs_[0].pop_back();
      visited_[x] = 0;
      ++remaining_;
      return false;
    }
    if (leg == 1) {
      if (x == a_) {
        if (via != inc_a[1]) return false;
        legs_[1].push_back(a_);
        legs_[2] = {a_};
        if (step(2, g_.neighbor(a_, inc_a[2]), inc_a[2])) return true;
        legs_[1].pop_back();
        return false;
      }
      if (visited_[x]) return false;
      visited_[x] = 1;
      --remaining_;
      legs_[1].push_back(x);
      if (reachable_ok(x)) {
        for (EdgeId e : g_.incident(x)) {
          if (e == via) continue;
          if (step(1, g_.neighbor(x, e), e)) return true;
        }
      }
      legs_[1].pop_back();
      visited_[x] = 0;
      ++remaining_;
      return false;
    }
    // leg 2
    if (x == b_) {
      if (via == b_in_ || via == b_out_ || remaining_ != 0) return false;
      legs_[2].push_back(b_);
      return true;
    }
    if (x == a_ || visited_[x]) return false;
    visited_[x] = 1;
    --remaining_;
    legs_[2].push_back(x);
    if (reachable_ok(x)) {
      for (EdgeId e : g_.incident(x)) {
        if (e == via) continue;
        if (step(2, g_.neighbor(x, e), e)) return true;
      }
    }
    legs_[2].pop_back();
    visited_[x] = 0;
    ++remaining_;
    return false;
  }

  Graph const& g_;
  std::vector<char> visited_;
  Vertex a_ = -1, b_ = -1;
  EdgeId b_in_ = -1, b_out_ = -1;
  int remaining_ = 0;
  std::array<std::vector<Vertex>, 3> legs_;
};

}  // namespace detail

/// Spanning theta subgraph of a bridgeless cubic graph, or nullopt after an
/// exhaustive search. Throws HasBridge or CapExceeded.
inline std::optional<ThetaWitness> three_star_witness(Graph const& g, int cap = kDefaultCycleCap) {
  if (!bridges(g).empty()) throw Error(ErrorCode::HasBridge, "3*-connectivity needs a bridgeless graph");
  if (g.order() > cap)
    throw Error(ErrorCode::CapExceeded, "theta search capped at order " + std::to_string(cap));
  return detail::ThetaSearch(g).run();
}

/// The other characterisation: an [n-1]-matching whose removal leaves the
/// graph connected. Exhaustive over [n-1]-matchings.
inline std::optional<Matching> connected_complement_matching(Graph const& g) {
  std::optional<Matching> found;
  for_each_matching(g, g.order() / 2 - 1, [&](Matching&& m) {
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!m.contains(e)) rest.emplace_back(g.edge(e).u, g.edge(e).v);
    if (Graph(g.order(), rest).connected()) {
      found = std::move(m);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace excessive
