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

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "excessive/connectivity.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(Rational const& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Edge weights with every vertex sum equal to 1 and every odd cut carrying
/// weight at least 1.
struct FractionalPM {
  std::vector<Rational> weight;  // indexed by edge

  Rational dot(std::vector<Rational> const& c) const {
    Rational s = 0;
    for (std::size_t e = 0; e < weight.size(); ++e) s += weight[e] * c[e];
    return s;
  }
  Rational total() const {
    Rational s = 0;
    for (auto const& w : weight) s += w;
    return s;
  }
};

namespace detail {

inline std::int64_t common_denominator(std::vector<Rational> const& xs) {
  std::int64_t d = 1;
  for (auto const& x : xs) d = std::lcm(d, x.denominator());
  return d;
}

inline std::vector<std::int64_t> scaled(std::vector<Rational> const& xs, std::int64_t d) {
  std::vector<std::int64_t> out;
  out.reserve(xs.size());
  for (auto const& x : xs) out.push_back(x.numerator() * (d / x.denominator()));
  return out;
}

}  // namespace detail

inline constexpr int kExhaustiveOddCutOrder = 20;

/// Checks the FractionalPM invariants. Odd cuts are enumerated exhaustively
/// up to order 20; above that, `samples` random connected odd sets are
/// checked. Returns a description of the first violation found.
inline std::optional<std::string> fractional_pm_violation(Graph const& g, FractionalPM const& w,
                                                          int samples = 20000,
                                                          std::uint32_t seed = 1) {
  if (static_cast<int>(w.weight.size()) != g.size()) return "weight vector has wrong length";
  for (EdgeId e = 0; e < g.size(); ++e)
    if (w.weight[e] < Rational(0) || w.weight[e] > Rational(1)) return "weight of edge " + std::to_string(e) + " outside [0,1]";
  for (Vertex v = 0; v < g.order(); ++v) {
    Rational s = 0;
    for (EdgeId e : g.incident(v)) s += w.weight[e];
    if (s != Rational(1)) return "vertex " + std::to_string(v) + " has weight sum " + to_string(s);
  }
  const std::int64_t d = detail::common_denominator(w.weight);
  const auto iw = detail::scaled(w.weight, d);
  auto cut_of = [&](std::vector<char> const& in) {
    std::int64_t s = 0;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (in[g.edge(e).u] != in[g.edge(e).v]) s += iw[e];
    return s;
  };
  const int n = g.order();
  if (n <= kExhaustiveOddCutOrder) {
    std::vector<char> in(static_cast<std::size_t>(n));
    // Fix vertex n-1 outside; complements give the same cut.
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
      if (cut_of(in) < d) return "odd set with mask " + std::to_string(mask) + " has cut weight below 1";
    }
    return std::nullopt;
  }
  std::mt19937 rng(seed);
  std::vector<char> in(static_cast<std::size_t>(n));
  for (int t = 0; t < samples; ++t) {
    std::fill(in.begin(), in.end(), 0);
    int target = 1 + 2 * static_cast<int>(rng() % static_cast<std::uint32_t>((n - 1) / 2 + 1));
    if (target >= n) target = n - 1;
    std::vector<Vertex> frontier{static_cast<Vertex>(rng() % static_cast<std::uint32_t>(n))};
    in[frontier[0]] = 1;
    int size = 1;
    while (size < target && !frontier.empty()) {
      std::size_t pick = rng() % frontier.size();
      Vertex x = frontier[pick];
      std::vector<Vertex> free;
      for (EdgeId e : g.incident(x))
        if (!in[g.neighbor(x, e)]) free.push_back(g.neighbor(x, e));
      if (free.empty()) {
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
        continue;
      }
      Vertex y = free[rng() % free.size()];
      in[y] = 1;
      ++size;
      frontier.push_back(y);
    }
    if (size % 2 == 0) continue;
    if (cut_of(in) < d) return "sampled odd set has cut weight below 1";
  }
  return std::nullopt;
}

/// Weight 1/5 on the edges of `m1` and 2/5 elsewhere.
inline FractionalPM canonical_fractional_pm(Graph const& g, Matching const& m1,
                                           bool check_gate = true) {
  if (!is_perfect(g, m1)) throw Error(ErrorCode::NotPerfectMatching, "m1 is not a perfect matching");
  if (check_gate && !is_cyclically_k_connected(g, 4))
    throw Error(ErrorCode::NotCyclically4Connected, "graph has a cyclic cut of size < 4");
  FractionalPM w;
  w.weight.assign(static_cast<std::size_t>(g.size()), Rational(2, 5));
  for (EdgeId e : m1) w.weight[e] = Rational(1, 5);
  if (auto bad = fractional_pm_violation(g, w))
    throw Error(ErrorCode::NotFractionalPM, *bad);
  return w;
}

inline Rational matching_value(Matching const& m, std::vector<Rational> const& c) {
  Rational s = 0;
  for (EdgeId e : m) s += c[e];
  return s;
}

/// Perfect matching maximising the total of `c`, exact. Among optima the
/// lexicographically smallest sorted edge-index set is returned.
inline Matching max_weight_perfect_matching(Graph const& g, std::vector<Rational> const& c) {
  if (static_cast<int>(c.size()) != g.size())
    throw Error(ErrorCode::BadParameter, "weight vector has wrong length");
  const std::int64_t d = detail::common_denominator(c);
  const auto w = detail::scaled(c, d);
  const int n = g.order();
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  EdgeSet current;
  std::optional<EdgeSet> best;
  std::int64_t best_value = 0;

  auto bound2 = [&](std::int64_t value) {
    // Twice an upper bound: each undecided vertex contributes its best edge.
    std::int64_t b = 2 * value;
    for (Vertex v = 0; v < n; ++v) {
      if (matched[v]) continue;
      std::optional<std::int64_t> mx;
      for (EdgeId e : g.incident(v))
        if (!matched[g.neighbor(v, e)] && (!mx || w[e] > *mx)) mx = w[e];
      if (!mx) return std::optional<std::int64_t>{};
      b += *mx;
    }
    return std::optional<std::int64_t>{b};
  };

  auto rec = [&](auto&& self, std::int64_t value) -> void {
    Vertex v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      EdgeSet s = normalized(current);
      if (!best || value > best_value || (value == best_value && s < *best)) {
        best = std::move(s);
        best_value = value;
      }
      return;
    }
    auto b = bound2(value);
    if (!b || (best && *b < 2 * best_value)) return;
    matched[v] = 1;
    for (EdgeId e : g.incident(v)) {
      Vertex u = g.neighbor(v, e);
      if (matched[u]) continue;
      matched[u] = 1;
      current.push_back(e);
      self(self, value + w[e]);
      current.pop_back();
      matched[u] = 0;
    }
    matched[v] = 0;
  };
  rec(rec, 0);
  if (!best) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
  return Matching(std::move(*best));
}

}  // namespace excessive
