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
#include <string>
#include <vector>

#include "excessive/cover.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

using BergeFulkerson = std::array<Matching, 5>;

/// Five perfect matchings covering every edge at most twice, hence every
/// edge exactly once or twice.
inline Verdict verify_berge_fulkerson(Graph const& g, BergeFulkerson const& pms) {
  std::vector<int> count(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < 5; ++i) {
    if (!is_perfect(g, pms[i])) return Verdict::fail("member " + std::to_string(i) + " is not a perfect matching");
    for (EdgeId e : pms[i]) ++count[e];
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (count[e] == 0) return Verdict::fail("edge " + describe_edge(g, e) + " is not covered");
    if (count[e] > 2) return Verdict::fail("edge " + describe_edge(g, e) + " is covered " + std::to_string(count[e]) + " times");
  }
  return Verdict::pass();
}

namespace detail {

// Each edge gets a 5-bit mask of size 1 or 2; the three masks at a vertex
// must partition {0..4}.
class BergeFulkersonSearch {
 public:
  BergeFulkersonSearch(Graph const& g, std::int64_t budget)
      : g_(g), budget_(budget), mask_(static_cast<std::size_t>(g.size()), 0) {
    for (unsigned v = 1; v < 32; ++v)
      if (std::popcount(v) <= 2) values_.push_back(v);
  }

  std::optional<std::vector<unsigned>> run() {
    if (g_.size() == 0) return mask_;
    // Colors are interchangeable: fix the masks at vertex 0 up to which edge
    // is singly covered.
    auto inc = g_.incident(0);
    for (int single = 0; single < 3; ++single) {
      unsigned m[3];
      m[single] = 1u;
      m[(single + 1) % 3] = 6u;
      m[(single + 2) % 3] = 24u;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) ok = assign(inc[k], m[k]);
      if (ok && search()) return mask_;
      for (EdgeId e : inc) mask_[e] = 0;
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  unsigned used_at(Vertex x, EdgeId skip) const {
    unsigned u = 0;
    for (EdgeId f : g_.incident(x))
      if (f != skip) u |= mask_[f];
    return u;
  }

  int assigned_at(Vertex x) const {
    int c = 0;
    for (EdgeId f : g_.incident(x)) c += mask_[f] != 0;
    return c;
  }

  bool consistent_at(Vertex x) const {
    unsigned seen = 0;
    int count = 0;
    for (EdgeId f : g_.incident(x)) {
      if (!mask_[f]) continue;
      if (seen & mask_[f]) return false;
      seen |= mask_[f];
      ++count;
    }
    if (count == 3) return seen == 31u;
    // The remaining edges must still fit into the unused colors.
    int left = 3 - count, free = 5 - std::popcount(seen);
    return free >= left && free <= 2 * left;
  }

  bool assign(EdgeId e, unsigned m) {
    mask_[e] = m;
    if (!consistent_at(g_.edge(e).u) || !consistent_at(g_.edge(e).v)) {
      mask_[e] = 0;
      return false;
    }
    return true;
  }

  bool search() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    // Most constrained unassigned edge.
    EdgeId best = -1;
    int best_score = -1;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (mask_[e]) continue;
      int s = assigned_at(g_.edge(e).u) + assigned_at(g_.edge(e).v);
      if (s > best_score) {
        best_score = s;
        best = e;
      }
    }
    if (best < 0) return true;
    const unsigned forbid = used_at(g_.edge(best).u, best) | used_at(g_.edge(best).v, best);
    for (unsigned m : values_) {
      if (m & forbid) continue;
      if (!assign(best, m)) continue;
      if (search()) return true;
      mask_[best] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  Graph const& g_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<unsigned> mask_;
  std::vector<unsigned> values_;
};

}  // namespace detail

inline constexpr std::int64_t kDefaultBergeFulkersonBudget = 5'000'000;

/// Depth-first search for a Berge-Fulkerson cover. Nullopt when none
/// exists; throws CapExceeded when the node budget runs out first.
inline std::optional<BergeFulkerson> find_berge_fulkerson_cover(Graph const& g,
                                                                std::int64_t budget = kDefaultBergeFulkersonBudget) {
  detail::BergeFulkersonSearch s(g, budget);
  auto masks = s.run();
  if (!masks) {
    if (s.exhausted()) throw Error(ErrorCode::CapExceeded, "Berge-Fulkerson search budget exhausted");
    return std::nullopt;
  }
  std::array<EdgeSet, 5> sets;
  for (EdgeId e = 0; e < g.size(); ++e)
    for (int c = 0; c < 5; ++c)
      if ((*masks)[e] >> c & 1u) sets[c].push_back(e);
  BergeFulkerson out;
  for (int c = 0; c < 5; ++c) out[c] = Matching(std::move(sets[c]));
  return out;
}

/// Five [n-1]-matchings: delete five doubly covered edges once each, then
/// rebalance.
inline Cover bf5_to_cover(Graph const& g, BergeFulkerson const& pms) {
  if (auto v = verify_berge_fulkerson(g, pms); !v) throw Error(ErrorCode::NotBergeFulkersonCover, v.diagnostic);
  std::vector<int> count(static_cast<std::size_t>(g.size()), 0);
  for (auto const& m : pms)
    for (EdgeId e : m) ++count[e];
  EdgeSet doubled;
  for (EdgeId e = 0; e < g.size() && doubled.size() < 5; ++e)
    if (count[e] == 2) doubled.push_back(e);
  if (doubled.size() < 5)
    throw Error(ErrorCode::TooFewDoubleEdges, "only " + std::to_string(doubled.size()) + " doubly covered edges");
  Cover c;
  c.matchings.assign(pms.begin(), pms.end());
  for (EdgeId e : doubled)
    for (auto& m : c.matchings)
      if (m.contains(e)) {
        m = Matching(set_difference(m.edges(), {e}));
        break;
      }
  const int target = g.order() / 2 - 1;
  c = rebalance_cover(g, std::move(c), target);
  if (auto v = verify_cover(g, c, target); !v)
    throw Error(ErrorCode::StructureViolation, "Berge-Fulkerson reduction does not verify: " + v.diagnostic);
  return c;
}

}  // namespace excessive
