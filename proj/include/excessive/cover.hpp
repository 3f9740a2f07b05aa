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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excessive/coloring.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

/// Ordered list of matchings whose union is E(host). `m` is the common size
/// when fixed.
struct Cover {
  std::vector<Matching> matchings;
  std::optional<int> m;

  int size() const { return static_cast<int>(matchings.size()); }
  int total() const {
    int s = 0;
    for (auto const& x : matchings) s += x.size();
    return s;
  }
};

struct Verdict {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

inline std::string describe_edge(Graph const& g, EdgeId e) {
  return std::to_string(e) + " [" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "]";
}

/// Every member is a matching of size `m` (skipped when m < 0) and the
/// union is E(g). The diagnostic names the first violated condition.
inline Verdict verify_cover(Graph const& g, Cover const& cover, int m) {
  std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
  for (std::size_t i = 0; i < cover.matchings.size(); ++i) {
    auto const& mm = cover.matchings[i];
    std::vector<EdgeId> owner(static_cast<std::size_t>(g.order()), -1);
    for (EdgeId e : mm) {
      if (e < 0 || e >= g.size())
        return Verdict::fail("matching " + std::to_string(i) + " has invalid edge index " + std::to_string(e));
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (owner[x] >= 0)
          return Verdict::fail("matching " + std::to_string(i) + ": edges " + describe_edge(g, owner[x]) +
                               " and " + describe_edge(g, e) + " share vertex " + std::to_string(x));
        owner[x] = e;
      }
      covered[e] = 1;
    }
    if (m >= 0 && mm.size() != m)
      return Verdict::fail("matching " + std::to_string(i) + " has size " + std::to_string(mm.size()) +
                           ", expected " + std::to_string(m));
  }
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!covered[e]) return Verdict::fail("edge " + describe_edge(g, e) + " is not covered");
  return Verdict::pass();
}

/// Sum over matchings of | |M_i| - target |.
inline int imbalance(Cover const& c, int target) {
  int s = 0;
  for (auto const& m : c.matchings) s += std::abs(m.size() - target);
  return s;
}

/// Exchange procedure: while some |M_i| < target < |M_j|, flip an
/// alternating path of M_i Δ M_j that starts and ends with M_j edges. The
/// union and the number of matchings never change; each flip lowers the
/// imbalance by 2. `on_step` receives the imbalance after every flip.
inline Cover rebalance_cover(Graph const& g, Cover cover, int target,
                             std::function<void(int)> const& on_step = {}) {
  const int t = cover.size();
  if (cover.total() != target * t)
    throw Error(ErrorCode::SizeMismatch, "sizes sum to " + std::to_string(cover.total()) + ", need " +
                                             std::to_string(target * t));
  for (auto const& m : cover.matchings)
    if (!m.valid_in(g)) throw Error(ErrorCode::PreconditionViolated, "cover member is not a matching");
  for (;;) {
    int lo = -1, hi = -1;
    for (int i = 0; i < t; ++i) {
      int s = cover.matchings[i].size();
      if (s < target && (lo < 0 || s < cover.matchings[lo].size())) lo = i;
      if (s > target && (hi < 0 || s > cover.matchings[hi].size())) hi = i;
    }
    if (lo < 0 && hi < 0) break;
    if (lo < 0 || hi < 0)
      throw Error(ErrorCode::InternalExchangeFailure, "imbalance without a deficient/excess pair");
    auto const& small = cover.matchings[lo].edges();
    auto const& big = cover.matchings[hi].edges();
    EdgeSet diff;
    std::set_symmetric_difference(small.begin(), small.end(), big.begin(), big.end(),
                                  std::back_inserter(diff));
    // Walk each path component of the symmetric difference from an end.
    std::vector<std::vector<EdgeId>> at(static_cast<std::size_t>(g.order()));
    for (EdgeId e : diff) {
      at[g.edge(e).u].push_back(e);
      at[g.edge(e).v].push_back(e);
    }
    std::vector<char> done(static_cast<std::size_t>(g.size()), 0);
    std::optional<std::vector<EdgeId>> chosen;
    for (EdgeId e : diff) {
      if (done[e]) continue;
      Vertex end = -1;
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        // Find an end of this component by walking away from e.
        Vertex cur = x;
        EdgeId via = e;
        for (;;) {
          EdgeId nxt = -1;
          for (EdgeId f : at[cur])
            if (f != via) nxt = f;
          if (nxt < 0) break;
          if (nxt == e) {
            cur = -1;
            break;
          }
          via = nxt;
          cur = g.neighbor(cur, nxt);
        }
        if (cur >= 0) {
          end = cur;
          break;
        }
      }
      if (end < 0) {
        // Even cycle: mark it and move on.
        Vertex cur = g.edge(e).u;
        EdgeId via = -1;
        do {
          EdgeId nxt = -1;
          for (EdgeId f : at[cur])
            if (f != via) nxt = f;
          done[nxt] = 1;
          via = nxt;
          cur = g.neighbor(cur, nxt);
        } while (via != e || cur != g.edge(e).u);
        continue;
      }
      std::vector<EdgeId> path;
      Vertex cur = end;
      EdgeId via = -1;
      for (;;) {
        EdgeId nxt = -1;
        for (EdgeId f : at[cur])
          if (f != via) nxt = f;
        if (nxt < 0) break;
        path.push_back(nxt);
        done[nxt] = 1;
        via = nxt;
        cur = g.neighbor(cur, nxt);
      }
      int from_big = 0;
      for (EdgeId f : path) from_big += contains(big, f) ? 1 : -1;
      if (from_big == 1 && !chosen) chosen = std::move(path);
    }
    if (!chosen)
      throw Error(ErrorCode::InternalExchangeFailure, "no odd alternating path starting and ending in the larger matching");
    auto flip = normalized(*chosen);
    cover.matchings[lo] = Matching([&] {
      EdgeSet out;
      std::set_symmetric_difference(small.begin(), small.end(), flip.begin(), flip.end(),
                                    std::back_inserter(out));
      return out;
    }());
    cover.matchings[hi] = Matching([&] {
      EdgeSet out;
      std::set_symmetric_difference(big.begin(), big.end(), flip.begin(), flip.end(),
                                    std::back_inserter(out));
      return out;
    }());
    if (on_step) on_step(imbalance(cover, target));
  }
  cover.m = target;
  return cover;
}

enum class LowerBoundKind { Counting, Exclusion, Exhaustion };

inline const char* to_string(LowerBoundKind k) {
  switch (k) {
    case LowerBoundKind::Counting: return "counting";
    case LowerBoundKind::Exclusion: return "exclusion";
    case LowerBoundKind::Exhaustion: return "exhaustion";
  }
  return "?";
}

struct LowerBoundCert {
  LowerBoundKind kind = LowerBoundKind::Counting;
  int bound = 0;
  EdgeSet exclusion_edges;        // Exclusion: pairwise never in a common [m]-matching
  int refuted = 0;                // Exhaustion: no cover of this size exists
  std::int64_t search_nodes = 0;  // Exhaustion: effort spent
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline LowerBoundCert counting_bound(Graph const& g, int m) {
  return {LowerBoundKind::Counting, ceil_div(g.size(), m), {}, 0, 0};
}

/// Distinguished value for an infinite index.
class IndexValue {
 public:
  static IndexValue infinity() { return IndexValue(-1); }
  static IndexValue finite(int v) { return IndexValue(v); }
  bool is_infinite() const { return v_ < 0; }
  int get() const {
    if (v_ < 0) throw Error(ErrorCode::BadParameter, "index is infinite");
    return v_;
  }
  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }
  friend bool operator==(IndexValue, IndexValue) = default;

 private:
  explicit IndexValue(int v) : v_(v) {}
  int v_;
};

struct IndexResult {
  IndexValue value = IndexValue::finite(0);  // meaningful when exact
  int lower = 0;
  std::optional<int> upper;
  std::optional<Cover> certificate_upper;
  std::optional<LowerBoundCert> certificate_lower;
  bool exact = false;
  std::optional<EdgeId> non_extendable_edge;  // set for infinite values
  bool budget_exhausted = false;
  std::int64_t nodes = 0;
};

/// Every edge lies in some [m]-matching; otherwise reports an edge that
/// does not.
struct Finiteness {
  bool finite = true;
  std::optional<EdgeId> witness;
};

inline Finiteness index_is_finite(Graph const& g, int m) {
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!extendable(g, {e}, m)) return {false, e};
  return {};
}

struct ExclusionOutcome {
  std::optional<LowerBoundCert> cert;
  std::optional<std::pair<EdgeId, EdgeId>> refused_pair;
};

/// Certifies χ'_[m] >= |candidate| when no two candidate edges lie in a
/// common [m]-matching; otherwise refuses with a co-occurring pair.
inline ExclusionOutcome exclusion_lower_bound(Graph const& g, int m, EdgeSet candidate) {
  candidate = normalized(std::move(candidate));
  for (std::size_t i = 0; i < candidate.size(); ++i)
    for (std::size_t j = i + 1; j < candidate.size(); ++j)
      if (co_extendable(g, candidate[i], candidate[j], m))
        return {std::nullopt, std::make_pair(candidate[i], candidate[j])};
  LowerBoundCert c;
  c.kind = LowerBoundKind::Exclusion;
  c.bound = static_cast<int>(candidate.size());
  c.exclusion_edges = std::move(candidate);
  return {std::move(c), std::nullopt};
}

/// Checks counting and exclusion certificates. Exhaustion certificates are
/// re-derived by the solver (see `verify_exhaustion`).
inline Verdict verify_lower_bound(Graph const& g, int m, LowerBoundCert const& c) {
  switch (c.kind) {
    case LowerBoundKind::Counting:
      if (c.bound > ceil_div(g.size(), m))
        return Verdict::fail("counting bound exceeds ceil(|E|/m)");
      return Verdict::pass();
    case LowerBoundKind::Exclusion: {
      if (c.bound > static_cast<int>(c.exclusion_edges.size()))
        return Verdict::fail("exclusion bound exceeds the size of its edge set");
      auto out = exclusion_lower_bound(g, m, c.exclusion_edges);
      if (!out.cert)
        return Verdict::fail("edges " + describe_edge(g, out.refused_pair->first) + " and " +
                             describe_edge(g, out.refused_pair->second) + " lie in a common [" +
                             std::to_string(m) + "]-matching");
      return Verdict::pass();
    }
    case LowerBoundKind::Exhaustion:
      if (c.bound != c.refuted + 1) return Verdict::fail("exhaustion bound must be refuted size + 1");
      return Verdict::pass();
  }
  return Verdict::fail("unknown certificate kind");
}

/// Cover of `t` matchings of size exactly `m`, built from a proper edge
/// coloring padded with copies of a maximum matching, trimmed to t*m
/// incidences and rebalanced. Nullopt when the padding cannot reach t*m.
inline std::optional<Cover> padded_coloring_cover(Graph const& g, int m, int t) {
  if (m <= 0 || t <= 0 || t * m < g.size()) return std::nullopt;
  std::vector<Matching> classes;
  if (auto tait = three_edge_coloring(g, 1'000'000); tait && t >= 3) {
    classes.assign(tait->begin(), tait->end());
  } else {
    classes = edge_coloring_classes(g);
  }
  const int k = static_cast<int>(classes.size());
  if (t < k) return std::nullopt;
  Matching big = maximum_matching(g);
  if (big.size() < m) return std::nullopt;
  const int copies = t - k;
  long long excess = static_cast<long long>(g.size()) + static_cast<long long>(copies) * big.size() -
                     static_cast<long long>(t) * m;
  if (excess < 0) return std::nullopt;
  std::vector<EdgeSet> pads(static_cast<std::size_t>(copies), big.edges());
  // Trim copies round-robin from the back; every copied edge is also in a
  // color class, so coverage is kept.
  for (int i = 0; excess > 0; i = (i + 1) % copies) {
    if (pads[i].empty()) continue;
    pads[i].pop_back();
    --excess;
  }
  Cover c;
  c.matchings = std::move(classes);
  for (auto& p : pads) c.matchings.emplace_back(std::move(p));
  return rebalance_cover(g, std::move(c), m);
}

/// Closed formula for m < ceil(3n/4): the index is ceil(3n/m), certified by
/// a padded coloring cover and the counting bound. Nullopt otherwise.
inline std::optional<IndexResult> small_m_index(CubicGraph const& g, int m) {
  if (m < 1 || m > g.n()) throw Error(ErrorCode::BadParameter, "m must lie in [1, n]");
  if (m >= ceil_div(3 * g.n(), 4)) return std::nullopt;
  const int t = ceil_div(3 * g.n(), m);
  auto cover = padded_coloring_cover(g, m, t);
  if (!cover) throw Error(ErrorCode::StructureViolation, "padded cover failed below the formula threshold");
  IndexResult r;
  r.value = IndexValue::finite(t);
  r.lower = t;
  r.upper = t;
  r.certificate_upper = std::move(cover);
  r.certificate_lower = counting_bound(g, m);
  r.exact = true;
  return r;
}

}  // namespace excessive
