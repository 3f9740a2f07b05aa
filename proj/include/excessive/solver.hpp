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
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <unordered_set>
#include <vector>

#include "excessive/cover.hpp"
#include "excessive/graph.hpp"
#include "excessive/matching.hpp"

namespace excessive {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// Upper limit on the stored [m]-matching family, independent of the node
// budget, so that large graphs give up before exhausting memory.
inline constexpr std::int64_t kFamilyCap = 1'000'000;

/// Default node budget, overridden by the EXC_BUDGET environment variable.
inline std::int64_t default_budget() {
  if (const char* s = std::getenv("EXC_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

struct SolverOptions {
  std::int64_t budget = default_budget();
  bool use_formula = true;        // closed formula below ceil(3n/4)
  bool use_padded_upper = true;   // padded coloring cover as the first upper bound
  bool use_exclusion = true;      // clique bound over the exclusion graph
  std::optional<Cover> initial_upper;
};

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  int count_and_not(Bits const& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
    return c;
  }
  Bits and_not(Bits const& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  bool subset_of(Bits const& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits& operator|=(Bits const& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  bool operator==(Bits const& o) const = default;
  std::vector<std::uint64_t> const& words() const { return w_; }

 private:
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(std::pair<Bits, int> const& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k.second);
    for (auto x : k.first.words()) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Covering search over a fixed family of [m]-matchings.
class CoverSearch {
 public:
  CoverSearch(Graph const& g, int m, std::vector<Matching> const& family, std::int64_t& nodes,
              std::int64_t budget)
      : g_(g), m_(m), family_(family), nodes_(nodes), budget_(budget),
        containing_(static_cast<std::size_t>(g.size())) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      Bits b(g.size());
      for (EdgeId e : family[i]) {
        b.set(e);
        containing_[e].push_back(static_cast<int>(i));
      }
      bits_.push_back(std::move(b));
    }
  }

  bool exhausted() const { return nodes_ > budget_; }

  // A cover by exactly `k` family members, or nullopt when none exists or
  // the budget ran out (check `exhausted`).
  std::optional<std::vector<int>> find(int k) {
    chosen_.clear();
    failed_.clear();
    Bits covered(g_.size());
    if (dfs(covered, k)) return chosen_;
    return std::nullopt;
  }

 private:
  int bound(Bits const& covered) const {
    int uncovered = g_.size() - covered.count();
    int local = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      int c = 0;
      for (EdgeId e : g_.incident(v)) c += covered.test(e) ? 0 : 1;
      local = std::max(local, c);
    }
    return std::max(ceil_div(uncovered, m_), local);
  }

  bool dfs(Bits const& covered, int slots) {
    if (++nodes_ > budget_) return false;
    EdgeId pick = -1;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (covered.test(e)) continue;
      if (pick < 0 || containing_[e].size() < containing_[pick].size()) pick = e;
    }
    if (pick < 0) {
      // Pad with repeats of the first chosen member up to k.
      while (slots-- > 0) chosen_.push_back(chosen_.empty() ? 0 : chosen_.front());
      return true;
    }
    if (slots == 0 || bound(covered) > slots) return false;
    auto key = std::make_pair(covered, slots);
    if (failed_.count(key)) return false;

    std::vector<std::pair<int, int>> order;  // (-gain, index)
    for (int i : containing_[pick]) order.emplace_back(-bits_[i].count_and_not(covered), i);
    std::sort(order.begin(), order.end());
    std::vector<Bits> tried;
    for (auto [neg_gain, i] : order) {
      Bits fresh = bits_[i].and_not(covered);
      // A member whose new edges are a subset of a failed member's is dominated.
      bool dominated = false;
      for (auto const& t : tried)
        if (fresh.subset_of(t)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      Bits next = covered;
      next |= bits_[i];
      chosen_.push_back(i);
      if (dfs(next, slots - 1)) return true;
      chosen_.pop_back();
      if (nodes_ > budget_) return false;
      tried.push_back(std::move(fresh));
    }
    if (failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return false;
  }

  static constexpr std::size_t kMemoCap = 4'000'000;

  Graph const& g_;
  int m_;
  std::vector<Matching> const& family_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  std::vector<Bits> bits_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> chosen_;
  std::unordered_set<std::pair<Bits, int>, BitsHash> failed_;
};

// Largest set of edges pairwise excluded from common [m]-matchings, by
// branch and bound on the exclusion graph.
class ExclusionClique {
 public:
  ExclusionClique(Graph const& g, int m, std::int64_t& nodes, std::int64_t budget)
      : n_(g.size()), nodes_(nodes), budget_(budget),
        adj_(static_cast<std::size_t>(g.size()), Bits(g.size())) {
    for (EdgeId e = 0; e < n_; ++e)
      for (EdgeId f = e + 1; f < n_; ++f) {
        ++nodes_;
        if (!co_extendable(g, e, f, m)) {
          adj_[e].set(f);
          adj_[f].set(e);
        }
      }
  }

  EdgeSet run() {
    std::vector<int> cand(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) cand[i] = i;
    std::vector<int> cur;
    grow(cur, cand);
    return EdgeSet(best_.begin(), best_.end());
  }

 private:
  void grow(std::vector<int>& cur, std::vector<int> const& cand) {
    if (++nodes_ > budget_) return;
    if (cur.size() > best_.size()) best_ = cur;
    if (cur.size() + cand.size() <= best_.size()) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cur.size() + (cand.size() - i) <= best_.size()) return;
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adj_[v].test(cand[j])) next.push_back(cand[j]);
      cur.push_back(v);
      grow(cur, next);
      cur.pop_back();
      if (nodes_ > budget_) return;
    }
  }

  int n_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  std::vector<Bits> adj_;
  std::vector<int> best_;
};

inline constexpr int kExclusionEdgeCap = 100;

}  // namespace detail

/// Best exclusion certificate found within the budget share, by exact clique
/// search on graphs with at most 100 edges.
inline std::optional<LowerBoundCert> best_exclusion_bound(Graph const& g, int m, std::int64_t& nodes,
                                                          std::int64_t budget) {
  if (g.size() > detail::kExclusionEdgeCap) return std::nullopt;
  detail::ExclusionClique clique(g, m, nodes, budget);
  auto edges = clique.run();
  auto out = exclusion_lower_bound(g, m, edges);
  return out.cert;
}

/// Exact excessive [m]-index by iterative deepening over covers built from
/// the full family of [m]-matchings. Bounds-only when the budget runs out.
inline IndexResult excessive_index(CubicGraph const& g, int m, SolverOptions const& opt = {}) {
  if (m < 1 || m > g.n()) throw Error(ErrorCode::BadParameter, "m must lie in [1, n]");
  IndexResult r;
  if (auto fin = index_is_finite(g, m); !fin.finite) {
    r.value = IndexValue::infinity();
    r.exact = true;
    r.non_extendable_edge = fin.witness;
    r.lower = 0;
    return r;
  }
  if (opt.use_formula)
    if (auto fast = small_m_index(g, m)) return *fast;

  std::int64_t nodes = 0;
  LowerBoundCert lower = counting_bound(g, m);
  if (opt.use_exclusion) {
    if (auto ex = best_exclusion_bound(g, m, nodes, opt.budget / 4); ex && ex->bound > lower.bound)
      lower = *ex;
  }
  r.lower = lower.bound;
  r.certificate_lower = lower;

  auto accept_upper = [&](Cover c) {
    if (!verify_cover(g, c, m)) return;
    if (!r.upper || c.size() < *r.upper) {
      r.upper = c.size();
      c.m = m;
      r.certificate_upper = std::move(c);
    }
  };
  if (opt.initial_upper) accept_upper(*opt.initial_upper);
  if (opt.use_padded_upper) {
    const int start = std::max(r.lower, ceil_div(g.size(), m));
    for (int t = start; t <= start + 4; ++t)
      if (auto c = padded_coloring_cover(g, m, t)) {
        accept_upper(std::move(*c));
        break;
      }
  }

  auto finish_exact = [&] {
    r.exact = true;
    r.value = IndexValue::finite(*r.upper);
    r.nodes = nodes;
    return r;
  };
  if (r.upper && *r.upper == r.lower) return finish_exact();

  std::vector<Matching> family;
  bool overflow = false;
  for_each_matching(g, m, [&](Matching&& mm) {
    if (++nodes > opt.budget || static_cast<std::int64_t>(family.size()) >= kFamilyCap) {
      overflow = true;
      return false;
    }
    family.push_back(std::move(mm));
    return true;
  });
  auto give_up = [&] {
    r.budget_exhausted = true;
    r.exact = false;
    r.nodes = nodes;
    if (r.upper) r.value = IndexValue::finite(*r.upper);
    return r;
  };
  if (overflow) return give_up();

  detail::CoverSearch search(g, m, family, nodes, opt.budget);
  for (int k = r.lower; !r.upper || k < *r.upper; ++k) {
    auto found = search.find(k);
    if (found) {
      Cover c;
      for (int i : *found) c.matchings.push_back(family[i]);
      c.m = m;
      r.upper = k;
      r.certificate_upper = std::move(c);
      break;
    }
    if (search.exhausted()) return give_up();
    LowerBoundCert ex;
    ex.kind = LowerBoundKind::Exhaustion;
    ex.refuted = k;
    ex.bound = k + 1;
    ex.search_nodes = nodes;
    r.lower = k + 1;
    r.certificate_lower = ex;
  }
  return finish_exact();
}

/// Re-derives an exhaustion certificate: no cover by `refuted` [m]-matchings.
inline Verdict verify_exhaustion(CubicGraph const& g, int m, LowerBoundCert const& c,
                                 std::int64_t budget = default_budget()) {
  if (c.kind != LowerBoundKind::Exhaustion) return verify_lower_bound(g, m, c);
  if (auto v = verify_lower_bound(g, m, c); !v) return v;
  std::vector<Matching> family = enumerate_matchings(g, m, budget);
  if (static_cast<std::int64_t>(family.size()) >= budget)
    return Verdict::fail("matching family exceeds the verification budget");
  std::int64_t nodes = 0;
  detail::CoverSearch search(g, m, family, nodes, budget);
  if (search.find(c.refuted)) return Verdict::fail("a cover of the refuted size exists");
  if (search.exhausted()) return Verdict::fail("verification budget exhausted");
  return Verdict::pass();
}

}  // namespace excessive
