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

#include <random>
#include <set>

#include <catch_amalgamated.hpp>

#include "excessive/coloring.hpp"
#include "excessive/cycles.hpp"
#include "excessive/fractional.hpp"
#include "excessive/generators.hpp"
#include "excessive/matching.hpp"
#include "oracles.hpp"

using namespace excessive;

namespace {

ErrorCode code_of(std::function<void()> const& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an excessive::Error");
  return ErrorCode::Schema;
}

std::set<EdgeSet> as_set(std::vector<Matching> const& ms) {
  std::set<EdgeSet> s;
  for (auto const& m : ms) s.insert(m.edges());
  return s;
}

}  // namespace

TEST_CASE("maximum matching sizes", "[matching-engine]") {
  auto p = named_graph("petersen");
  CHECK(maximum_matching(p).size() == 5);
  CHECK(maximum_matching(p).valid_in(p));
  for (Vertex v = 0; v < p.order(); ++v) CHECK(maximum_matching(p, {v}).size() == 4);
  auto k4 = named_graph("K4");
  CHECK(maximum_matching(k4, {0, 1}).size() == 1);
  CHECK(maximum_matching(p) == maximum_matching(p));
}

TEST_CASE("maximum matching equals brute force on the corpus", "[matching-engine]") {
  std::mt19937 rng(7);
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 12)) {
    // Remove a random vertex pair to get non-perfect instances too.
    Vertex a = static_cast<Vertex>(rng() % g.order());
    Vertex b = static_cast<Vertex>(rng() % g.order());
    std::vector<Vertex> forbidden{a};
    if (b != a) forbidden.push_back(b);
    auto mm = maximum_matching(g, forbidden);
    REQUIRE(mm.valid_in(g));
    for (EdgeId e : mm) {
      CHECK(g.edge(e).u != a);
      CHECK(g.edge(e).v != a);
      CHECK(g.edge(e).u != b);
      CHECK(g.edge(e).v != b);
    }
    int brute = 0;
    for (int m = 1; m <= g.n(); ++m)
      for (auto const& mm : oracle::matchings(g, m)) {
        bool avoids = true;
        for (EdgeId e : mm)
          if (g.edge(e).touches(a) || g.edge(e).touches(b)) avoids = false;
        if (avoids) {
          brute = m;
          break;
        }
      }
    CHECK(mm.size() == brute);
    CHECK(maximum_matching(g).size() == g.n());
  }
}

TEST_CASE("extendable", "[matching-engine]") {
  auto p = named_graph("petersen");
  for (EdgeId e = 0; e < p.size(); ++e) CHECK(extendable(p, {e}, 5));
  CHECK(extendable(p, {}, 0));
  CHECK(extendable(named_graph("K4"), {0}, 2));
  CHECK(code_of([&] { extendable(p, {0, 1}, 4); }) == ErrorCode::SeedNotMatching);
  CHECK_FALSE(extendable(p, {}, 6));
}

TEST_CASE("extendable matches brute force and is monotone in m", "[matching-engine]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 10)) {
    for (int m = 1; m <= g.n(); ++m) {
      auto all = oracle::matchings(g, m);
      for (EdgeId e = 0; e < g.size(); ++e) {
        bool brute = std::any_of(all.begin(), all.end(), [&](auto const& mm) {
          return std::find(mm.begin(), mm.end(), e) != mm.end();
        });
        CHECK(extendable(g, {e}, m) == brute);
        if (m > 1 && extendable(g, {e}, m)) CHECK(extendable(g, {e}, m - 1));
      }
    }
    CHECK(extendable(g, {}, matching_number(g)));
  }
}

TEST_CASE("enumeration counts", "[matching-engine]") {
  auto k4 = named_graph("K4");
  auto p = named_graph("petersen");
  CHECK(enumerate_matchings(k4, 2).size() == 3);
  CHECK(enumerate_matchings(p, 5).size() == oracle::matchings(p, 5).size());
  CHECK(oracle::matchings(p, 5).size() == 6);
  CHECK(enumerate_matchings(p, 5).size() == 6);
  CHECK(enumerate_matchings(p, 0).size() == 1);
  CHECK(perfect_matchings(k4).size() == 3);
  CHECK(perfect_matchings(named_graph("K3_3")).size() == 6);
  CHECK(perfect_matchings(p).size() == 6);
  CHECK(enumerate_matchings(p, 4, 3).size() == 3);
}

TEST_CASE("enumeration is complete, distinct and deterministic", "[matching-engine]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 10)) {
    for (int m = 0; m <= g.n(); ++m) {
      auto got = enumerate_matchings(g, m);
      auto brute = oracle::matchings(g, m);
      std::set<EdgeSet> want(brute.begin(), brute.end());
      CHECK(got.size() == want.size());
      CHECK(as_set(got) == want);
      CHECK(got == enumerate_matchings(g, m));
      for (auto const& mm : got) CHECK(mm.valid_in(g));
    }
  }
}

TEST_CASE("three_edge_coloring", "[matching-engine]") {
  for (auto name : {"K3_3", "prism_Y3", "K4", "cube_Q3"}) {
    auto g = named_graph(name);
    auto col = three_edge_coloring(g);
    REQUIRE(col);
    EdgeSet all;
    for (auto const& m : *col) {
      CHECK(is_perfect(g, m));
      all = set_union(all, m.edges());
    }
    CHECK(static_cast<int>(all.size()) == g.size());
  }
  auto p = named_graph("petersen");
  // No two of the six perfect matchings are disjoint.
  auto pms = perfect_matchings(p);
  for (std::size_t i = 0; i < pms.size(); ++i)
    for (std::size_t j = i + 1; j < pms.size(); ++j)
      CHECK_FALSE(set_intersection(pms[i].edges(), pms[j].edges()).empty());
  CHECK_FALSE(three_edge_coloring(p).has_value());
}

TEST_CASE("coloring, oddness and brute force agree on the corpus", "[matching-engine]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6")) {
    if (!bridges(g).empty()) continue;
    bool col = is_three_edge_colorable(g);
    if (g.order() <= 12) CHECK(col == oracle::three_colorable(g));
    auto cert = oddness_certificate(g);
    CHECK((cert.oddness == 0) == col);
    CHECK(cert.oddness % 2 == 0);
    CHECK(cert.witness.odd_count == cert.oddness);
  }
}

TEST_CASE("Misra-Gries uses at most four colors", "[matching-engine]") {
  auto corpus = oracle::load_corpus("cubic_le14.g6");
  corpus.push_back(named_graph("petersen"));
  corpus.push_back(flower_snark(5));
  for (auto const& g : corpus) {
    auto classes = edge_coloring_classes(g);
    CHECK(classes.size() <= 4);
    int total = 0;
    for (auto const& c : classes) {
      CHECK(c.valid_in(g));
      total += c.size();
    }
    CHECK(total == g.size());
  }
}

TEST_CASE("oddness of snarks", "[matching-engine]") {
  auto p = named_graph("petersen");
  CHECK(oddness(p) == 2);
  CHECK(oracle::oddness(p) == 2);
  auto j5 = flower_snark(5);
  CHECK(oddness(j5) == 2);
  CHECK(oracle::oddness(j5) == 2);
  CHECK(oddness(named_graph("K4")) == 0);
  auto f = oddness_certificate(p).witness;
  int covered = 0;
  for (auto const& c : f.cycles) {
    CHECK(c.size() >= 3);
    covered += static_cast<int>(c.size());
  }
  CHECK(covered == p.order());
  CHECK(static_cast<int>(f.edges.size()) == p.order());
}

TEST_CASE("two_factor_of rejects non-perfect matchings", "[matching-engine]") {
  auto p = named_graph("petersen");
  CHECK(code_of([&] { two_factor_of(p, Matching({0})); }) == ErrorCode::NotPerfectMatching);
}

TEST_CASE("max weight perfect matching", "[matching-engine]") {
  auto p = named_graph("petersen");
  std::vector<Rational> zero(static_cast<std::size_t>(p.size()), Rational(0));
  auto any = max_weight_perfect_matching(p, zero);
  CHECK(is_perfect(p, any));
  CHECK(any == perfect_matchings(p).front());
  auto pm = perfect_matchings(p)[3];
  std::vector<Rational> ind(static_cast<std::size_t>(p.size()), Rational(0));
  for (EdgeId e : pm) ind[e] = 1;
  auto best = max_weight_perfect_matching(p, ind);
  CHECK(best == pm);
  CHECK(matching_value(best, ind) == Rational(5));
}

TEST_CASE("max weight perfect matching against enumeration", "[matching-engine]") {
  std::mt19937 rng(11);
  std::vector<CubicGraph> graphs{named_graph("petersen"), flower_snark(5), named_graph("cube_Q3")};
  for (auto const& g : graphs) {
    auto pms = perfect_matchings(g);
    for (int t = 0; t < 30; ++t) {
      std::vector<Rational> c;
      for (EdgeId e = 0; e < g.size(); ++e)
        c.emplace_back(static_cast<std::int64_t>(rng() % 21) - 5, 1 + static_cast<std::int64_t>(rng() % 7));
      Rational want = matching_value(pms.front(), c);
      EdgeSet lex = pms.front().edges();
      for (auto const& m : pms) {
        Rational v = matching_value(m, c);
        if (v > want || (v == want && m.edges() < lex)) {
          want = v;
          lex = m.edges();
        }
      }
      auto got = max_weight_perfect_matching(g, c);
      CHECK(matching_value(got, c) == want);
      CHECK(got.edges() == lex);
    }
  }
}

TEST_CASE("canonical fractional perfect matching", "[matching-engine]") {
  auto p = named_graph("petersen");
  for (auto const& pm : perfect_matchings(p)) {
    auto w = canonical_fractional_pm(p, pm);
    CHECK(w.total() == Rational(p.n()));
    CHECK_FALSE(fractional_pm_violation(p, w).has_value());
    for (Vertex v = 0; v < p.order(); ++v) {
      Rational s = 0;
      for (EdgeId e : p.incident(v)) s += w.weight[e];
      CHECK(s == Rational(1));
    }
  }
  // Independent odd-cut sweep over all 2^10 vertex subsets.
  auto w = canonical_fractional_pm(p, perfect_matchings(p).front());
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    Rational cut = 0;
    for (EdgeId e = 0; e < p.size(); ++e)
      if (((mask >> p.edge(e).u) & 1) != ((mask >> p.edge(e).v) & 1)) cut += w.weight[e];
    CHECK(cut >= Rational(1));
  }
  CHECK(code_of([&] { canonical_fractional_pm(p, Matching({0})); }) == ErrorCode::NotPerfectMatching);
  auto prism = named_graph("prism_Y3");
  CHECK(code_of([&] { canonical_fractional_pm(prism, perfect_matchings(prism).front()); }) ==
        ErrorCode::NotCyclically4Connected);
}

TEST_CASE("max weight matching dominates the fractional value on an 8-edge indicator", "[matching-engine]") {
  auto p = named_graph("petersen");
  auto w = canonical_fractional_pm(p, perfect_matchings(p).front());
  std::vector<Rational> c(static_cast<std::size_t>(p.size()), Rational(0));
  for (EdgeId e = 0; e < 8; ++e) c[e] = 1;
  auto m = max_weight_perfect_matching(p, c);
  CHECK(matching_value(m, c) >= w.dot(c));
  for (auto const& pm : perfect_matchings(p)) CHECK(matching_value(m, c) >= matching_value(pm, c));
}

TEST_CASE("circumference", "[matching-engine]") {
  CHECK(circumference(named_graph("K4")).length == 4);
  CHECK(circumference(named_graph("K3_3")).length == 6);
  auto p = named_graph("petersen");
  auto c = circumference(p);
  CHECK(c.length == 9);
  CHECK(oracle::longest_cycle(p) == 9);
  CHECK(cycle_edge_set(p, c.cycle).size() == 9);
  CHECK(code_of([] { circumference(petersen_ring(5)); }) == ErrorCode::CapExceeded);
}

TEST_CASE("circumference matches brute force on the corpus", "[matching-engine]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 12)) {
    auto c = circumference(g);
    CHECK(c.length == oracle::longest_cycle(g));
    CHECK(static_cast<int>(c.cycle.size()) == c.length);
    CHECK(cycle_edge_set(g, c.cycle).size() == c.cycle.size());
  }
}

TEST_CASE("three_star_witness", "[matching-engine]") {
  for (auto name : {"K4", "K3_3", "prism_Y3", "cube_Q3", "petersen"}) {
    auto g = named_graph(name);
    auto w = three_star_witness(g);
    REQUIRE(w);
    CHECK_FALSE(theta_violation(g, *w).has_value());
    CHECK(static_cast<int>(theta_edges(g, *w).size()) == g.order() + 1);
    auto n = complement(g, theta_edges(g, *w));
    CHECK(static_cast<int>(n.size()) == g.n() - 1);
    CHECK(is_matching(g, n));
  }
  CHECK(code_of([] { three_star_witness(one_conn_family(5)); }) == ErrorCode::HasBridge);
}

TEST_CASE("both 3*-connectivity characterisations agree on the corpus", "[matching-engine]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 12)) {
    if (!bridges(g).empty()) continue;
    auto w = three_star_witness(g);
    auto n = connected_complement_matching(g);
    CHECK(w.has_value() == n.has_value());
    if (w) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (EdgeId e : theta_edges(g, *w)) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
      CHECK(Graph(g.order(), pairs).connected());
    }
  }
}
