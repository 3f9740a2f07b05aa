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

#include <sstream>

#include <catch_amalgamated.hpp>

#include "excessive/connectivity.hpp"
#include "excessive/generators.hpp"
#include "excessive/graph.hpp"
#include "excessive/graph6.hpp"
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

// Hand-rolled graph6 encoder for small graphs: order byte, then the upper
// triangle read column by column, six bits per byte, big-endian.
std::string encode_by_hand(Graph const& g) {
  std::string s(1, static_cast<char>(63 + g.order()));
  std::vector<int> bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = 2 * v + bits[k + b];
    s.push_back(static_cast<char>(63 + v));
  }
  return s;
}

std::set<std::pair<int, int>> adjacency(Graph const& g) {
  std::set<std::pair<int, int>> s;
  for (auto const& e : g.edges()) s.insert({e.u, e.v});
  return s;
}

}  // namespace

TEST_CASE("build_graph accepts K4 and rejects malformed edge lists", "[graph-core]") {
  auto k4 = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4.n() == 2);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.incident(v).size() == 3);

  CHECK(code_of([] { build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 3}}); }) ==
        ErrorCode::NotSimple);
  CHECK(code_of([] { build_graph({{0, 0}, {0, 1}}); }) == ErrorCode::NotSimple);
  CHECK(code_of([] {
          build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                       {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
        }) == ErrorCode::Disconnected);
  CHECK(code_of([] { build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }) == ErrorCode::NotCubic);
  CHECK(code_of([] { build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }) == ErrorCode::OddOrder);
}

TEST_CASE("edge indices follow input order", "[graph-core]") {
  auto g = named_graph("petersen");
  auto pairs = g.edge_pairs();
  auto back = build_graph(g.order(), pairs);
  for (EdgeId e = 0; e < g.size(); ++e) CHECK(back.edge(e) == g.edge(e));
}

TEST_CASE("graph6 encodes K4 as C~", "[graph-core]") {
  auto k4 = named_graph("K4");
  CHECK(encode_by_hand(k4) == "C~");
  CHECK(write_graph6(k4) == "C~");
  auto parsed = parse_graph6("C~");
  CHECK(adjacency(parsed) == adjacency(k4));
}

TEST_CASE("graph6 agrees with the hand encoder and round-trips on the corpus", "[graph-core]") {
  auto corpus = oracle::load_corpus("cubic_le14.g6");
  REQUIRE(corpus.size() == 621);
  for (auto const& g : corpus) {
    auto text = write_graph6(g);
    CHECK(text == encode_by_hand(g));
    CHECK(write_graph6(g) == text);
    CHECK(adjacency(parse_graph6(text)) == adjacency(g));
  }
  for (auto const& name : named_graph_names()) {
    auto g = named_graph(name);
    CHECK(adjacency(parse_graph6(write_graph6(g))) == adjacency(g));
  }
}

TEST_CASE("graph6 rejects bad input", "[graph-core]") {
  // A 5-vertex cycle: odd order, degree 2.
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto code = code_of([&] { parse_graph6(write_graph6(c5)); });
  CHECK((code == ErrorCode::NotCubic || code == ErrorCode::OddOrder));
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("C~~~"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("C\x01"); }) == ErrorCode::MalformedGraph6);
}

TEST_CASE("graph6 stream reports line numbers and skips comments", "[graph-core]") {
  std::istringstream ok(">> comment\nC~\n\nIheA@GUAo\n");
  auto recs = read_graph6_stream(ok);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].line == 2);
  CHECK(recs[1].line == 4);
  CHECK(recs[1].graph.order() == 10);

  std::istringstream bad("C~\nC~\nC!!\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("Petersen connectivity profile", "[graph-core]") {
  auto p = named_graph("petersen");
  REQUIRE(oracle::cyclic_connectivity(p) == 5);
  auto prof = connectivity_profile(p);
  CHECK(prof.bridge_count == 0);
  CHECK(prof.edge_connectivity == 3);
  CHECK(prof.cyclic_edge_connectivity == 5);
  CHECK(prof.is_3graph);
  auto cut = min_cyclic_cut(p);
  REQUIRE(cut);
  CHECK(cut->edges.size() == 5);
  CHECK(cut->cyclic);
}

TEST_CASE("K4 and K3,3 have no cyclic cut", "[graph-core]") {
  CHECK_FALSE(oracle::cyclic_connectivity(named_graph("K4")).has_value());
  CHECK_FALSE(connectivity_profile(named_graph("K4")).cyclic_edge_connectivity.has_value());
  CHECK_FALSE(connectivity_profile(named_graph("K3_3")).cyclic_edge_connectivity.has_value());
  CHECK(connectivity_profile(named_graph("prism_Y3")).cyclic_edge_connectivity == 3);
}

TEST_CASE("connectivity agrees with brute force on the corpus up to order 14", "[graph-core]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6")) {
    auto prof = connectivity_profile(g);
    int ec = oracle::edge_connectivity(g);
    CHECK(prof.edge_connectivity == ec);
    CHECK(ec == oracle::vertex_connectivity(g));
    CHECK(prof.bridge_count == oracle::bridge_count(g));
    CHECK((prof.bridge_count == 0) == (prof.edge_connectivity >= 2));
    CHECK(prof.is_3graph == (prof.edge_connectivity >= 2));
    if (g.order() <= 12) CHECK(prof.cyclic_edge_connectivity == oracle::cyclic_connectivity(g));
  }
}

TEST_CASE("cyclic cuts are verified cuts", "[graph-core]") {
  for (auto const& g : oracle::load_corpus("cubic_le14.g6", 12)) {
    auto cut = min_cyclic_cut(g);
    if (!cut) continue;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cut->side_a) in[v] = 1;
    CHECK(static_cast<int>(cut->side_a.size() + cut->side_b.size()) == g.order());
    EdgeSet crossing;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (in[g.edge(e).u] != in[g.edge(e).v]) crossing.push_back(e);
    CHECK(crossing == normalized(cut->edges));
    std::vector<char> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = !in[i];
    CHECK(oracle::has_cycle(g, in));
    CHECK(oracle::has_cycle(g, out));
  }
}

TEST_CASE("cyclic connectivity cap", "[graph-core]") {
  auto ring = petersen_ring(9);
  CHECK(code_of([&] { cyclic_edge_connectivity(ring, 64); }) == ErrorCode::CapExceeded);
  auto prof = connectivity_profile(ring);
  CHECK(prof.cyclic_capped);
  CHECK_FALSE(prof.cyclic_edge_connectivity.has_value());
  CHECK(prof.edge_connectivity == 2);
}
