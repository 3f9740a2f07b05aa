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

// Runs the built binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "excessive/excessive.hpp"

namespace fs = std::filesystem;
using namespace excessive;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("excessive_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(fs::path const& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(fs::path const& p, std::string const& text) { std::ofstream(p) << text; }

Run run(std::string const& args, std::string const& stdin_text = "") {
  auto in = scratch() / "stdin.txt", out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  write_file(in, stdin_text);
  std::string cmd = std::string("'") + EXC_CLI_PATH + "' " + args + " < '" + in.string() + "' > '" + out.string() +
                    "' 2> '" + err.string() + "'";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<Json> json_lines(std::string const& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

const std::string kPetersen = write_graph6(named_graph("petersen"));
const std::string kK4 = write_graph6(named_graph("K4"));
const std::string kCube = write_graph6(named_graph("cube_Q3"));

}  // namespace

TEST_CASE("index on stdin, json lines", "[cli]") {
  auto r = run("index --input - --format json", kPetersen + "\n" + kCube + "\n");
  REQUIRE(r.code == 0);
  auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["source"] == "line 1");
  CHECK(rows[0]["m"] == 4);
  CHECK(rows[0]["value"] == 4);
  CHECK(rows[0]["exact"] == true);
  CHECK(rows[0]["strategy"] == "oddness2");
  CHECK(rows[1]["value"] == 4);
}

TEST_CASE("m selectors", "[cli]") {
  auto k4 = json_lines(run("index --input - --m 1 --format json", kK4 + "\n").out);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0]["value"] == 6);
  auto n = json_lines(run("index --input - --m n --format json", kPetersen + "\n").out);
  CHECK(n[0]["value"] == 5);
  auto sweep = run("index --input - --sweep --format json", kK4 + "\n");
  CHECK(sweep.code == 0);
  auto rows = json_lines(sweep.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["value"] == 6);
  CHECK(rows[1]["value"] == 3);
  CHECK(run("index --input - --m 7", kK4 + "\n").code == 1);
  CHECK(run("index --input - --m x", kK4 + "\n").code == 1);
  CHECK(run("index --input - --m 1 --sweep", kK4 + "\n").code == 1);
}

TEST_CASE("tsv output is versioned", "[cli]") {
  auto r = run("analyze --family flower --params k=5 --format tsv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string version, header, row;
  std::getline(in, version);
  std::getline(in, header);
  std::getline(in, row);
  CHECK(version == "# excessive-tsv 1");
  CHECK(header.rfind("source\tgraph6\torder", 0) == 0);
  CHECK(row.find("\t20\t5\t") != std::string::npos);  // order, girth
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("index --input - --format json", kPetersen + "\n").code == 0);
  // Proving Petersen has no four [5]-matchings takes more than 5 nodes.
  auto tight = run("index --input - --m n --budget 5 --format json", kPetersen + "\n");
  CHECK(tight.code == 2);
  auto t = json_lines(tight.out);
  REQUIRE(t.size() == 1);
  CHECK(t[0]["exact"] == false);
  CHECK(t[0]["value"].is_null());
  // The ring has a five-matching cover but only the counting bound 4.
  auto ring = run("index --family petersen_ring --params k=9 --format json");
  CHECK(ring.code == 2);
  auto rows = json_lines(ring.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["exact"] == false);
  CHECK(rows[0]["lower"] == 4);
  CHECK(rows[0]["upper"] == 5);
  CHECK(rows[0]["strategy"] == "bf5");
  // Mixed input: one bounds-only graph makes the whole run exit 2.
  CHECK(run("index --input - --m n --budget 5", kK4 + "\n" + kPetersen + "\n").code == 2);
  CHECK(run("index").code == 1);
  CHECK(run("index --input - --family flower", kK4 + "\n").code == 1);
  CHECK(run("generate --family nope").code == 1);
  CHECK(run("index --input - --no-deterministic", kK4 + "\n").code == 1);
}

TEST_CASE("malformed input names the line", "[cli]") {
  auto r = run("index --input - --format json", kK4 + "\n" + kCube + "\n" + "C~~\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  auto odd = run("analyze --input -", kK4 + "\n" + "C@\n");
  CHECK(odd.code == 1);
  CHECK(odd.err.find("line 2") != std::string::npos);
}

TEST_CASE("certificates round-trip through verify", "[cli]") {
  auto dir = scratch() / "certs";
  fs::remove_all(dir);
  std::string input = kPetersen + "\n" + write_graph6(flower_snark(5)) + "\n" + kK4 + "\n";
  auto r = run("index --input - --sweep --out '" + dir.string() + "' --format json", input);
  REQUIRE(r.code == 0);
  int files = 0;
  for (auto const& entry : fs::directory_iterator(dir)) {
    auto v = run("verify '" + entry.path().string() + "'");
    CHECK(v.code == 0);
    CHECK(v.out == "accept\n");
    ++files;
  }
  CHECK(files == 5 + 10 + 2);

  // Construction certificates keep the strategy and trace.
  auto cert = Json::parse(slurp(dir / "g2_m9.json"));
  CHECK(cert["schema_version"] == 1);
  CHECK(cert["strategy"] == "oddness2");
  CHECK_FALSE(cert["trace"].empty());
}

TEST_CASE("verify rejects tampered certificates", "[cli]") {
  auto dir = scratch() / "tamper";
  fs::remove_all(dir);
  REQUIRE(run("index --input - --out '" + dir.string() + "'", kPetersen + "\n").code == 0);
  auto good = Json::parse(slurp(dir / "g1_m4.json"));

  // Emptying one matching leaves its edges uncovered, or breaks the size.
  auto missing = good;
  auto& first = missing["matchings"][0];
  first.erase(first.begin());
  write_file(dir / "missing.json", missing.dump());
  auto v1 = run("verify '" + (dir / "missing.json").string() + "'");
  CHECK(v1.code == 1);
  CHECK(v1.out.rfind("reject: ", 0) == 0);

  // Replace the first edge by one meeting the second.
  auto adjacent = good;
  auto& m0 = adjacent["matchings"][0];
  auto second = m0[1];
  int v = second[0];
  const auto petersen = named_graph("petersen");
  for (EdgeId e : petersen.incident(v)) {
    auto ed = petersen.edge(e);
    Json pair = Json::array({ed.u, ed.v});
    if (pair != second) {
      m0[0] = pair;
      break;
    }
  }
  write_file(dir / "adjacent.json", adjacent.dump());
  auto v2 = run("verify '" + (dir / "adjacent.json").string() + "' --format json");
  CHECK(v2.code == 1);
  auto row = json_lines(v2.out);
  REQUIRE(row.size() == 1);
  CHECK(row[0]["accepted"] == false);
  CHECK(row[0]["diagnostic"].get<std::string>().find("share vertex") != std::string::npos);

  auto wrong_edge = good;
  wrong_edge["matchings"][0][0] = Json::array({0, 9});
  write_file(dir / "nonedge.json", wrong_edge.dump());
  auto v3 = run("verify '" + (dir / "nonedge.json").string() + "'");
  CHECK(v3.code == 1);

  auto schema = good;
  schema.erase("schema_version");
  write_file(dir / "schema.json", schema.dump());
  auto v4 = run("verify '" + (dir / "schema.json").string() + "'");
  CHECK(v4.code == 1);
  CHECK(v4.err.find("schema_version") != std::string::npos);
}

TEST_CASE("removed edge is reported as not covered", "[cli]") {
  auto dir = scratch() / "cover";
  fs::remove_all(dir);
  REQUIRE(run("index --input - --out '" + dir.string() + "'", kPetersen + "\n").code == 0);
  const auto good = Json::parse(slurp(dir / "g1_m4.json"));
  const auto p = named_graph("petersen");
  std::map<Json, int> hits;
  for (auto const& m : good["matchings"])
    for (auto const& e : m) ++hits[e];
  // Swap an edge covered once for another edge that keeps the member a
  // matching of the same size: the swapped-out edge is then uncovered.
  bool tried = false;
  for (std::size_t i = 0; i < good["matchings"].size() && !tried; ++i)
    for (std::size_t k = 0; k < good["matchings"][i].size() && !tried; ++k) {
      auto const& target = good["matchings"][i][k];
      if (hits[target] != 1) continue;
      std::set<int> used;
      for (auto const& e : good["matchings"][i])
        if (e != target) {
          used.insert(e[0].get<int>());
          used.insert(e[1].get<int>());
        }
      for (EdgeId e = 0; e < p.size() && !tried; ++e) {
        auto ed = p.edge(e);
        Json pair = Json::array({ed.u, ed.v});
        if (pair == target || used.count(ed.u) || used.count(ed.v)) continue;
        auto cert = good;
        cert["matchings"][i][k] = pair;
        write_file(dir / "uncovered.json", cert.dump());
        auto v = run("verify '" + (dir / "uncovered.json").string() + "'");
        CHECK(v.code == 1);
        CHECK(v.out.find("not covered") != std::string::npos);
        tried = true;
      }
    }
  CHECK(tried);
}

TEST_CASE("deterministic output is byte-identical", "[cli]") {
  std::string input = kPetersen + "\n" + write_graph6(blanusa(2)) + "\n" + kCube + "\n";
  auto a = run("index --input - --sweep --format tsv", input);
  auto b = run("index --input - --sweep --format tsv --deterministic", input);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto dir1 = scratch() / "d1", dir2 = scratch() / "d2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  run("index --input - --out '" + dir1.string() + "'", input);
  run("index --input - --out '" + dir2.string() + "'", input);
  for (auto const& entry : fs::directory_iterator(dir1))
    CHECK(slurp(entry.path()) == slurp(dir2 / entry.path().filename()));
}

TEST_CASE("generate writes graph6 that reads back", "[cli]") {
  auto r = run("generate --family three_conn --params m=5");
  REQUIRE(r.code == 0);
  auto g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  CHECK(g.order() == 240);
  auto h = run("generate --family named --params name=petersen");
  CHECK(h.out == kPetersen + "\n");
  CHECK(run("generate --family flower --params k").code == 1);
}

TEST_CASE("EXC_BUDGET sets the default budget", "[cli]") {
  ::setenv("EXC_BUDGET", "5", 1);
  auto low = run("index --input - --m n --format json", kPetersen + "\n");
  ::setenv("EXC_BUDGET", "junk", 1);
  auto junk = run("index --input - --m n --format json", kPetersen + "\n");
  ::unsetenv("EXC_BUDGET");
  CHECK(low.code == 2);
  // An unparsable value falls back to the built-in default.
  CHECK(junk.code == 0);
  // An explicit flag wins over the environment.
  ::setenv("EXC_BUDGET", "5", 1);
  auto flag = run("index --input - --m n --budget 100000 --format json", kPetersen + "\n");
  ::unsetenv("EXC_BUDGET");
  CHECK(flag.code == 0);
}
