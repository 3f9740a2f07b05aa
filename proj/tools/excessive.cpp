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

// Command-line front end. Exit codes: 0 when every requested value is
// exact, 2 when some result is bounds-only, 1 on any error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "excessive/excessive.hpp"

namespace fs = std::filesystem;
using namespace excessive;

namespace {

constexpr const char* kTsvVersion = "# excessive-tsv 1";

struct Input {
  std::string path;
  std::string family;
  std::vector<std::string> params;
};

struct Named {
  std::string label;  // "line N" or the family name and parameters
  CubicGraph graph;
};

std::vector<Named> load(Input const& in) {
  if (!in.path.empty() && !in.family.empty())
    throw Error(ErrorCode::BadParameter, "give exactly one of --input and --family");
  std::vector<Named> out;
  if (!in.family.empty()) {
    FamilySpec spec{in.family, {}};
    for (auto const& kv : in.params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParameter, "parameter '" + kv + "' is not K=V");
      spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    std::string label = in.family;
    for (auto const& kv : in.params) label += " " + kv;
    out.push_back({label, generate(spec)});
    return out;
  }
  if (in.path.empty()) throw Error(ErrorCode::BadParameter, "give one of --input and --family");
  std::vector<Graph6Record> recs;
  if (in.path == "-") {
    recs = read_graph6_stream(std::cin);
  } else {
    std::ifstream f(in.path);
    if (!f) throw Error(ErrorCode::BadParameter, "cannot open " + in.path);
    recs = read_graph6_stream(f);
  }
  for (auto& r : recs) out.push_back({"line " + std::to_string(r.line), std::move(r.graph)});
  return out;
}

template <class T>
std::string cell(Capped<T> const& c) {
  if (c.capped) return "capped";
  if (!c.value) return "none";
  if constexpr (std::is_same_v<T, bool>)
    return *c.value ? "yes" : "no";
  else
    return std::to_string(*c.value);
}

template <class T>
Json json_cell(Capped<T> const& c) {
  if (c.capped) return "capped";
  if (!c.value) return nullptr;
  return *c.value;
}

int run_analyze(Input const& in, std::string const& format) {
  auto graphs = load(in);
  if (format == "tsv") {
    std::cout << kTsvVersion << "\n"
              << "source\tgraph6\torder\tgirth\tbridges\tedge_connectivity\tcyclic_edge_connectivity\tcolorable\t"
                 "oddness\tcircumference\tthree_star\n";
  }
  for (auto const& [label, g] : graphs) {
    auto r = analyze(g);
    if (format == "json") {
      Json j;
      j["source"] = label;
      j["graph6"] = write_graph6(g);
      j["order"] = r.order;
      j["girth"] = r.girth;
      j["bridge_count"] = r.bridge_count;
      j["edge_connectivity"] = r.edge_connectivity;
      j["cyclic_edge_connectivity"] = json_cell(r.cyclic_edge_connectivity);
      j["colorable"] = json_cell(r.colorable);
      j["oddness"] = json_cell(r.oddness);
      j["circumference"] = json_cell(r.circumference);
      j["three_star"] = json_cell(r.three_star);
      std::cout << j.dump() << "\n";
    } else if (format == "tsv") {
      std::cout << label << "\t" << write_graph6(g) << "\t" << r.order << "\t" << r.girth << "\t" << r.bridge_count
                << "\t" << r.edge_connectivity << "\t" << cell(r.cyclic_edge_connectivity) << "\t"
                << cell(r.colorable) << "\t" << cell(r.oddness) << "\t" << cell(r.circumference) << "\t"
                << cell(r.three_star) << "\n";
    } else {
      std::cout << label << ": order " << r.order << ", girth " << r.girth << ", bridges " << r.bridge_count
                << ", edge connectivity " << r.edge_connectivity << ", cyclic edge connectivity "
                << cell(r.cyclic_edge_connectivity) << ", colorable " << cell(r.colorable) << ", oddness "
                << cell(r.oddness) << ", circumference " << cell(r.circumference) << ", 3*-connected "
                << cell(r.three_star) << "\n";
    }
  }
  return 0;
}

std::vector<int> parse_m(std::string const& sel, bool sweep, CubicGraph const& g) {
  if (sweep) {
    std::vector<int> all;
    for (int m = 1; m <= g.n(); ++m) all.push_back(m);
    return all;
  }
  if (sel.empty() || sel == "n-1") return {g.n() - 1};
  if (sel == "n") return {g.n()};
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(sel, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != sel.size() || used == 0) throw Error(ErrorCode::BadParameter, "--m must be an integer, n or n-1");
  if (m < 1 || m > g.n())
    throw Error(ErrorCode::BadParameter, "--m " + sel + " outside [1, " + std::to_string(g.n()) + "]");
  return {m};
}

int run_index(Input const& in, std::string const& msel, bool sweep, std::int64_t budget, std::string const& format,
              std::string const& out_dir) {
  auto graphs = load(in);
  if (!out_dir.empty()) fs::create_directories(out_dir);
  if (format == "tsv")
    std::cout << kTsvVersion << "\n"
              << "source\tgraph6\torder\tm\tvalue\texact\tlower\tupper\tlower_kind\tstrategy\tcertificate\n";
  bool all_exact = true;
  int position = 0;
  for (auto const& [label, g] : graphs) {
    ++position;
    for (int m : parse_m(msel, sweep, g)) {
      auto rep = compute_index(g, m, budget);
      auto const& r = rep.result;
      all_exact = all_exact && r.exact;
      Certificate cert = certificate_of(g, m, r);
      if (rep.construction && r.certificate_upper && r.upper == rep.construction->cover.size() &&
          r.certificate_upper->matchings == rep.construction->cover.matchings) {
        cert.strategy = to_string(rep.construction->strategy);
        cert.trace = rep.construction->trace;
        cert.fractional = rep.construction->fractional;
      }
      std::string path;
      if (!out_dir.empty()) {
        path = (fs::path(out_dir) / ("g" + std::to_string(position) + "_m" + std::to_string(m) + ".json")).string();
        std::ofstream f(path);
        f << to_json(g, cert).dump(2) << "\n";
        if (!f) throw Error(ErrorCode::BadParameter, "cannot write " + path);
      }
      const std::string value = r.exact ? r.value.str() : "";
      const std::string lower_kind = r.certificate_lower ? to_string(r.certificate_lower->kind) : "";
      const std::string strategy = cert.strategy.value_or("");
      if (format == "json") {
        Json j;
        j["source"] = label;
        j["graph6"] = write_graph6(g);
        j["order"] = g.order();
        j["m"] = m;
        if (r.exact)
          j["value"] = r.value.is_infinite() ? Json("inf") : Json(r.value.get());
        else
          j["value"] = nullptr;
        j["exact"] = r.exact;
        j["lower"] = r.lower;
        j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
        j["lower_kind"] = lower_kind;
        j["strategy"] = strategy.empty() ? Json(nullptr) : Json(strategy);
        if (!path.empty()) j["certificate"] = path;
        std::cout << j.dump() << "\n";
      } else if (format == "tsv") {
        std::cout << label << "\t" << write_graph6(g) << "\t" << g.order() << "\t" << m << "\t" << value << "\t"
                  << (r.exact ? "yes" : "no") << "\t" << r.lower << "\t" << (r.upper ? std::to_string(*r.upper) : "")
                  << "\t" << lower_kind << "\t" << strategy << "\t" << path << "\n";
      } else {
        std::cout << label << " (order " << g.order() << "), m = " << m << ": ";
        if (r.exact)
          std::cout << "index " << r.value.str();
        else
          std::cout << "bounds [" << r.lower << ", " << (r.upper ? std::to_string(*r.upper) : "?")
                    << "], not exact";
        if (!lower_kind.empty()) std::cout << "; lower bound by " << lower_kind;
        if (!strategy.empty()) std::cout << "; cover by " << strategy;
        if (!path.empty()) std::cout << "; certificate " << path;
        std::cout << "\n";
      }
    }
  }
  return all_exact ? 0 : 2;
}

int run_verify(std::string const& file, std::int64_t budget, std::string const& format) {
  std::ifstream f(file);
  if (!f) throw Error(ErrorCode::BadParameter, "cannot open " + file);
  std::stringstream ss;
  ss << f.rdbuf();
  auto [g, cert] = parse_certificate(ss.str());
  auto v = verify_certificate(g, cert, budget);
  if (format == "json") {
    Json j;
    j["certificate"] = file;
    j["accepted"] = v.ok;
    if (!v.ok) j["diagnostic"] = v.diagnostic;
    std::cout << j.dump() << "\n";
  } else if (format == "tsv") {
    std::cout << kTsvVersion << "\ncertificate\taccepted\tdiagnostic\n"
              << file << "\t" << (v.ok ? "yes" : "no") << "\t" << v.diagnostic << "\n";
  } else {
    std::cout << (v.ok ? "accept" : "reject: " + v.diagnostic) << "\n";
  }
  return v.ok ? 0 : 1;
}

int run_generate(Input const& in) {
  if (in.family.empty()) throw Error(ErrorCode::BadParameter, "generate needs --family");
  for (auto const& [label, g] : load(in)) std::cout << write_graph6(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Excessive [m]-index of cubic graphs"};
  app.require_subcommand(1);

  Input in;
  std::string format = "human", msel, out_dir, cert_file;
  bool sweep = false, deterministic = true;
  std::int64_t budget = default_budget();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", in.path, "graph6 file, one graph per line ('-' for stdin)");
    sub->add_option("--family", in.family, "generator family (named, one_conn, petersen_ring, three_conn, flower, blanusa)");
    sub->add_option("--params", in.params, "family parameters as K=V");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "human"}));
    sub->add_flag("--deterministic,!--no-deterministic", deterministic, "deterministic search (the only mode)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "structural profile of each input graph");
  add_input(analyze_cmd);
  add_format(analyze_cmd);

  auto* index_cmd = app.add_subcommand("index", "excessive [m]-index with certificates");
  add_input(index_cmd);
  add_format(index_cmd);
  index_cmd->add_option("--m", msel, "matching size: an integer, n, or n-1 (default n-1)");
  index_cmd->add_flag("--sweep", sweep, "every m from 1 to n");
  index_cmd->add_option("--budget", budget, "search node budget (default from EXC_BUDGET or 10^7)");
  index_cmd->add_option("--out", out_dir, "directory for JSON certificates");

  auto* verify_cmd = app.add_subcommand("verify", "check a JSON certificate");
  verify_cmd->add_option("certificate", cert_file, "certificate file")->required();
  verify_cmd->add_option("--budget", budget, "node budget for re-deriving exhaustion bounds");
  add_format(verify_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "write a generated graph as graph6");
  add_input(generate_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (!deterministic) {
    std::cerr << "error: only deterministic mode is available\n";
    return 1;
  }
  if (sweep && !msel.empty()) {
    std::cerr << "error: give at most one of --m and --sweep\n";
    return 1;
  }
  try {
    if (*analyze_cmd) return run_analyze(in, format);
    if (*index_cmd) return run_index(in, msel, sweep, budget, format, out_dir);
    if (*verify_cmd) return run_verify(cert_file, budget, format);
    if (*generate_cmd) return run_generate(in);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
