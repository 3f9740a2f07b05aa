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
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

namespace detail {

inline std::vector<int> graph6_digits(std::string_view text) {
  std::vector<int> out;
  out.reserve(text.size());
  for (char c : text) {
    int d = static_cast<unsigned char>(c) - 63;
    if (d < 0 || d > 63)
      throw Error(ErrorCode::MalformedGraph6, std::string("byte out of range: '") + c + "'");
    out.push_back(d);
  }
  return out;
}

}  // namespace detail

/// Decodes one graph6 line into an order and an edge list, without checking
/// that the graph is cubic. Edges come out in column-major upper-triangle
/// order, which is also the order `write_graph6` reads them back.
inline Graph parse_graph6_raw(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty line");
  auto digits = detail::graph6_digits(text);
  std::size_t pos = 0;
  std::int64_t order = 0;
  if (digits[0] < 63) {
    order = digits[0];
    pos = 1;
  } else if (digits.size() >= 4 && digits[1] < 63) {
    order = (std::int64_t{digits[1]} << 12) | (digits[2] << 6) | digits[3];
    pos = 4;
  } else if (digits.size() >= 8 && digits[1] == 63) {
    for (int i = 2; i < 8; ++i) order = (order << 6) | digits[i];
    pos = 8;
  } else {
    throw Error(ErrorCode::MalformedGraph6, "truncated order field");
  }
  if (order > (1 << 20)) throw Error(ErrorCode::MalformedGraph6, "order too large");
  std::int64_t bits = order * (order - 1) / 2;
  std::int64_t expected = (bits + 5) / 6;
  if (static_cast<std::int64_t>(digits.size() - pos) != expected)
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(expected) +
                                                " data bytes, got " +
                                                std::to_string(digits.size() - pos));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::int64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = digits[pos + static_cast<std::size_t>(k / 6)];
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(order), edges);
}

inline CubicGraph parse_graph6(std::string_view text) {
  Graph raw = parse_graph6_raw(text);
  return build_graph(raw.order(), raw.edge_pairs());
}

/// Canonical graph6 line of the labelled adjacency (no relabelling).
inline std::string write_graph6(Graph const& g) {
  std::string out;
  std::int64_t order = g.order();
  if (order < 63) {
    out.push_back(static_cast<char>(order + 63));
  } else if (order <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((order >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((order >> shift) & 63) + 63));
  }
  std::int64_t bits = order * (order - 1) / 2;
  std::vector<std::uint8_t> data(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (auto const& e : g.edges()) {
    std::int64_t i = e.u, j = e.v;
    std::int64_t k = j * (j - 1) / 2 + i;
    data[static_cast<std::size_t>(k / 6)] |= static_cast<std::uint8_t>(1 << (5 - k % 6));
  }
  for (auto d : data) out.push_back(static_cast<char>(d + 63));
  return out;
}

struct Graph6Record {
  int line;  // 1-based line number in the source
  CubicGraph graph;
};

/// Reads a graph6 corpus: one graph per line, blank lines and lines starting
/// with '>' (other than a ">>graph6<<" prefix) are skipped. Errors carry the
/// offending line number.
inline std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty() || view.front() == '>') continue;
    if (view.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back({number, parse_graph6(view)});
    } catch (Error const& err) {
      throw Error(err.code(), "line " + std::to_string(number) + ": " + err.detail());
    }
  }
  return out;
}

}  // namespace excessive
