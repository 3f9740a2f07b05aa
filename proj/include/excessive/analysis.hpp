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
#include <optional>
#include <string>

#include "excessive/coloring.hpp"
#include "excessive/connectivity.hpp"
#include "excessive/cycles.hpp"
#include "excessive/graph.hpp"

namespace excessive {

/// A value that may be unavailable because a search cap was hit.
template <class T>
struct Capped {
  std::optional<T> value;
  bool capped = false;
};

struct AnalysisOptions {
  int cycle_cap = kDefaultCycleCap;           // circumference and theta search
  std::int64_t coloring_budget = 20'000'000;  // Tait coloring search nodes
  std::int64_t pm_budget = 200'000;           // perfect matchings tried for oddness
};

struct AnalysisReport {
  int order = 0;
  int girth = 0;
  int bridge_count = 0;
  int edge_connectivity = 0;
  Capped<int> cyclic_edge_connectivity;  // absent and uncapped: no cyclic cut exists
  Capped<bool> colorable;
  Capped<int> oddness;
  Capped<int> circumference;
  Capped<bool> three_star;
};

inline AnalysisReport analyze(CubicGraph const& g, AnalysisOptions const& opt = {}) {
  AnalysisReport r;
  r.order = g.order();
  r.girth = girth(g);
  auto prof = connectivity_profile(g);
  r.bridge_count = prof.bridge_count;
  r.edge_connectivity = prof.edge_connectivity;
  r.cyclic_edge_connectivity = {prof.cyclic_edge_connectivity, prof.cyclic_capped};
  try {
    r.colorable.value = three_edge_coloring(g, opt.coloring_budget).has_value();
  } catch (Error const& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    r.colorable.capped = true;
  }
  if (r.colorable.value == true) {
    r.oddness.value = 0;
  } else if (r.colorable.value == false) {
    try {
      r.oddness.value = oddness_certificate(g, opt.pm_budget).oddness;
    } catch (Error const& e) {
      if (e.code() == ErrorCode::CapExceeded)
        r.oddness.capped = true;
      else if (e.code() != ErrorCode::NoPerfectMatching)
        throw;
    }
  } else {
    r.oddness.capped = true;
  }
  try {
    r.circumference.value = circumference(g, opt.cycle_cap).length;
  } catch (Error const& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    r.circumference.capped = true;
  }
  if (r.bridge_count > 0) {
    r.three_star.value = false;
  } else {
    try {
      r.three_star.value = three_star_witness(g, opt.cycle_cap).has_value();
    } catch (Error const& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      r.three_star.capped = true;
    }
  }
  return r;
}

}  // namespace excessive
