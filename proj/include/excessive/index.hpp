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

#include <optional>

#include "excessive/connectivity.hpp"
#include "excessive/constructions.hpp"
#include "excessive/cover.hpp"
#include "excessive/solver.hpp"

namespace excessive {

struct IndexReport {
  IndexResult result;
  std::optional<StrategyOutcome> construction;  // when a construction supplied the upper bound
};

/// Index with the constructions as the upper bound at m = n-1 on 3-graphs
/// of order >= 8, and plain exact search elsewhere.
inline IndexReport compute_index(CubicGraph const& g, int m, std::int64_t budget = default_budget()) {
  IndexReport rep;
  SolverOptions so;
  so.budget = budget;
  const bool structural = m == g.n() - 1 && g.order() >= 8 && bridges(g).empty();
  if (structural) {
    DispatchOptions d;
    d.budget = budget;
    d.exact_fallback = false;
    try {
      auto out = cover4_dispatch(g, std::nullopt, d);
      so.initial_upper = out.cover;
      rep.construction = std::move(out);
    } catch (Error const& e) {
      if (e.code() != ErrorCode::AllStrategiesFailed) throw;
    }
  }
  rep.result = excessive_index(g, m, so);
  return rep;
}

}  // namespace excessive
