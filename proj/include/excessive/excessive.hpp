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

#include "excessive/analysis.hpp"
#include "excessive/bf.hpp"
#include "excessive/certificate.hpp"
#include "excessive/coloring.hpp"
#include "excessive/connectivity.hpp"
#include "excessive/constructions.hpp"
#include "excessive/cover.hpp"
#include "excessive/cycles.hpp"
#include "excessive/fractional.hpp"
#include "excessive/generators.hpp"
#include "excessive/graph.hpp"
#include "excessive/graph6.hpp"
#include "excessive/index.hpp"
#include "excessive/matching.hpp"
#include "excessive/solver.hpp"
