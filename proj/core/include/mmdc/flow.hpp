// Copyright 2026 The MMDC Authors
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

// MMDC as a minimum-cost circulation with arc lower bounds:
//
//   source --[alpha_i, alpha_cap_i], 0--> a_i --[0, 1], delta--> b_j
//   b_j --[beta_j, beta_cap_j], 0--> sink --[0, sum alpha_cap], 0--> source
//
// A polynomial referee independent of the gadget reduction.

#ifndef MMDC_FLOW_HPP_
#define MMDC_FLOW_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc {

struct FlowArc {
  int tail;
  int head;
  std::int64_t lower;
  std::int64_t upper;
  Cost cost;
};

struct FlowNetwork {
  int num_nodes = 0;
  std::vector<FlowArc> arcs;
};

// Node ids: source 0, sink 1, a_i 2 + i, b_j 2 + s + j. Arc order: source
// arcs by i, pair arcs row-major, sink arcs by j, then the return arc.
FlowNetwork BuildFlowNetwork(const ProblemInstance& instance);

struct Circulation {
  std::vector<std::int64_t> flow;  // per arc
  Cost cost = 0;
};

// Minimum-cost circulation respecting every arc's [lower, upper], or nullopt
// if none exists. Arcs with negative cost start saturated and lower bounds
// are moved into node imbalances, leaving a residual graph with nonnegative
// costs; successive shortest paths with Dijkstra potentials then route the
// imbalances from a super source to a super sink.
std::optional<Circulation> MinCostCirculation(const FlowNetwork& network);

// True iff some matching meets every demand and capacity.
bool FlowFeasible(const ProblemInstance& instance);

// Optimal matching read off the unit pair arcs, or nullopt if infeasible.
std::optional<MatchResult> FlowMinCost(const ProblemInstance& instance);

}  // namespace mmdc

#endif  // MMDC_FLOW_HPP_
