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

#ifndef MMDC_SOLVER_HPP_
#define MMDC_SOLVER_HPP_

#include <optional>
#include <vector>

#include "mmdc/gadget.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/instance.hpp"

namespace mmdc {

struct PhaseTimings {
  double build_ms = 0;
  double solve_ms = 0;
  double extract_ms = 0;
};

struct SolveReport {
  MatchResult result;
  Cost gadget_total = 0;     // perfect-matching weight, gadget units
  Cost main_edge_total = 0;  // main-edge weight, original cost units
  int gadget_nodes = 0;      // side size n
  Cost resolution = 1;
  PhaseTimings timings;
};

enum class InfeasibleCause {
  // The optimum needs a missing edge: no finite perfect matching exists.
  kForbiddenEdge,
  // An S-side compensator node covers a copy of some b_j, i.e. b_j's demand
  // is short. Happens exactly when sum(alpha_cap) < sum(beta).
  kCompensatorDeficit,
};

struct SolveOutcome {
  std::optional<SolveReport> report;  // empty iff infeasible
  std::optional<InfeasibleCause> cause;
  int gadget_nodes = 0;
  PhaseTimings timings;

  bool feasible() const { return report.has_value(); }
};

struct MainEdge {
  int i;
  int j;
  Cost weight;  // gadget units

  friend bool operator==(const MainEdge&, const MainEdge&) = default;
};

// Matched edges joining a copy of a_i (MainA or ExtraA) to a copy of b_j in
// Bset_i, in S order.
std::vector<MainEdge> ExtractMainEdges(const GadgetGraph& gadget,
                                       const Assignment& assignment);

// Builds the gadget, solves it and reads the MMDC matching off the main
// edges. Throws InvalidInstance for invalid input and AssertionFailure if
// the extracted matching breaks any demand/capacity bound or the dual
// certificate does not verify.
SolveOutcome SolveMmdc(const ProblemInstance& instance,
                       const BuildOptions& options = {});

}  // namespace mmdc

#endif  // MMDC_SOLVER_HPP_
