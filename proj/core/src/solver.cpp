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

#include "mmdc/solver.hpp"

#include <algorithm>
#include <chrono>

namespace mmdc {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

std::vector<MainEdge> ExtractMainEdges(const GadgetGraph& gadget,
                                       const Assignment& assignment) {
  std::vector<MainEdge> edges;
  for (int u = 0; u < gadget.n(); ++u) {
    const NodeTag& a = gadget.s_tags()[u];
    const int v = assignment.match_of[u];
    const NodeTag& b = gadget.t_tags()[v];
    if (a.IsMainA() && b.kind == NodeTag::Kind::kBCopy && b.copy == a.point) {
      edges.push_back({a.point, b.point, *gadget.weight(u, v)});
    }
  }
  return edges;
}

SolveOutcome SolveMmdc(const ProblemInstance& instance,
                       const BuildOptions& options) {
  SolveOutcome out;

  auto start = Clock::now();
  const GadgetGraph gadget = Build(instance, options);
  const WeightMatrix weights = Materialize(gadget);
  out.timings.build_ms = MillisSince(start);
  out.gadget_nodes = gadget.n();

  start = Clock::now();
  const Assignment assignment = SolveAssignment(weights);
  out.timings.solve_ms = MillisSince(start);
  if (!VerifyCertificate(weights, assignment)) {
    throw AssertionFailure("assignment dual certificate does not verify");
  }

  start = Clock::now();
  for (int u = 0; u < gadget.n(); ++u) {
    const int v = assignment.match_of[u];
    if (weights.IsForbidden(u, v)) {
      out.cause = InfeasibleCause::kForbiddenEdge;
      break;
    }
    if (gadget.s_tags()[u].kind == NodeTag::Kind::kYNode &&
        gadget.t_tags()[v].kind == NodeTag::Kind::kBCopy) {
      out.cause = InfeasibleCause::kCompensatorDeficit;
    }
  }
  if (out.cause) {
    out.timings.extract_ms = MillisSince(start);
    return out;
  }

  const std::vector<MainEdge> edges = ExtractMainEdges(gadget, assignment);
  SolveReport report;
  report.gadget_nodes = gadget.n();
  report.gadget_total = assignment.total;
  report.resolution = gadget.resolution();
  Cost main_weight = 0;
  report.result.pairs.reserve(edges.size());
  for (const MainEdge& e : edges) {
    report.result.pairs.emplace_back(e.i, e.j);
    main_weight += e.weight;
  }
  std::sort(report.result.pairs.begin(), report.result.pairs.end());
  report.result.total_cost = PairCost(instance, report.result.pairs);
  if (main_weight % gadget.resolution() != 0) {
    throw AssertionFailure("main-edge weight is not a multiple of the resolution");
  }
  report.main_edge_total = main_weight / gadget.resolution();
  if (report.main_edge_total != report.result.total_cost) {
    throw AssertionFailure("main-edge weight disagrees with the pair costs");
  }
  if (auto violation = CheckMatchResult(instance, report.result)) {
    throw AssertionFailure("extracted matching is invalid: " + *violation);
  }
  out.timings.extract_ms = MillisSince(start);
  report.timings = out.timings;
  out.report = std::move(report);
  return out;
}

}  // namespace mmdc
