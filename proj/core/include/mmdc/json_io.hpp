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

// Instance and result documents.
//
// Instance: {"s", "t", "alpha", "alpha_cap", "beta", "beta_cap"} plus
// either "cost": [[int]] or the four point keys "points_a", "points_b",
// "metric", "scale". Unknown keys are rejected.
//
// Result: {"feasible", "pairs", "total_cost", "gadget_nodes", "phase_ms"}.

#ifndef MMDC_JSON_IO_HPP_
#define MMDC_JSON_IO_HPP_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mmdc/instance.hpp"
#include "mmdc/solver.hpp"

namespace mmdc {

class FormatError : public Error {
 public:
  using Error::Error;
};

// Throws FormatError on schema problems and InvalidInstance when the
// decoded instance fails Validate.
ProblemInstance ParseInstance(const nlohmann::json& doc);
ProblemInstance ParseInstanceText(const std::string& text);

// Canonical cost-matrix form.
nlohmann::ordered_json InstanceToJson(const ProblemInstance& instance);

nlohmann::ordered_json ResultToJson(const std::optional<MatchResult>& result,
                                    int gadget_nodes,
                                    const PhaseTimings& timings);

}  // namespace mmdc

#endif  // MMDC_JSON_IO_HPP_
