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

#ifndef MMDC_GENERATOR_HPP_
#define MMDC_GENERATOR_HPP_

#include <cstdint>

#include "mmdc/instance.hpp"

namespace mmdc {

struct GenSpec {
  int s = 3;
  int t = 3;
  Cost cost_lo = -9;
  Cost cost_hi = 9;
  std::uint64_t seed = 1;
  int slack = 1;  // largest gap drawn between a witness count and a bound
};

// Throws std::invalid_argument unless s, t >= 1, cost_lo <= cost_hi and
// slack >= 0.
void CheckGenSpec(const GenSpec& spec);

// Feasible by construction: draws a witness 0/1 matrix, then widens each
// row/column count by up to `slack` on either side (clamped to [0, partner
// count]) to obtain demands and capacities. Costs are uniform in
// [cost_lo, cost_hi]. Same spec, same instance.
ProblemInstance Generate(const GenSpec& spec);

// Generate() followed by 1 + slack random tightenings (a demand raised or a
// capacity lowered by one, dragging the other bound along when needed).
// Results are valid instances, frequently infeasible.
ProblemInstance GenerateStressed(const GenSpec& spec);

}  // namespace mmdc

#endif  // MMDC_GENERATOR_HPP_
