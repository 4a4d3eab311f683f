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

// Exhaustive referee for tiny instances: enumerates every 0/1 pairing matrix
// and keeps those whose row and column sums respect the bounds.

#ifndef MMDC_ORACLE_HPP_
#define MMDC_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "mmdc/instance.hpp"

namespace mmdc {

inline constexpr int kMaxEnumerationCells = 24;

struct EnumerationBudget {
  int max_cells = 20;  // largest s * t enumerated; capped at 24
};

// Minimum-cost matching; ties go to the lexicographically smallest pair
// list. nullopt when no matrix qualifies. Throws BudgetExceeded.
std::optional<MatchResult> BruteForce(const ProblemInstance& instance,
                                      EnumerationBudget budget = {});

// Number of qualifying 0/1 matrices. Throws BudgetExceeded.
std::uint64_t CountFeasible(const ProblemInstance& instance,
                            EnumerationBudget budget = {});

}  // namespace mmdc

#endif  // MMDC_ORACLE_HPP_
