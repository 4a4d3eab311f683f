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

#include "mmdc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace mmdc {

namespace {

void CheckBudget(const ProblemInstance& instance, EnumerationBudget budget) {
  if (auto error = Validate(instance)) throw InvalidInstance(*error);
  const int cap = std::min(budget.max_cells, kMaxEnumerationCells);
  if (instance.s * instance.t > cap) {
    throw BudgetExceeded("s*t = " + std::to_string(instance.s * instance.t) +
                         " exceeds the enumeration budget of " +
                         std::to_string(cap) + " cells");
  }
}

// Walks rows in order; each row picks a column subset (bit j = pair (i, j))
// whose size lies in [alpha_i, alpha_cap_i] and that keeps every column
// within its capacity. Column demands are checked once all rows are set.
template <typename Visit>
class RowEnumerator {
 public:
  RowEnumerator(const ProblemInstance& instance, Visit visit)
      : instance_(instance),
        visit_(visit),
        rows_(instance.s, 0),
        col_count_(instance.t, 0),
        mask_end_(std::uint64_t{1} << instance.t) {}

  void Run() { Recurse(0); }

 private:
  void Recurse(int i) {
    if (i == instance_.s) {
      for (int j = 0; j < instance_.t; ++j) {
        if (col_count_[j] < instance_.beta[j]) return;
      }
      visit_(rows_);
      return;
    }
    for (std::uint64_t wide = 0; wide < mask_end_; ++wide) {
      const auto mask = static_cast<std::uint32_t>(wide);
      const int size = std::popcount(mask);
      if (size < instance_.alpha[i] || size > instance_.alpha_cap[i]) continue;
      bool fits = true;
      for (int j = 0; j < instance_.t && fits; ++j) {
        if ((mask >> j & 1u) && col_count_[j] == instance_.beta_cap[j]) {
          fits = false;
        }
      }
      if (!fits) continue;
      for (int j = 0; j < instance_.t; ++j) col_count_[j] += mask >> j & 1u;
      rows_[i] = mask;
      Recurse(i + 1);
      for (int j = 0; j < instance_.t; ++j) col_count_[j] -= mask >> j & 1u;
    }
  }

  const ProblemInstance& instance_;
  Visit visit_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> col_count_;
  std::uint64_t mask_end_;
};

std::vector<Pair> PairsOf(const std::vector<std::uint32_t>& rows, int t) {
  std::vector<Pair> pairs;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < t; ++j) {
      if (rows[i] >> j & 1u) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace

std::optional<MatchResult> BruteForce(const ProblemInstance& instance,
                                      EnumerationBudget budget) {
  CheckBudget(instance, budget);
  std::optional<MatchResult> best;
  auto visit = [&](const std::vector<std::uint32_t>& rows) {
    MatchResult candidate;
    candidate.pairs = PairsOf(rows, instance.t);
    candidate.total_cost = PairCost(instance, candidate.pairs);
    if (!best || candidate.total_cost < best->total_cost ||
        (candidate.total_cost == best->total_cost &&
         candidate.pairs < best->pairs)) {
      best = std::move(candidate);
    }
  };
  RowEnumerator<decltype(visit)>(instance, visit).Run();
  return best;
}

std::uint64_t CountFeasible(const ProblemInstance& instance,
                            EnumerationBudget budget) {
  CheckBudget(instance, budget);
  std::uint64_t count = 0;
  auto visit = [&count](const std::vector<std::uint32_t>&) { ++count; };
  RowEnumerator<decltype(visit)>(instance, visit).Run();
  return count;
}

}  // namespace mmdc
