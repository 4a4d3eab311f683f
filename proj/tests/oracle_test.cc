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

#include <random>

#include "gtest/gtest.h"
#include "mmdc/flow.hpp"
#include "mmdc/generator.hpp"
#include "test_util.hpp"

namespace mmdc {
namespace {

using testing::MakeInstance;
using testing::MinimalInstance;

TEST(BruteForceTest, MinimalInstance) {
  const auto r = BruteForce(MinimalInstance());
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->pairs, (std::vector<Pair>{{0, 0}}));
  EXPECT_EQ(r->total_cost, 5);
}

TEST(BruteForceTest, TwoByTwo) {
  const auto r = BruteForce(
      MakeInstance({{1, 2}, {3, 4}}, {1, 1}, {2, 2}, {1, 1}, {2, 2}));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->total_cost, 5);
  // Two optima; the lexicographically smaller pair list wins.
  EXPECT_EQ(r->pairs, (std::vector<Pair>{{0, 0}, {1, 1}}));
}

TEST(BruteForceTest, Infeasible) {
  EXPECT_EQ(BruteForce(MakeInstance({{1}, {2}}, {1, 1}, {1, 1}, {1}, {1})),
            std::nullopt);
}

TEST(BruteForceTest, Budget) {
  const ProblemInstance p = MakeInstance(
      std::vector<std::vector<Cost>>(5, std::vector<Cost>(5, 0)),
      std::vector<int>(5, 0), std::vector<int>(5, 1), std::vector<int>(5, 0),
      std::vector<int>(5, 1));
  EXPECT_THROW(BruteForce(p), BudgetExceeded);
  EXPECT_THROW(CountFeasible(p), BudgetExceeded);
  // Hard cap of 24 cells regardless of the requested budget.
  EXPECT_THROW(BruteForce(p, {100}), BudgetExceeded);
  const ProblemInstance fits = MakeInstance(
      std::vector<std::vector<Cost>>(4, std::vector<Cost>(5, 1)),
      std::vector<int>(4, 1), std::vector<int>(4, 1), std::vector<int>(5, 0),
      std::vector<int>(5, 1));
  EXPECT_EQ(BruteForce(fits)->total_cost, 4);
}

TEST(CountFeasibleTest, Examples) {
  EXPECT_EQ(CountFeasible(MinimalInstance()), 1u);
  EXPECT_EQ(CountFeasible(
                MakeInstance({{0, 0}, {0, 0}}, {0, 0}, {2, 2}, {0, 0}, {2, 2})),
            16u);
  EXPECT_EQ(CountFeasible(
                MakeInstance({{0, 0}, {0, 0}}, {1, 1}, {1, 1}, {1, 1}, {1, 1})),
            2u);
}

// Independent count: plain loop over all 2^(s*t) matrices.
std::uint64_t NaiveCount(const ProblemInstance& p) {
  const int cells = p.s * p.t;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<int> row(p.s, 0), col(p.t, 0);
    for (int c = 0; c < cells; ++c) {
      if (mask >> c & 1) {
        ++row[c / p.t];
        ++col[c % p.t];
      }
    }
    bool ok = true;
    for (int i = 0; i < p.s; ++i) ok &= row[i] >= p.alpha[i] && row[i] <= p.alpha_cap[i];
    for (int j = 0; j < p.t; ++j) ok &= col[j] >= p.beta[j] && col[j] <= p.beta_cap[j];
    count += ok;
  }
  return count;
}

TEST(CountFeasibleTest, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const ProblemInstance p = GenerateStressed(
        {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4), -9,
         9, rng(), static_cast<int>(rng() % 3)});
    EXPECT_EQ(CountFeasible(p), NaiveCount(p));
  }
}

TEST(BruteForceTest, InfeasibleIffFlowInfeasible) {
  std::mt19937_64 rng(22);
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const ProblemInstance p = GenerateStressed(
        {1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), -9,
         9, rng(), static_cast<int>(rng() % 3)});
    const bool brute = BruteForce(p).has_value();
    EXPECT_EQ(brute, FlowFeasible(p)) << trial;
    EXPECT_EQ(brute, CountFeasible(p) > 0);
    infeasible += !brute;
  }
  EXPECT_GT(infeasible, 20);
}

}  // namespace
}  // namespace mmdc
