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

#include "mmdc/generator.hpp"

#include <numeric>

#include "gtest/gtest.h"
#include "mmdc/oracle.hpp"

namespace mmdc {
namespace {

TEST(GenerateTest, Deterministic) {
  const GenSpec spec{3, 4, -9, 9, 77, 2};
  EXPECT_EQ(Generate(spec), Generate(spec));
  EXPECT_EQ(GenerateStressed(spec), GenerateStressed(spec));
  GenSpec other = spec;
  other.seed = 78;
  EXPECT_NE(Generate(spec), Generate(other));
}

TEST(GenerateTest, ValidAndFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenSpec spec{1 + static_cast<int>(seed % 4),
                       1 + static_cast<int>(seed / 4 % 4), -5, 5, seed,
                       static_cast<int>(seed % 3)};
    const ProblemInstance p = Generate(spec);
    EXPECT_EQ(Validate(p), std::nullopt);
    EXPECT_GT(CountFeasible(p), 0u) << seed;
    for (int i = 0; i < p.s; ++i) {
      for (int j = 0; j < p.t; ++j) {
        EXPECT_GE(p.cost(i, j), -5);
        EXPECT_LE(p.cost(i, j), 5);
      }
    }
  }
}

TEST(GenerateTest, ZeroSlackPinsBounds) {
  // With no slack every bound equals the witness count, so demand equals
  // capacity on both sides and the two totals agree.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ProblemInstance p = Generate({3, 3, -9, 9, seed, 0});
    EXPECT_EQ(p.alpha, p.alpha_cap);
    EXPECT_EQ(p.beta, p.beta_cap);
    EXPECT_EQ(std::accumulate(p.alpha.begin(), p.alpha.end(), 0),
              std::accumulate(p.beta.begin(), p.beta.end(), 0));
  }
}

TEST(GenerateStressedTest, ValidAndSometimesInfeasible) {
  int infeasible = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ProblemInstance p = GenerateStressed({3, 3, -9, 9, seed, 1});
    EXPECT_EQ(Validate(p), std::nullopt);
    infeasible += CountFeasible(p) == 0;
  }
  EXPECT_GT(infeasible, 0);
  EXPECT_LT(infeasible, 200);
}

TEST(CheckGenSpecTest, RejectsBadSpecs) {
  EXPECT_THROW(CheckGenSpec({0, 3}), std::invalid_argument);
  EXPECT_THROW(CheckGenSpec({3, 3, 5, 4}), std::invalid_argument);
  EXPECT_THROW(CheckGenSpec({3, 3, -9, 9, 1, -1}), std::invalid_argument);
  EXPECT_NO_THROW(CheckGenSpec({}));
}

}  // namespace
}  // namespace mmdc
