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

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mmdc {

void CheckGenSpec(const GenSpec& spec) {
  if (spec.s < 1 || spec.t < 1) {
    throw std::invalid_argument("s and t must be at least 1");
  }
  if (spec.cost_lo > spec.cost_hi) {
    throw std::invalid_argument("cost range is empty");
  }
  if (spec.cost_lo < -kCostLimit || spec.cost_hi > kCostLimit) {
    throw std::invalid_argument("cost range exceeds the cost limit");
  }
  if (spec.slack < 0) throw std::invalid_argument("slack must be >= 0");
}

namespace {

ProblemInstance GenerateWith(const GenSpec& spec, std::mt19937_64& rng) {
  CheckGenSpec(spec);
  const int s = spec.s;
  const int t = spec.t;
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> gap(0, spec.slack);
  std::uniform_int_distribution<Cost> cost(spec.cost_lo, spec.cost_hi);

  std::vector<int> row_sum(s, 0), col_sum(t, 0);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) {
      if (coin(rng)) {
        ++row_sum[i];
        ++col_sum[j];
      }
    }
  }

  ProblemInstance out;
  out.s = s;
  out.t = t;
  out.cost = CostMatrix(s, t);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) out.cost(i, j) = cost(rng);
  }
  for (int i = 0; i < s; ++i) {
    out.alpha.push_back(std::max(0, row_sum[i] - gap(rng)));
    out.alpha_cap.push_back(std::min(t, row_sum[i] + gap(rng)));
  }
  for (int j = 0; j < t; ++j) {
    out.beta.push_back(std::max(0, col_sum[j] - gap(rng)));
    out.beta_cap.push_back(std::min(s, col_sum[j] + gap(rng)));
  }
  return out;
}

}  // namespace

ProblemInstance Generate(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  return GenerateWith(spec, rng);
}

ProblemInstance GenerateStressed(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  ProblemInstance out = GenerateWith(spec, rng);
  std::uniform_int_distribution<int> pick_side(0, 1);
  std::bernoulli_distribution raise(0.5);
  for (int round = 0; round <= spec.slack; ++round) {
    const bool a_side = pick_side(rng) == 0;
    auto& demand = a_side ? out.alpha : out.beta;
    auto& capacity = a_side ? out.alpha_cap : out.beta_cap;
    const int partners = a_side ? out.t : out.s;
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(demand.size()) - 1);
    const int k = pick(rng);
    if (raise(rng)) {
      demand[k] = std::min(partners, demand[k] + 1);
      capacity[k] = std::max(capacity[k], demand[k]);
    } else {
      capacity[k] = std::max(0, capacity[k] - 1);
      demand[k] = std::min(demand[k], capacity[k]);
    }
  }
  return out;
}

}  // namespace mmdc
