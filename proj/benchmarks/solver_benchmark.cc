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

#include <random>

#include "benchmark/benchmark.h"
#include "mmdc/flow.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/solver.hpp"

namespace mmdc {
namespace {

// n = s + t points split evenly, as in the CLI bench command.
ProblemInstance BenchInstance(int n) {
  GenSpec spec;
  spec.s = n / 2;
  spec.t = n - spec.s;
  spec.seed = static_cast<std::uint64_t>(n);
  return Generate(spec);
}

void BM_Hungarian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<Cost> dist(-1000, 1000);
  std::vector<Cost> data(static_cast<std::size_t>(n) * n);
  for (Cost& w : data) w = dist(rng);
  const WeightMatrix weights(n, std::move(data));
  for (auto _ : state) benchmark::DoNotOptimize(SolveAssignment(weights));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_SolveMmdc(benchmark::State& state) {
  const ProblemInstance instance =
      BenchInstance(static_cast<int>(state.range(0)));
  int nodes = 0;
  for (auto _ : state) {
    const SolveOutcome outcome = SolveMmdc(instance);
    nodes = outcome.gadget_nodes;
    benchmark::DoNotOptimize(outcome);
  }
  state.counters["gadget_nodes"] = nodes;
}
BENCHMARK(BM_SolveMmdc)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FlowMinCost(benchmark::State& state) {
  const ProblemInstance instance =
      BenchInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FlowMinCost(instance));
}
BENCHMARK(BM_FlowMinCost)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mmdc

BENCHMARK_MAIN();
