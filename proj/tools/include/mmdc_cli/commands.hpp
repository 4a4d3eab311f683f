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

// Implementations behind the `mmdc` subcommands. Each Cmd* function writes
// machine-readable output to `out`, diagnostics to `err`, and returns the
// process exit code.

#ifndef MMDC_CLI_COMMANDS_HPP_
#define MMDC_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmdc/gadget.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/oracle.hpp"

namespace mmdc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitInfeasible = 2,
  kExitMismatch = 3,
};

enum class Method { kGadget, kFlow, kBrute };

std::optional<Method> ParseMethod(std::string_view name);

struct SolveOptions {
  std::string input;
  std::optional<std::string> output;
  Method method = Method::kGadget;
  bool verify = false;
  std::optional<std::string> dump_gadget;
  BuildOptions build;
  EnumerationBudget budget;
};

int CmdSolve(const SolveOptions& options, std::ostream& out,
             std::ostream& err);

struct GenOptions {
  GenSpec spec;
  bool stressed = false;
  std::optional<std::string> output;
};

int CmdGen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct CheckOptions {
  int count = 100;
  int s_min = 1;
  int s_max = 3;
  int t_min = 1;
  int t_max = 3;
  Cost cost_lo = -9;
  Cost cost_hi = 9;
  int slack_min = 0;
  int slack_max = 2;
  std::uint64_t seed = 1;
  bool use_gadget = true;
  bool use_flow = true;
  bool use_brute = true;
  // Odd-numbered instances come from GenerateStressed.
  bool stressed = false;
  BuildOptions build;
  EnumerationBudget budget;
  std::optional<std::string> dump_dir;
};

struct Comparison {
  int compared = 0;
  int mismatches = 0;
};

struct Mismatch {
  int index;
  std::string detail;
  std::string dump_path;  // empty when dumping is disabled
};

struct CheckSummary {
  int instances = 0;
  int feasible = 0;
  int infeasible = 0;
  Comparison gadget_brute;
  Comparison gadget_flow;
  Comparison flow_brute;
  std::vector<Mismatch> mismatches;  // sorted by index
};

// The instance RunCheck generates at position `index`.
ProblemInstance CheckInstance(const CheckOptions& options, int index);

CheckSummary RunCheck(const CheckOptions& options);
void PrintCheckSummary(const CheckSummary& summary, std::ostream& out);
int CmdCheck(const CheckOptions& options, std::ostream& out,
             std::ostream& err);

struct BenchOptions {
  std::vector<int> sizes = {8, 16, 32};  // n = s + t
  int repeats = 3;
  std::uint64_t seed = 1;
  int slack = 1;
  Cost cost_lo = -9;
  Cost cost_hi = 9;
  std::optional<std::string> output;
};

struct BenchRow {
  int n;
  int s;
  int t;
  int gadget_nodes;
  double build_ms;
  double solve_ms;
  double extract_ms;
};

std::vector<BenchRow> RunBench(const BenchOptions& options);
void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out);
int CmdBench(const BenchOptions& options, std::ostream& out,
             std::ostream& err);

}  // namespace mmdc::cli

#endif  // MMDC_CLI_COMMANDS_HPP_
