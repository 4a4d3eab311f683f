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

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mmdc_cli/commands.hpp"

namespace {

void AddGammaFlags(CLI::App* cmd, mmdc::BuildOptions& build) {
  cmd->add_option("--gamma-low", build.offsets.low,
                  "gamma1 = gamma - LOW (X-to-B edge weight)")
      ->capture_default_str();
  cmd->add_option("--gamma-high", build.offsets.high,
                  "gamma2 = gamma - HIGH (X-to-Y edge weight)")
      ->capture_default_str();
  cmd->add_option("--resolution", build.resolution,
                  "main-edge weight multiplier; 0 = auto, 1 = plain gadget")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mmdc::cli;

  CLI::App app{"Minimum-cost many-to-many matching with demands and capacities"};
  app.require_subcommand(1);

  const std::map<std::string, Method> methods = {
      {"gadget", Method::kGadget}, {"flow", Method::kFlow},
      {"brute", Method::kBrute}};

  SolveOptions solve;
  std::string dump_gadget;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
  solve_cmd->add_option("--output", solve.output, "Result JSON (default stdout)");
  solve_cmd->add_option("--method", solve.method, "gadget | flow | brute")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  solve_cmd->add_flag("--verify", solve.verify,
                      "Re-check bounds and the dual certificate");
  solve_cmd->add_option("--dump-gadget", solve.dump_gadget,
                        "Write the gadget listing to this file");
  solve_cmd->add_option("--max-cells", solve.budget.max_cells,
                        "Brute-force budget on s*t")
      ->capture_default_str();
  AddGammaFlags(solve_cmd, solve.build);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a feasible instance");
  gen_cmd->add_option("--s", gen.spec.s)->capture_default_str();
  gen_cmd->add_option("--t", gen.spec.t)->capture_default_str();
  gen_cmd->add_option("--cost-lo", gen.spec.cost_lo)->capture_default_str();
  gen_cmd->add_option("--cost-hi", gen.spec.cost_hi)->capture_default_str();
  gen_cmd->add_option("--slack", gen.spec.slack)->capture_default_str();
  gen_cmd->add_option("--seed", gen.spec.seed)->capture_default_str();
  gen_cmd->add_flag("--stressed", gen.stressed,
                    "Tighten bounds afterwards (often infeasible)");
  gen_cmd->add_option("--output", gen.output, "Instance JSON (default stdout)");

  CheckOptions check;
  std::string check_methods = "gadget,flow,brute";
  auto* check_cmd =
      app.add_subcommand("check", "Cross-check solvers on random instances");
  check_cmd->add_option("--count", check.count)->capture_default_str();
  check_cmd->add_option("--s-min", check.s_min)->capture_default_str();
  check_cmd->add_option("--s-max", check.s_max)->capture_default_str();
  check_cmd->add_option("--t-min", check.t_min)->capture_default_str();
  check_cmd->add_option("--t-max", check.t_max)->capture_default_str();
  check_cmd->add_option("--cost-lo", check.cost_lo)->capture_default_str();
  check_cmd->add_option("--cost-hi", check.cost_hi)->capture_default_str();
  check_cmd->add_option("--slack-min", check.slack_min)->capture_default_str();
  check_cmd->add_option("--slack-max", check.slack_max)->capture_default_str();
  check_cmd->add_option("--seed", check.seed)->capture_default_str();
  check_cmd->add_option("--methods", check_methods,
                        "Comma-separated subset of gadget,flow,brute")
      ->capture_default_str();
  check_cmd->add_flag("--stressed", check.stressed,
                      "Mix in tightened, often infeasible instances");
  check_cmd->add_option("--max-cells", check.budget.max_cells)
      ->capture_default_str();
  check_cmd->add_option("--dump-dir", check.dump_dir,
                        "Write mismatching instances here");
  AddGammaFlags(check_cmd, check.build);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the gadget solver");
  bench_cmd->add_option("--sizes", bench.sizes, "Values of n = s + t")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--slack", bench.slack)->capture_default_str();
  bench_cmd->add_option("--output", bench.output, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) return CmdSolve(solve, std::cout, std::cerr);
  if (gen_cmd->parsed()) return CmdGen(gen, std::cout, std::cerr);
  if (check_cmd->parsed()) {
    check.use_gadget = check.use_flow = check.use_brute = false;
    std::string name;
    std::istringstream list(check_methods);
    while (std::getline(list, name, ',')) {
      const auto method = ParseMethod(name);
      if (!method) {
        std::cerr << "error: unknown method \"" << name << "\"\n";
        return kExitError;
      }
      check.use_gadget |= *method == Method::kGadget;
      check.use_flow |= *method == Method::kFlow;
      check.use_brute |= *method == Method::kBrute;
    }
    return CmdCheck(check, std::cout, std::cerr);
  }
  return CmdBench(bench, std::cout, std::cerr);
}
