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

#include "mmdc_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "mmdc/flow.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/json_io.hpp"
#include "mmdc/solver.hpp"

namespace mmdc::cli {

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path` when given, otherwise to `out`.
void Emit(const std::optional<std::string>& path, const std::string& text,
          std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file) throw Error("cannot write " + *path);
  file << text;
  if (!file) throw Error("failed writing " + *path);
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool VerifyGadgetCertificate(const ProblemInstance& instance,
                             const BuildOptions& build, Cost gadget_total) {
  const GadgetGraph gadget = Build(instance, build);
  const WeightMatrix weights = Materialize(gadget);
  const Assignment assignment = SolveAssignment(weights);
  return VerifyCertificate(weights, assignment) &&
         assignment.total == gadget_total;
}

}  // namespace

std::optional<Method> ParseMethod(std::string_view name) {
  if (name == "gadget") return Method::kGadget;
  if (name == "flow") return Method::kFlow;
  if (name == "brute") return Method::kBrute;
  return std::nullopt;
}

int CmdSolve(const SolveOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const ProblemInstance instance =
        ParseInstanceText(ReadFile(options.input));

    if (options.dump_gadget) {
      std::ostringstream dump;
      DumpGadget(Build(instance, options.build), dump);
      Emit(options.dump_gadget, dump.str(), out);
    }

    std::optional<MatchResult> result;
    int gadget_nodes = 0;
    PhaseTimings timings;
    std::optional<Cost> gadget_total;
    switch (options.method) {
      case Method::kGadget: {
        SolveOutcome outcome = SolveMmdc(instance, options.build);
        gadget_nodes = outcome.gadget_nodes;
        timings = outcome.timings;
        if (outcome.report) {
          result = outcome.report->result;
          gadget_total = outcome.report->gadget_total;
        }
        break;
      }
      case Method::kFlow: {
        const auto start = std::chrono::steady_clock::now();
        result = FlowMinCost(instance);
        timings.solve_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        break;
      }
      case Method::kBrute: {
        const auto start = std::chrono::steady_clock::now();
        result = BruteForce(instance, options.budget);
        timings.solve_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        break;
      }
    }

    if (options.verify && result) {
      if (auto violation = CheckMatchResult(instance, *result)) {
        err << "verify: " << *violation << '\n';
        return kExitError;
      }
      if (gadget_total &&
          !VerifyGadgetCertificate(instance, options.build, *gadget_total)) {
        err << "verify: dual certificate rejected\n";
        return kExitError;
      }
      err << "verify: ok\n";
    }

    Emit(options.output,
         ResultToJson(result, gadget_nodes, timings).dump() + "\n", out);
    return result ? kExitOk : kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int CmdGen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const ProblemInstance instance = options.stressed
                                         ? GenerateStressed(options.spec)
                                         : Generate(options.spec);
    Emit(options.output, InstanceToJson(instance).dump() + "\n", out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

ProblemInstance CheckInstance(const CheckOptions& options, int index) {
  std::mt19937_64 rng(SplitMix64(options.seed + static_cast<std::uint64_t>(index)));
  GenSpec spec;
  spec.s = std::uniform_int_distribution<int>(options.s_min, options.s_max)(rng);
  spec.t = std::uniform_int_distribution<int>(options.t_min, options.t_max)(rng);
  spec.slack = std::uniform_int_distribution<int>(options.slack_min,
                                                  options.slack_max)(rng);
  spec.cost_lo = options.cost_lo;
  spec.cost_hi = options.cost_hi;
  spec.seed = rng();
  return options.stressed && index % 2 == 1 ? GenerateStressed(spec)
                                            : Generate(spec);
}

namespace {

std::string Describe(const std::optional<MatchResult>& r) {
  return r ? std::to_string(r->total_cost) : std::string("infeasible");
}

// Compares two solver answers; returns a description on disagreement.
std::optional<std::string> Compare(const char* left_name,
                                   const std::optional<MatchResult>& left,
                                   const char* right_name,
                                   const std::optional<MatchResult>& right,
                                   Comparison& tally) {
  ++tally.compared;
  const bool same = left.has_value() == right.has_value() &&
                    (!left || left->total_cost == right->total_cost);
  if (same) return std::nullopt;
  ++tally.mismatches;
  return std::string(left_name) + "=" + Describe(left) + " " + right_name +
         "=" + Describe(right);
}

}  // namespace

CheckSummary RunCheck(const CheckOptions& options) {
  if (options.s_min < 1 || options.s_min > options.s_max ||
      options.t_min < 1 || options.t_min > options.t_max ||
      options.slack_min < 0 || options.slack_min > options.slack_max ||
      options.count < 0) {
    throw std::invalid_argument("invalid check ranges");
  }
  if (options.dump_dir) {
    std::filesystem::create_directories(*options.dump_dir);
    std::ofstream(std::filesystem::path(*options.dump_dir) / "mismatches.log",
                  std::ios::trunc);
  }

  CheckSummary summary;
  for (int k = 0; k < options.count; ++k) {
    const ProblemInstance instance = CheckInstance(options, k);
    ++summary.instances;
    std::vector<std::string> problems;

    std::optional<MatchResult> gadget, flow, brute;
    bool has_gadget = false, has_flow = false, has_brute = false;
    const auto run = [&](const char* name, auto&& solve,
                         std::optional<MatchResult>& slot, bool& ran) {
      try {
        slot = solve();
        ran = true;
        if (slot) {
          if (auto v = CheckMatchResult(instance, *slot)) {
            problems.push_back(std::string(name) + " invalid result: " + *v);
          }
        }
      } catch (const BudgetExceeded&) {
        // Outside the referee's domain; skipped.
      } catch (const std::exception& e) {
        problems.push_back(std::string(name) + " failed: " + e.what());
      }
    };
    if (options.use_gadget) {
      run("gadget",
          [&]() -> std::optional<MatchResult> {
            SolveOutcome outcome = SolveMmdc(instance, options.build);
            if (!outcome.report) return std::nullopt;
            return outcome.report->result;
          },
          gadget, has_gadget);
    }
    if (options.use_flow) {
      run("flow", [&] { return FlowMinCost(instance); }, flow, has_flow);
    }
    if (options.use_brute) {
      run("brute", [&] { return BruteForce(instance, options.budget); }, brute,
          has_brute);
    }

    if (has_gadget && has_brute) {
      if (auto d = Compare("gadget", gadget, "brute", brute,
                           summary.gadget_brute)) {
        problems.push_back(*d);
      }
    }
    if (has_gadget && has_flow) {
      if (auto d = Compare("gadget", gadget, "flow", flow, summary.gadget_flow)) {
        problems.push_back(*d);
      }
    }
    if (has_flow && has_brute) {
      if (auto d = Compare("flow", flow, "brute", brute, summary.flow_brute)) {
        problems.push_back(*d);
      }
    }

    const std::optional<MatchResult>& reference =
        has_brute ? brute : (has_flow ? flow : gadget);
    if (reference) {
      ++summary.feasible;
    } else {
      ++summary.infeasible;
    }

    if (!problems.empty()) {
      Mismatch m{k, {}, {}};
      for (std::size_t p = 0; p < problems.size(); ++p) {
        m.detail += (p ? "; " : "") + problems[p];
      }
      if (options.dump_dir) {
        std::ostringstream name;
        name << "mismatch_" << std::setw(5) << std::setfill('0') << k
             << ".json";
        const auto path = std::filesystem::path(*options.dump_dir) / name.str();
        std::ofstream file(path);
        file << InstanceToJson(instance).dump() << '\n';
        m.dump_path = path.string();
        std::ofstream log(std::filesystem::path(*options.dump_dir) /
                              "mismatches.log",
                          std::ios::app);
        log << k << '\t' << name.str() << '\t' << "gamma_offsets="
            << options.build.offsets.low << ',' << options.build.offsets.high
            << " resolution="
            << (options.build.resolution == 0
                    ? std::string("auto")
                    : std::to_string(options.build.resolution))
            << '\t' << m.detail << '\n';
      }
      summary.mismatches.push_back(std::move(m));
    }
  }
  return summary;
}

void PrintCheckSummary(const CheckSummary& summary, std::ostream& out) {
  out << "instances  feasible  infeasible\n";
  out << std::setw(9) << summary.instances << std::setw(10)
      << summary.feasible << std::setw(12) << summary.infeasible << '\n';
  out << "comparison     compared  mismatches\n";
  const auto row = [&out](const char* name, const Comparison& c) {
    out << std::left << std::setw(14) << name << std::right << std::setw(9)
        << c.compared << std::setw(12) << c.mismatches << '\n';
  };
  row("gadget-brute", summary.gadget_brute);
  row("gadget-flow", summary.gadget_flow);
  row("flow-brute", summary.flow_brute);
  for (const Mismatch& m : summary.mismatches) {
    out << "mismatch #" << m.index << ": " << m.detail;
    if (!m.dump_path.empty()) out << " [" << m.dump_path << "]";
    out << '\n';
  }
}

int CmdCheck(const CheckOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const CheckSummary summary = RunCheck(options);
    PrintCheckSummary(summary, out);
    return summary.mismatches.empty() ? kExitOk : kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

std::vector<BenchRow> RunBench(const BenchOptions& options) {
  if (options.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  std::vector<BenchRow> rows;
  for (int n : options.sizes) {
    if (n < 2) throw std::invalid_argument("bench sizes must be >= 2");
    GenSpec spec;
    spec.s = n / 2;
    spec.t = n - spec.s;
    spec.slack = options.slack;
    spec.cost_lo = options.cost_lo;
    spec.cost_hi = options.cost_hi;
    spec.seed = SplitMix64(options.seed + static_cast<std::uint64_t>(n));
    const ProblemInstance instance = Generate(spec);

    std::vector<double> build, solve, extract;
    int nodes = 0;
    for (int r = 0; r < options.repeats; ++r) {
      const SolveOutcome outcome = SolveMmdc(instance);
      nodes = outcome.gadget_nodes;
      build.push_back(outcome.timings.build_ms);
      solve.push_back(outcome.timings.solve_ms);
      extract.push_back(outcome.timings.extract_ms);
    }
    const auto median = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      const std::size_t mid = v.size() / 2;
      return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
    };
    rows.push_back({n, spec.s, spec.t, nodes, median(build), median(solve),
                    median(extract)});
  }
  return rows;
}

void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "n,s,t,gadget_nodes,build_ms,solve_ms,extract_ms\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.s << ',' << r.t << ',' << r.gadget_nodes << ','
        << r.build_ms << ',' << r.solve_ms << ',' << r.extract_ms << '\n';
  }
}

int CmdBench(const BenchOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    std::ostringstream csv;
    WriteBenchCsv(RunBench(options), csv);
    Emit(options.output, csv.str(), out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace mmdc::cli
