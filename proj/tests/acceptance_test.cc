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

// Acceptance suite. Prints one "[PASS]" or "[FAIL]" line per criterion and
// exits non-zero if any criterion fails.
//
// Usage: mmdc_acceptance [--triage-dir DIR]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmdc/flow.hpp"
#include "mmdc/gadget.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/json_io.hpp"
#include "mmdc/oracle.hpp"
#include "mmdc/solver.hpp"
#include "mmdc_cli/commands.hpp"
#include "test_util.hpp"

namespace mmdc {
namespace {

namespace fs = std::filesystem;

struct Verdict {
  bool pass;
  std::string detail;
};

int Sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

std::optional<Cost> GadgetTotal(const ProblemInstance& p,
                                const BuildOptions& options = {}) {
  const SolveOutcome outcome = SolveMmdc(p, options);
  if (!outcome.report) return std::nullopt;
  return outcome.report->result.total_cost;
}

std::string Describe(const cli::CheckSummary& s) {
  std::ostringstream out;
  out << s.instances << " instances (" << s.feasible << " feasible, "
      << s.infeasible << " infeasible); gadget/brute "
      << s.gadget_brute.mismatches << "/" << s.gadget_brute.compared
      << ", gadget/flow " << s.gadget_flow.mismatches << "/"
      << s.gadget_flow.compared << ", flow/brute " << s.flow_brute.mismatches
      << "/" << s.flow_brute.compared << " mismatches";
  return out.str();
}

// Criterion 1: all three solvers agree on small instances.
Verdict SmallEquivalence() {
  cli::CheckOptions options;
  options.count = 1000;
  options.seed = 1001;
  const cli::CheckSummary s = cli::RunCheck(options);
  const bool all_compared = s.gadget_brute.compared == s.instances &&
                            s.gadget_flow.compared == s.instances &&
                            s.flow_brute.compared == s.instances;
  return {s.instances == 1000 && all_compared && s.mismatches.empty(),
          Describe(s)};
}

// Criterion 2: gadget against flow beyond the brute-force budget.
Verdict MediumCrossCheck() {
  cli::CheckOptions options;
  options.count = 200;
  options.s_min = options.t_min = 2;
  options.s_max = options.t_max = 6;
  options.seed = 2002;
  options.use_brute = false;
  const cli::CheckSummary s = cli::RunCheck(options);
  return {s.gadget_flow.compared == 200 && s.mismatches.empty(), Describe(s)};
}

// Criterion 3: side sizes and per-family tag counts.
Verdict SizeFormulas() {
  int checked = 0;
  std::string failure;
  for (int index = 0; index < 1000 && failure.empty(); ++index) {
    cli::CheckOptions options;
    options.s_max = options.t_max = 5;
    options.seed = 3003;
    options.stressed = true;
    const ProblemInstance p = cli::CheckInstance(options, index);
    const GadgetGraph g = Build(p);
    const int st = p.s * p.t;
    const int excess = Sum(p.alpha_cap) - Sum(p.beta);
    int counts[6] = {};
    for (const NodeTag& tag : g.s_tags()) ++counts[static_cast<int>(tag.kind)];
    int bcopies = 0, t_y = 0;
    for (const NodeTag& tag : g.t_tags()) {
      bcopies += tag.kind == NodeTag::Kind::kBCopy;
      t_y += tag.kind == NodeTag::Kind::kYNode;
    }
    int w_expected = 0, x_expected = 0;
    for (int j = 0; j < p.t; ++j) {
      x_expected += p.beta_cap[j] - p.beta[j];
      w_expected += p.s - p.beta_cap[j];
    }
    const bool ok =
        g.n() == st + std::max(0, excess) &&
        static_cast<int>(g.s_tags().size()) == g.n() &&
        static_cast<int>(g.t_tags().size()) == g.n() &&
        counts[static_cast<int>(NodeTag::Kind::kMainA)] == Sum(p.alpha) &&
        counts[static_cast<int>(NodeTag::Kind::kExtraA)] ==
            Sum(p.alpha_cap) - Sum(p.alpha) &&
        counts[static_cast<int>(NodeTag::Kind::kXDummy)] == x_expected &&
        counts[static_cast<int>(NodeTag::Kind::kWDummy)] == w_expected &&
        counts[static_cast<int>(NodeTag::Kind::kYNode)] == std::max(0, -excess) &&
        bcopies == st && t_y == std::max(0, excess);
    if (!ok) failure = "size mismatch at instance " + std::to_string(index);
    ++checked;
  }
  return {failure.empty(), failure.empty()
                               ? std::to_string(checked) +
                                     " gadgets match n = s*t + max(0, "
                                     "sum(alpha_cap) - sum(beta)) and all "
                                     "family counts"
                               : failure};
}

// Criterion 4: Hungarian against permutation enumeration.
Verdict HungarianOracle() {
  std::mt19937_64 rng(4004);
  int failures = 0;
  const int trials = 600;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + trial % 7;
    const auto rows = testing::RandomMatrix(n, -9, 9, rng);
    const WeightMatrix m = WeightMatrix::FromRows(rows);
    const Assignment a = SolveAssignment(m);
    if (a.total != testing::MinOverPermutations(rows) ||
        !VerifyCertificate(m, a)) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(trials) + " matrices, n in [1, 7]; " +
                             std::to_string(failures) + " failures"};
}

// Criterion 5: alternate gamma offsets. The unscaled gadget (resolution 1)
// is run as a finding generator with every disagreement dumped under
// triage_dir; the default resolution must then agree everywhere.
Verdict GammaFuzz(const fs::path& triage_dir) {
  const std::vector<GammaOffsets> offsets = {
      {2, 1}, {3, 2}, {5, 1}, {10, 3}, {100, 1}, {1'000'000, 1}};
  int instances = 0, literal_mismatches = 0, uncaptured = 0,
      scaled_mismatches = 0;
  std::ostringstream per_offset;
  fs::remove_all(triage_dir);
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    cli::CheckOptions options;
    options.count = 50;
    options.seed = 5005 + 1000 * k;
    options.build.offsets = offsets[k];
    options.build.resolution = 1;
    const fs::path dir = triage_dir / ("offsets_" + std::to_string(offsets[k].low) +
                                       "_" + std::to_string(offsets[k].high));
    fs::create_directories(dir);
    options.dump_dir = dir.string();
    const cli::CheckSummary literal = cli::RunCheck(options);
    instances += literal.instances;
    literal_mismatches += static_cast<int>(literal.mismatches.size());
    for (const cli::Mismatch& m : literal.mismatches) {
      if (m.dump_path.empty() || !fs::exists(m.dump_path)) ++uncaptured;
    }
    per_offset << " (" << offsets[k].low << "," << offsets[k].high
               << "):" << literal.mismatches.size();

    options.build.resolution = 0;
    options.dump_dir.reset();
    scaled_mismatches +=
        static_cast<int>(cli::RunCheck(options).mismatches.size());
  }
  std::ostringstream detail;
  detail << instances << " instances; resolution 1 mismatches"
         << per_offset.str() << ", " << uncaptured
         << " uncaptured, triage in " << triage_dir.string()
         << "; default resolution mismatches " << scaled_mismatches;
  return {uncaptured == 0 && scaled_mismatches == 0, detail.str()};
}

// Criterion 6: all three deciders agree on feasibility.
Verdict InfeasibilityAgreement() {
  std::mt19937_64 rng(6006);
  int infeasible = 0, disagreements = 0;
  const int trials = 600;
  for (int trial = 0; trial < trials; ++trial) {
    GenSpec spec;
    spec.s = 1 + static_cast<int>(rng() % 4);
    spec.t = 1 + static_cast<int>(rng() % 4);
    spec.slack = static_cast<int>(rng() % 3);
    spec.seed = rng();
    const ProblemInstance p =
        trial % 3 == 0 ? Generate(spec) : GenerateStressed(spec);
    const bool gadget = GadgetTotal(p).has_value();
    const bool flow = FlowFeasible(p);
    const bool brute = BruteForce(p).has_value();
    disagreements += !(gadget == flow && flow == brute);
    infeasible += !brute;
  }
  return {disagreements == 0 && infeasible > 0,
          std::to_string(trials) + " instances (" + std::to_string(infeasible) +
              " infeasible); " + std::to_string(disagreements) +
              " disagreements"};
}

// Criterion 7: scaling diagnostic; completion is the pass bar.
Verdict Complexity() {
  cli::BenchOptions options;
  options.sizes = {8, 16, 32};
  options.repeats = 3;
  const auto rows = cli::RunBench(options);
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(2);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    detail << (k ? "; " : "") << "n=" << rows[k].n
           << " nodes=" << rows[k].gadget_nodes
           << " solve_ms=" << rows[k].solve_ms;
    if (k > 0) {
      detail << " node_ratio="
             << static_cast<double>(rows[k].gadget_nodes) /
                    rows[k - 1].gadget_nodes;
      if (rows[k - 1].solve_ms > 0) {
        detail << " time_exponent="
               << std::log2(rows[k].solve_ms / rows[k - 1].solve_ms);
      }
    }
  }
  return {rows.size() == 3, detail.str()};
}

// Criterion 8: scale, transpose, negation and determinism properties.
Verdict Properties() {
  std::mt19937_64 rng(8008);
  int scale_bad = 0, transpose_bad = 0, negate_bad = 0, determinism_bad = 0;
  const int trials = 300;
  for (int trial = 0; trial < trials; ++trial) {
    GenSpec spec;
    spec.s = 1 + static_cast<int>(rng() % 4);
    spec.t = 1 + static_cast<int>(rng() % 4);
    spec.slack = static_cast<int>(rng() % 3);
    spec.seed = rng();
    ProblemInstance p = Generate(spec);
    const Cost base = *GadgetTotal(p);

    const Cost lambda = 1 + static_cast<Cost>(rng() % 1000);
    const auto scaled = GadgetTotal(ScaleCosts(p, lambda));
    scale_bad += !scaled || *scaled != lambda * base;

    const auto transposed = GadgetTotal(Transpose(p));
    transpose_bad += !transposed || *transposed != base;

    // Negating a nonnegative entry can only lower it; negating a negative
    // entry raises it, so those are flipped to their absolute value first.
    const int i = static_cast<int>(rng() % p.s);
    const int j = static_cast<int>(rng() % p.t);
    p.cost(i, j) = std::abs(p.cost(i, j));
    const Cost before = *GadgetTotal(p);
    p.cost(i, j) = -p.cost(i, j);
    const auto negated = GadgetTotal(p);
    negate_bad += !negated || *negated > before;

    // Same seed twice through the CLI layer: byte-identical instance text
    // and identical results apart from wall-clock timings.
    cli::GenOptions gen;
    gen.spec = spec;
    gen.stressed = trial % 2 == 1;
    std::ostringstream first, second, err;
    cli::CmdGen(gen, first, err);
    cli::CmdGen(gen, second, err);
    const ProblemInstance q = ParseInstanceText(first.str());
    const SolveOutcome a = SolveMmdc(q);
    const SolveOutcome b = SolveMmdc(q);
    const bool same_result =
        a.feasible() == b.feasible() &&
        (!a.report || a.report->result == b.report->result);
    determinism_bad += first.str() != second.str() || !same_result;
  }
  const int bad = scale_bad + transpose_bad + negate_bad + determinism_bad;
  return {bad == 0, std::to_string(trials) + " instances; failures: scale " +
                        std::to_string(scale_bad) + ", transpose " +
                        std::to_string(transpose_bad) + ", negation " +
                        std::to_string(negate_bad) + ", determinism " +
                        std::to_string(determinism_bad)};
}

}  // namespace
}  // namespace mmdc

int main(int argc, char** argv) {
  std::filesystem::path triage_dir = "triage";
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--triage-dir" && k + 1 < argc) {
      triage_dir = argv[++k];
    } else {
      std::cerr << "usage: " << argv[0] << " [--triage-dir DIR]\n";
      return 1;
    }
  }

  struct Criterion {
    const char* name;
    std::function<mmdc::Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1 small-instance equivalence", mmdc::SmallEquivalence},
      {"C2 medium gadget/flow cross-check", mmdc::MediumCrossCheck},
      {"C3 gadget size formulas", mmdc::SizeFormulas},
      {"C4 hungarian optimality", mmdc::HungarianOracle},
      {"C5 gamma offset fuzz", [&] { return mmdc::GammaFuzz(triage_dir); }},
      {"C6 infeasibility agreement", mmdc::InfeasibilityAgreement},
      {"C7 complexity diagnostic", mmdc::Complexity},
      {"C8 property suite", mmdc::Properties},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    mmdc::Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failed += !verdict.pass;
    std::printf("[%s] %s: %s (%.2fs)\n", verdict.pass ? "PASS" : "FAIL",
                c.name, verdict.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
