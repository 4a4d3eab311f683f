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

// Square bipartite gadget whose minimum-weight perfect matching encodes an
// MMDC optimum.
//
// S side, in canonical order:
//   MainA(i, k)   k < alpha_i                copies of a_i that must be used
//   ExtraA(i, k)  k < alpha_cap_i - alpha_i  optional copies of a_i
//   XDummy(j, k)  k < beta_cap_j - beta_j    absorb b_j's optional slots
//   WDummy(j, k)  k < s - beta_cap_j         block b_j's surplus copies
//   YNode(k)      only when sum(alpha_cap) < sum(beta)
// T side:
//   BCopy(j, i)   copy of b_j reserved for a_i, ordered i-major
//   YNode(k)      only when sum(alpha_cap) > sum(beta)
//
// Finite edges: MainA/ExtraA(i) -- BCopy(*, i) at delta(a_i, b_j);
// XDummy(j) -- BCopy(j, *) at gamma1; WDummy(j) -- BCopy(j, *) at 0;
// YNode(S) -- every BCopy at 0; ExtraA -- YNode(T) at 0;
// XDummy -- YNode(T) at gamma2. Everything else is missing.
//
// With the compensator on T, the weight of a perfect matching whose main
// edges form L is R * c(L) + (gamma2 - gamma1) * |L| + const, so the pair
// count leaks into the objective unless gamma2 - gamma1 is small relative to
// one cost unit. The gadget therefore stores main-edge weights at a
// resolution R (delta * R) chosen so that (gamma2 - gamma1) * |Y| < R.
// R = 1 reproduces the plain construction.

#ifndef MMDC_GADGET_HPP_
#define MMDC_GADGET_HPP_

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mmdc/instance.hpp"

namespace mmdc {

struct NodeTag {
  enum class Kind { kMainA, kExtraA, kXDummy, kWDummy, kBCopy, kYNode };
  Kind kind;
  // MainA/ExtraA: index of a_i. XDummy/WDummy/BCopy: index of b_j.
  // YNode: its position in Y.
  int point = 0;
  // MainA/ExtraA/XDummy/WDummy: copy number within the family.
  // BCopy: index i of the Bset the copy belongs to. YNode: unused.
  int copy = 0;

  static NodeTag MainA(int i, int k) { return {Kind::kMainA, i, k}; }
  static NodeTag ExtraA(int i, int k) { return {Kind::kExtraA, i, k}; }
  static NodeTag XDummy(int j, int k) { return {Kind::kXDummy, j, k}; }
  static NodeTag WDummy(int j, int k) { return {Kind::kWDummy, j, k}; }
  static NodeTag BCopy(int j, int i) { return {Kind::kBCopy, j, i}; }
  static NodeTag YNode(int k) { return {Kind::kYNode, k, 0}; }

  bool IsMainA() const {
    return kind == Kind::kMainA || kind == Kind::kExtraA;
  }

  friend bool operator==(const NodeTag&, const NodeTag&) = default;
};

std::string ToString(const NodeTag& tag);
std::ostream& operator<<(std::ostream& os, const NodeTag& tag);

enum class YSide { kNone, kS, kT };

std::string_view ToString(YSide side);

// gamma1 = gamma - low, gamma2 = gamma - high; requires low > high >= 1.
struct GammaOffsets {
  Cost low = 2;
  Cost high = 1;
};

struct Gammas {
  Cost gamma;   // minimum pairing cost
  Cost gamma1;  // weight of X_j -- B_j edges
  Cost gamma2;  // weight of X_j -- Y edges (compensator on T)
};

// gamma = min cost; gamma1 = gamma - offsets.low; gamma2 = gamma - offsets.high.
Gammas ChooseGammas(const ProblemInstance& instance,
                    GammaOffsets offsets = {});

// Weight of the S-side node `u` against the T-side node `v`, or nullopt when
// the gadget has no such edge. The compensator's side is implied by which
// argument is a YNode.
std::optional<Cost> EdgeWeight(const NodeTag& u, const NodeTag& v,
                               const ProblemInstance& instance,
                               const Gammas& gammas);

struct SideCounts {
  int n;
  YSide y_side;
  int y_size;
};

SideCounts ComputeSideCounts(const ProblemInstance& instance);

struct BuildOptions {
  GammaOffsets offsets;
  // Main-edge weight multiplier. 0 selects the smallest value that keeps the
  // pair count out of the objective.
  Cost resolution = 0;
};

// Resolution selected by BuildOptions{.resolution = 0}.
Cost AutoResolution(const ProblemInstance& instance, GammaOffsets offsets);

class GadgetGraph {
 public:
  int n() const { return n_; }
  const std::vector<NodeTag>& s_tags() const { return s_tags_; }
  const std::vector<NodeTag>& t_tags() const { return t_tags_; }
  std::optional<Cost> weight(int u, int v) const {
    const Cost w = weights_[static_cast<std::size_t>(u) * n_ + v];
    if (w == kMissing) return std::nullopt;
    return w;
  }
  // Gammas in gadget units (already multiplied by resolution()).
  const Gammas& gammas() const { return gammas_; }
  YSide y_side() const { return y_side_; }
  int y_size() const { return y_size_; }
  Cost resolution() const { return resolution_; }
  // Largest |finite weight|.
  Cost max_abs_weight() const { return max_abs_weight_; }

  friend GadgetGraph Build(const ProblemInstance&, const BuildOptions&);

 private:
  static constexpr Cost kMissing = std::numeric_limits<Cost>::min();

  int n_ = 0;
  std::vector<NodeTag> s_tags_;
  std::vector<NodeTag> t_tags_;
  std::vector<Cost> weights_;
  Gammas gammas_{};
  YSide y_side_ = YSide::kNone;
  int y_size_ = 0;
  Cost resolution_ = 1;
  Cost max_abs_weight_ = 0;
};

// Throws InvalidInstance if the instance fails Validate, std::invalid_argument
// on bad offsets, OverflowRisk if scaled weights leave 64-bit range.
GadgetGraph Build(const ProblemInstance& instance,
                  const BuildOptions& options = {});

// Text listing: "side index tag" per node, then "u v weight" per finite
// edge, both in canonical order.
void DumpGadget(const GadgetGraph& gadget, std::ostream& os);

}  // namespace mmdc

#endif  // MMDC_GADGET_HPP_
