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

#include "mmdc/gadget.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mmdc {

std::string ToString(const NodeTag& tag) {
  std::ostringstream out;
  out << tag;
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const NodeTag& tag) {
  using Kind = NodeTag::Kind;
  switch (tag.kind) {
    case Kind::kMainA:
      return os << "MainA(" << tag.point << "," << tag.copy << ")";
    case Kind::kExtraA:
      return os << "ExtraA(" << tag.point << "," << tag.copy << ")";
    case Kind::kXDummy:
      return os << "XDummy(" << tag.point << "," << tag.copy << ")";
    case Kind::kWDummy:
      return os << "WDummy(" << tag.point << "," << tag.copy << ")";
    case Kind::kBCopy:
      return os << "BCopy(" << tag.point << "," << tag.copy << ")";
    case Kind::kYNode:
      return os << "YNode(" << tag.point << ")";
  }
  return os;
}

std::string_view ToString(YSide side) {
  switch (side) {
    case YSide::kNone:
      return "none";
    case YSide::kS:
      return "S";
    case YSide::kT:
      return "T";
  }
  return "?";
}

Gammas ChooseGammas(const ProblemInstance& instance, GammaOffsets offsets) {
  const Cost gamma = instance.cost.Min();
  return {gamma, CheckedAdd(gamma, -offsets.low, "gamma1"),
          CheckedAdd(gamma, -offsets.high, "gamma2")};
}

std::optional<Cost> EdgeWeight(const NodeTag& u, const NodeTag& v,
                               const ProblemInstance& instance,
                               const Gammas& gammas) {
  using Kind = NodeTag::Kind;
  if (v.kind == Kind::kBCopy) {
    const int j = v.point;
    const int owner = v.copy;
    switch (u.kind) {
      case Kind::kMainA:
      case Kind::kExtraA:
        if (u.point == owner) return instance.cost(owner, j);
        return std::nullopt;
      case Kind::kXDummy:
        if (u.point == j) return gammas.gamma1;
        return std::nullopt;
      case Kind::kWDummy:
        if (u.point == j) return Cost{0};
        return std::nullopt;
      case Kind::kYNode:
        return Cost{0};
      case Kind::kBCopy:
        return std::nullopt;
    }
  }
  if (v.kind == Kind::kYNode) {
    if (u.kind == Kind::kExtraA) return Cost{0};
    if (u.kind == Kind::kXDummy) return gammas.gamma2;
  }
  return std::nullopt;
}

namespace {

std::int64_t Sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

SideCounts ComputeSideCounts(const ProblemInstance& instance) {
  const std::int64_t cap_a = Sum(instance.alpha_cap);
  const std::int64_t demand_b = Sum(instance.beta);
  const int st = instance.s * instance.t;
  if (cap_a < demand_b) {
    return {st, YSide::kS, static_cast<int>(demand_b - cap_a)};
  }
  if (cap_a > demand_b) {
    const int y = static_cast<int>(cap_a - demand_b);
    return {st + y, YSide::kT, y};
  }
  return {st, YSide::kNone, 0};
}

Cost AutoResolution(const ProblemInstance& instance, GammaOffsets offsets) {
  const SideCounts counts = ComputeSideCounts(instance);
  if (counts.y_side != YSide::kT) return 1;
  return CheckedAdd(CheckedMul(offsets.low - offsets.high, counts.y_size,
                               "resolution"),
                    1, "resolution");
}

GadgetGraph Build(const ProblemInstance& instance,
                  const BuildOptions& options) {
  if (auto error = Validate(instance)) throw InvalidInstance(*error);
  if (!(options.offsets.low > options.offsets.high &&
        options.offsets.high >= 1)) {
    throw std::invalid_argument("gamma offsets must satisfy low > high >= 1");
  }
  if (options.resolution < 0) {
    throw std::invalid_argument("resolution must be positive (0 = auto)");
  }

  const int s = instance.s;
  const int t = instance.t;
  const SideCounts counts = ComputeSideCounts(instance);

  GadgetGraph g;
  g.n_ = counts.n;
  g.y_side_ = counts.y_side;
  g.y_size_ = counts.y_size;
  g.resolution_ = options.resolution == 0
                      ? AutoResolution(instance, options.offsets)
                      : options.resolution;

  const ProblemInstance scaled = ScaleCosts(instance, g.resolution_);
  g.gammas_ = ChooseGammas(scaled, options.offsets);

  auto& S = g.s_tags_;
  auto& T = g.t_tags_;
  S.reserve(counts.n);
  T.reserve(counts.n);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < instance.alpha[i]; ++k) S.push_back(NodeTag::MainA(i, k));
  }
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < instance.alpha_cap[i] - instance.alpha[i]; ++k) {
      S.push_back(NodeTag::ExtraA(i, k));
    }
  }
  for (int j = 0; j < t; ++j) {
    for (int k = 0; k < instance.beta_cap[j] - instance.beta[j]; ++k) {
      S.push_back(NodeTag::XDummy(j, k));
    }
  }
  for (int j = 0; j < t; ++j) {
    for (int k = 0; k < s - instance.beta_cap[j]; ++k) {
      S.push_back(NodeTag::WDummy(j, k));
    }
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) T.push_back(NodeTag::BCopy(j, i));
  }
  auto& y_target = counts.y_side == YSide::kS ? S : T;
  for (int k = 0; k < counts.y_size; ++k) y_target.push_back(NodeTag::YNode(k));

  if (static_cast<int>(S.size()) != counts.n ||
      static_cast<int>(T.size()) != counts.n) {
    throw AssertionFailure("gadget sides are not balanced");
  }

  const auto n = static_cast<std::size_t>(counts.n);
  g.weights_.assign(n * n, GadgetGraph::kMissing);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (auto w = EdgeWeight(S[u], T[v], scaled, g.gammas_)) {
        g.weights_[u * n + v] = *w;
        g.max_abs_weight_ = std::max(g.max_abs_weight_, *w < 0 ? -*w : *w);
      }
    }
  }
  return g;
}

void DumpGadget(const GadgetGraph& gadget, std::ostream& os) {
  for (int u = 0; u < gadget.n(); ++u) {
    os << "S " << u << ' ' << gadget.s_tags()[u] << '\n';
  }
  for (int v = 0; v < gadget.n(); ++v) {
    os << "T " << v << ' ' << gadget.t_tags()[v] << '\n';
  }
  for (int u = 0; u < gadget.n(); ++u) {
    for (int v = 0; v < gadget.n(); ++v) {
      if (auto w = gadget.weight(u, v)) os << u << ' ' << v << ' ' << *w << '\n';
    }
  }
}

}  // namespace mmdc
