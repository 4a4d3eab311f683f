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

#include "mmdc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mmdc {

CostMatrix::CostMatrix(int rows, int cols, Cost fill)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {}

CostMatrix CostMatrix::FromRows(const std::vector<std::vector<Cost>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  CostMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw InvalidInstance({ValidationError::Kind::kBadDimensions});
    }
    std::copy(rows[i].begin(), rows[i].end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(i) * c);
  }
  return m;
}

Cost CostMatrix::Min() const {
  return *std::min_element(data_.begin(), data_.end());
}

CostMatrix CostMatrix::Transposed() const {
  CostMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::string ValidationError::Message() const {
  const char* side_name = side == Side::kA ? "A" : "B";
  std::ostringstream out;
  switch (kind) {
    case Kind::kBadDimensions:
      out << "bad dimensions";
      break;
    case Kind::kNegativeDemand:
      out << "negative demand at " << side_name << "[" << i << "]";
      break;
    case Kind::kDemandExceedsCapacity:
      out << "demand exceeds capacity at " << side_name << "[" << i << "]";
      break;
    case Kind::kCapacityExceedsPartnerCount:
      out << "capacity exceeds number of possible partners at " << side_name
          << "[" << i << "]";
      break;
    case Kind::kCostOutOfRange:
      out << "cost out of range at (" << i << ", " << j << ")";
      break;
  }
  return out.str();
}

namespace {

std::optional<ValidationError> CheckBounds(Side side,
                                           const std::vector<int>& demand,
                                           const std::vector<int>& capacity,
                                           int partners) {
  using Kind = ValidationError::Kind;
  for (int i = 0; i < static_cast<int>(demand.size()); ++i) {
    if (demand[i] < 0) return ValidationError{Kind::kNegativeDemand, side, i};
    if (demand[i] > capacity[i]) {
      return ValidationError{Kind::kDemandExceedsCapacity, side, i};
    }
    if (capacity[i] > partners) {
      return ValidationError{Kind::kCapacityExceedsPartnerCount, side, i};
    }
  }
  return std::nullopt;
}

std::int64_t Sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

std::optional<ValidationError> Validate(const ProblemInstance& instance,
                                        Cost cost_limit) {
  using Kind = ValidationError::Kind;
  const int s = instance.s;
  const int t = instance.t;
  const auto sized = [](const std::vector<int>& v, int n) {
    return static_cast<int>(v.size()) == n;
  };
  if (s < 1 || t < 1 || instance.cost.rows() != s ||
      instance.cost.cols() != t || !sized(instance.alpha, s) ||
      !sized(instance.alpha_cap, s) || !sized(instance.beta, t) ||
      !sized(instance.beta_cap, t)) {
    return ValidationError{Kind::kBadDimensions};
  }
  if (auto e = CheckBounds(Side::kA, instance.alpha, instance.alpha_cap, t)) {
    return e;
  }
  if (auto e = CheckBounds(Side::kB, instance.beta, instance.beta_cap, s)) {
    return e;
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) {
      const Cost c = instance.cost(i, j);
      if (c > cost_limit || c < -cost_limit) {
        return ValidationError{Kind::kCostOutOfRange, Side::kA, i, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<InfeasibleReason> NecessaryFeasibility(
    const ProblemInstance& instance) {
  if (Sum(instance.alpha) > Sum(instance.beta_cap)) {
    return InfeasibleReason::kADemandExceedsBCapacity;
  }
  if (Sum(instance.beta) > Sum(instance.alpha_cap)) {
    return InfeasibleReason::kBDemandExceedsACapacity;
  }
  return std::nullopt;
}

std::string ToString(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::kADemandExceedsBCapacity:
      return "total A demand exceeds total B capacity";
    case InfeasibleReason::kBDemandExceedsACapacity:
      return "total B demand exceeds total A capacity";
  }
  return "unknown";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "manhattan") return Metric::kManhattan;
  if (name == "chebyshev") return Metric::kChebyshev;
  return std::nullopt;
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kManhattan:
      return "manhattan";
    case Metric::kChebyshev:
      return "chebyshev";
  }
  return "unknown";
}

namespace {

long double Distance(const Point& a, const Point& b, Metric metric) {
  long double acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const long double d =
        std::fabs(static_cast<long double>(a[k]) - static_cast<long double>(b[k]));
    switch (metric) {
      case Metric::kEuclidean:
        acc += d * d;
        break;
      case Metric::kManhattan:
        acc += d;
        break;
      case Metric::kChebyshev:
        acc = std::max(acc, d);
        break;
    }
  }
  return metric == Metric::kEuclidean ? std::sqrt(acc) : acc;
}

}  // namespace

ProblemInstance FromPoints(std::span<const Point> points_a,
                           std::span<const Point> points_b, Metric metric,
                           std::int64_t scale, Bounds bounds) {
  using Kind = ValidationError::Kind;
  if (scale < 1 || points_a.empty() || points_b.empty()) {
    throw InvalidInstance({Kind::kBadDimensions});
  }
  const std::size_t dim = points_a.front().size();
  const auto well_formed = [dim](const Point& p) {
    return p.size() == dim &&
           std::all_of(p.begin(), p.end(),
                       [](double x) { return std::isfinite(x); });
  };
  if (!std::all_of(points_a.begin(), points_a.end(), well_formed) ||
      !std::all_of(points_b.begin(), points_b.end(), well_formed)) {
    throw InvalidInstance({Kind::kBadDimensions});
  }

  ProblemInstance out;
  out.s = static_cast<int>(points_a.size());
  out.t = static_cast<int>(points_b.size());
  out.cost = CostMatrix(out.s, out.t);
  for (int i = 0; i < out.s; ++i) {
    for (int j = 0; j < out.t; ++j) {
      const long double scaled =
          Distance(points_a[i], points_b[j], metric) * scale;
      if (!(scaled <= static_cast<long double>(kCostLimit))) {
        throw InvalidInstance({Kind::kCostOutOfRange, Side::kA, i, j});
      }
      out.cost(i, j) = std::llroundl(scaled);
    }
  }
  out.alpha = std::move(bounds.alpha);
  out.alpha_cap = std::move(bounds.alpha_cap);
  out.beta = std::move(bounds.beta);
  out.beta_cap = std::move(bounds.beta_cap);
  return out;
}

ProblemInstance Transpose(const ProblemInstance& instance) {
  ProblemInstance out;
  out.s = instance.t;
  out.t = instance.s;
  out.cost = instance.cost.Transposed();
  out.alpha = instance.beta;
  out.alpha_cap = instance.beta_cap;
  out.beta = instance.alpha;
  out.beta_cap = instance.alpha_cap;
  return out;
}

ProblemInstance ScaleCosts(const ProblemInstance& instance, Cost factor) {
  ProblemInstance out = instance;
  for (int i = 0; i < out.cost.rows(); ++i) {
    for (int j = 0; j < out.cost.cols(); ++j) {
      out.cost(i, j) = CheckedMul(out.cost(i, j), factor, "cost scaling");
    }
  }
  return out;
}

Cost PairCost(const ProblemInstance& instance, std::span<const Pair> pairs) {
  Cost total = 0;
  for (const auto& [i, j] : pairs) total += instance.cost(i, j);
  return total;
}

std::optional<std::string> CheckMatchResult(const ProblemInstance& instance,
                                            const MatchResult& result) {
  std::vector<int> a_count(instance.s, 0);
  std::vector<int> b_count(instance.t, 0);
  for (std::size_t k = 0; k < result.pairs.size(); ++k) {
    const auto [i, j] = result.pairs[k];
    if (i < 0 || i >= instance.s || j < 0 || j >= instance.t) {
      return "pair index out of range";
    }
    if (k > 0 && !(result.pairs[k - 1] < result.pairs[k])) {
      return "pairs not strictly increasing (duplicate or unsorted)";
    }
    ++a_count[i];
    ++b_count[j];
  }
  if (PairCost(instance, result.pairs) != result.total_cost) {
    return "total_cost differs from the sum of pair costs";
  }
  for (int i = 0; i < instance.s; ++i) {
    if (a_count[i] < instance.alpha[i] || a_count[i] > instance.alpha_cap[i]) {
      return "partner count of a[" + std::to_string(i) + "] = " +
             std::to_string(a_count[i]) + " outside its bounds";
    }
  }
  for (int j = 0; j < instance.t; ++j) {
    if (b_count[j] < instance.beta[j] || b_count[j] > instance.beta_cap[j]) {
      return "partner count of b[" + std::to_string(j) + "] = " +
             std::to_string(b_count[j]) + " outside its bounds";
    }
  }
  return std::nullopt;
}

}  // namespace mmdc
