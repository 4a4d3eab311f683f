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

// Problem data for minimum-cost many-to-many matching with demands and
// capacities: two point sets A (s points) and B (t points), an exact integer
// pairing cost for every (a_i, b_j), and per-point [demand, capacity] bounds
// on the number of partners.

#ifndef MMDC_INSTANCE_HPP_
#define MMDC_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmdc/error.hpp"

namespace mmdc {

using Cost = std::int64_t;

// Largest admissible |cost|. Keeps big-M sentinels and n-term sums inside
// 64-bit signed arithmetic for desk-scale gadgets.
inline constexpr Cost kCostLimit = 1'000'000'000'000;

// Dense row-major s x t matrix of costs.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(int rows, int cols, Cost fill = 0);
  // Builds from nested rows; all rows must have the same length.
  static CostMatrix FromRows(const std::vector<std::vector<Cost>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cost operator()(int i, int j) const { return data_[Index(i, j)]; }
  Cost& operator()(int i, int j) { return data_[Index(i, j)]; }
  std::span<const Cost> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  Cost Min() const;
  CostMatrix Transposed() const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cost> data_;
};

struct ProblemInstance {
  int s = 0;
  int t = 0;
  CostMatrix cost;               // cost(i, j) = delta(a_i, b_j)
  std::vector<int> alpha;        // demand of a_i
  std::vector<int> alpha_cap;    // capacity of a_i
  std::vector<int> beta;         // demand of b_j
  std::vector<int> beta_cap;     // capacity of b_j

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

enum class Side { kA, kB };

struct ValidationError {
  enum class Kind {
    kBadDimensions,
    kNegativeDemand,
    kDemandExceedsCapacity,
    kCapacityExceedsPartnerCount,
    kCostOutOfRange,
  };
  Kind kind;
  Side side = Side::kA;
  int i = -1;  // point index (row index for kCostOutOfRange)
  int j = -1;  // column index, kCostOutOfRange only

  std::string Message() const;
  friend bool operator==(const ValidationError&,
                         const ValidationError&) = default;
};

class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(ValidationError error)
      : Error(error.Message()), error_(error) {}
  const ValidationError& error() const { return error_; }

 private:
  ValidationError error_;
};

// Returns the first violated invariant, scanning dimensions, then A-side
// bounds by index, then B-side bounds, then costs in row-major order.
std::optional<ValidationError> Validate(const ProblemInstance& instance,
                                        Cost cost_limit = kCostLimit);

enum class InfeasibleReason {
  kADemandExceedsBCapacity,
  kBDemandExceedsACapacity,
};

// Cheap counting conditions: sum(alpha) <= sum(beta_cap) and
// sum(beta) <= sum(alpha_cap). Passing does not imply feasibility; the
// complete decision is flow::Feasible.
std::optional<InfeasibleReason> NecessaryFeasibility(
    const ProblemInstance& instance);

std::string ToString(InfeasibleReason reason);

enum class Metric { kEuclidean, kManhattan, kChebyshev };

std::optional<Metric> ParseMetric(std::string_view name);
std::string_view MetricName(Metric metric);

using Point = std::vector<double>;

struct Bounds {
  std::vector<int> alpha;
  std::vector<int> alpha_cap;
  std::vector<int> beta;
  std::vector<int> beta_cap;
};

// cost(i, j) = round(scale * distance(a_i, b_j)), halves rounded away from
// zero. All later optimisation is exact with respect to these integers.
// Throws InvalidInstance (kCostOutOfRange) when a scaled distance exceeds
// kCostLimit and (kBadDimensions) on ragged or non-finite coordinates.
ProblemInstance FromPoints(std::span<const Point> points_a,
                           std::span<const Point> points_b, Metric metric,
                           std::int64_t scale, Bounds bounds);

// Swaps the roles of A and B.
ProblemInstance Transpose(const ProblemInstance& instance);

// Multiplies every cost by `factor`; throws OverflowRisk on overflow.
ProblemInstance ScaleCosts(const ProblemInstance& instance, Cost factor);

using Pair = std::pair<int, int>;

// Sum of cost(i, j) over `pairs`.
Cost PairCost(const ProblemInstance& instance, std::span<const Pair> pairs);

// A many-to-many matching: (i, j) pairs sorted lexicographically, each at
// most once.
struct MatchResult {
  std::vector<Pair> pairs;
  Cost total_cost = 0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Describes the first broken MatchResult invariant (out-of-range index,
// duplicate or unsorted pair, wrong total, partner count outside
// [demand, capacity]), or nullopt if the result is a valid matching.
std::optional<std::string> CheckMatchResult(const ProblemInstance& instance,
                                            const MatchResult& result);

}  // namespace mmdc

#endif  // MMDC_INSTANCE_HPP_
