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

// Exact O(n^3) minimum-weight perfect matching on a complete square
// bipartite graph with signed integer weights, returning a dual certificate.

#ifndef MMDC_HUNGARIAN_HPP_
#define MMDC_HUNGARIAN_HPP_

#include <optional>
#include <vector>

#include "mmdc/gadget.hpp"
#include "mmdc/instance.hpp"

namespace mmdc {

class WeightMatrix {
 public:
  // `data` is row-major n x n. Throws OverflowRisk when the entries are too
  // large for exact potential arithmetic, std::invalid_argument on a size
  // mismatch.
  WeightMatrix(int n, std::vector<Cost> data,
               std::optional<Cost> big_threshold = std::nullopt);
  static WeightMatrix FromRows(const std::vector<std::vector<Cost>>& rows);

  int n() const { return n_; }
  Cost operator()(int u, int v) const {
    return data_[static_cast<std::size_t>(u) * n_ + v];
  }
  // Weight standing in for missing edges; any entry >= it is forbidden.
  std::optional<Cost> big_threshold() const { return big_threshold_; }
  bool IsForbidden(int u, int v) const {
    return big_threshold_ && (*this)(u, v) >= *big_threshold_;
  }

 private:
  int n_;
  std::vector<Cost> data_;
  std::optional<Cost> big_threshold_;
};

// BIG = 2 * n * (max_abs + 1) + 1: one BIG edge outweighs any difference
// between two all-finite perfect matchings.
Cost BigWeight(int n, Cost max_abs);

// Missing gadget edges become BigWeight(n, max |finite weight|).
WeightMatrix Materialize(const GadgetGraph& gadget);

struct Assignment {
  std::vector<int> match_of;  // S index -> T index
  Cost total = 0;
  std::vector<Cost> u;  // S potentials
  std::vector<Cost> v;  // T potentials
};

// Deterministic: among equal-slack columns the lowest index is taken.
Assignment SolveAssignment(const WeightMatrix& m);

// Checks bijectivity, dual feasibility u[a] + v[b] <= w(a, b), complementary
// slackness on matched pairs, and total == sum w == sum u + sum v.
bool VerifyCertificate(const WeightMatrix& m, const Assignment& a);

}  // namespace mmdc

#endif  // MMDC_HUNGARIAN_HPP_
