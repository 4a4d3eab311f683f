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

#include "mmdc/hungarian.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mmdc {

namespace {

// Potentials stay within a few multiples of n * max|w|; reject anything
// that could push them out of range.
void CheckHeadroom(int n, Cost max_abs) {
  const Cost step = CheckedAdd(max_abs, 1, "weight headroom");
  CheckedMul(CheckedMul(8, std::max(n, 1), "weight headroom"), step,
             "weight headroom");
}

}  // namespace

WeightMatrix::WeightMatrix(int n, std::vector<Cost> data,
                           std::optional<Cost> big_threshold)
    : n_(n), data_(std::move(data)), big_threshold_(big_threshold) {
  if (n_ < 0 || data_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("weight matrix must be n x n");
  }
  Cost max_abs = 0;
  for (Cost w : data_) {
    if (w == std::numeric_limits<Cost>::min()) {
      throw OverflowRisk("weight magnitude too large");
    }
    max_abs = std::max(max_abs, w < 0 ? -w : w);
  }
  CheckHeadroom(n_, max_abs);
}

WeightMatrix WeightMatrix::FromRows(
    const std::vector<std::vector<Cost>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Cost> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("weight matrix must be square");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return WeightMatrix(n, std::move(data));
}

Cost BigWeight(int n, Cost max_abs) {
  const Cost twice_n = CheckedMul(2, n, "big weight");
  return CheckedAdd(
      CheckedMul(twice_n, CheckedAdd(max_abs, 1, "big weight"), "big weight"),
      1, "big weight");
}

WeightMatrix Materialize(const GadgetGraph& gadget) {
  const int n = gadget.n();
  const Cost big = BigWeight(n, gadget.max_abs_weight());
  std::vector<Cost> data(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      data[static_cast<std::size_t>(u) * n + v] =
          gadget.weight(u, v).value_or(big);
    }
  }
  return WeightMatrix(n, std::move(data), big);
}

Assignment SolveAssignment(const WeightMatrix& m) {
  const int n = m.n();
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

  // Rows and columns are 1-based here; column 0 is the virtual root of each
  // augmenting search and row_of[0] the row being inserted.
  std::vector<Cost> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    Cost row_min = kInf;
    for (int j = 0; j < n; ++j) row_min = std::min(row_min, m(i - 1, j));
    u[i] = row_min;
  }

  std::vector<Cost> min_slack(n + 1);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const int row = row_of[col];
      Cost delta = kInf;
      int next = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Cost slack = m(row - 1, j - 1) - u[row] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const int prev = way[col];
      row_of[col] = row_of[prev];
      col = prev;
    } while (col != 0);
  }

  Assignment out;
  out.match_of.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.match_of[row_of[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  for (int a = 0; a < n; ++a) out.total += m(a, out.match_of[a]);
  return out;
}

bool VerifyCertificate(const WeightMatrix& m, const Assignment& a) {
  const int n = m.n();
  if (static_cast<int>(a.match_of.size()) != n ||
      static_cast<int>(a.u.size()) != n || static_cast<int>(a.v.size()) != n) {
    return false;
  }
  std::vector<char> seen(n, 0);
  for (int b : a.match_of) {
    if (b < 0 || b >= n || seen[b]) return false;
    seen[b] = 1;
  }
  Cost primal = 0;
  Cost dual = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (a.u[r] + a.v[c] > m(r, c)) return false;
    }
    if (a.u[r] + a.v[a.match_of[r]] != m(r, a.match_of[r])) return false;
    primal += m(r, a.match_of[r]);
    dual += a.u[r] + a.v[r];
  }
  return primal == a.total && dual == a.total;
}

}  // namespace mmdc
