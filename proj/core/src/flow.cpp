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

#include "mmdc/flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace mmdc {

FlowNetwork BuildFlowNetwork(const ProblemInstance& instance) {
  if (auto error = Validate(instance)) throw InvalidInstance(*error);
  const int s = instance.s;
  const int t = instance.t;
  const auto a_node = [](int i) { return 2 + i; };
  const auto b_node = [s](int j) { return 2 + s + j; };

  FlowNetwork net;
  net.num_nodes = 2 + s + t;
  net.arcs.reserve(static_cast<std::size_t>(s) * t + s + t + 1);
  for (int i = 0; i < s; ++i) {
    net.arcs.push_back({0, a_node(i), instance.alpha[i], instance.alpha_cap[i], 0});
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) {
      net.arcs.push_back({a_node(i), b_node(j), 0, 1, instance.cost(i, j)});
    }
  }
  for (int j = 0; j < t; ++j) {
    net.arcs.push_back({b_node(j), 1, instance.beta[j], instance.beta_cap[j], 0});
  }
  const std::int64_t total_cap = std::accumulate(
      instance.alpha_cap.begin(), instance.alpha_cap.end(), std::int64_t{0});
  net.arcs.push_back({1, 0, 0, total_cap, 0});
  return net;
}

namespace {

// Residual graph with paired forward/backward edges (edge e ^ 1 is the
// reverse of e).
class Residual {
 public:
  explicit Residual(int nodes) : out_(nodes) {}

  int AddEdge(int from, int to, std::int64_t cap, Cost cost) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    out_[from].push_back(id);
    head_.push_back(from);
    cap_.push_back(0);
    cost_.push_back(-cost);
    out_[to].push_back(id + 1);
    return id;
  }

  std::int64_t pushed(int edge) const { return cap_[edge ^ 1]; }

  // Successive shortest paths from `source` to `sink`; returns the amount
  // routed. All residual costs must be nonnegative on entry.
  std::int64_t Route(int source, int sink, std::int64_t limit) {
    const int n = static_cast<int>(out_.size());
    constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
    std::vector<Cost> potential(n, 0), dist(n);
    std::vector<int> via(n);
    std::int64_t routed = 0;
    using Item = std::pair<Cost, int>;
    while (routed < limit) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(via.begin(), via.end(), -1);
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      dist[source] = 0;
      queue.emplace(0, source);
      while (!queue.empty()) {
        const auto [d, node] = queue.top();
        queue.pop();
        if (d != dist[node]) continue;
        for (int e : out_[node]) {
          if (cap_[e] == 0) continue;
          const int next = head_[e];
          const Cost nd = d + cost_[e] + potential[node] - potential[next];
          if (nd < dist[next]) {
            dist[next] = nd;
            via[next] = e;
            queue.emplace(nd, next);
          }
        }
      }
      if (dist[sink] == kInf) break;
      // Capping at dist[sink] keeps every residual reduced cost nonnegative,
      // including edges leaving nodes the search never reached.
      for (int v = 0; v < n; ++v) potential[v] += std::min(dist[v], dist[sink]);
      std::int64_t amount = limit - routed;
      for (int v = sink; v != source; v = head_[via[v] ^ 1]) {
        amount = std::min(amount, cap_[via[v]]);
      }
      for (int v = sink; v != source; v = head_[via[v] ^ 1]) {
        cap_[via[v]] -= amount;
        cap_[via[v] ^ 1] += amount;
      }
      routed += amount;
    }
    return routed;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> head_;
  std::vector<std::int64_t> cap_;
  std::vector<Cost> cost_;
};

}  // namespace

std::optional<Circulation> MinCostCirculation(const FlowNetwork& network) {
  const int n = network.num_nodes;
  const int super_source = n;
  const int super_sink = n + 1;
  Residual residual(n + 2);

  std::vector<std::int64_t> base(network.arcs.size());
  std::vector<std::int64_t> excess(n, 0);
  std::vector<int> edge_of(network.arcs.size());
  Cost cost = 0;
  for (std::size_t k = 0; k < network.arcs.size(); ++k) {
    const FlowArc& arc = network.arcs[k];
    if (arc.lower > arc.upper) return std::nullopt;
    if (arc.cost < 0) {
      // Saturated; the residual runs backwards at positive cost.
      base[k] = arc.upper;
      edge_of[k] = residual.AddEdge(arc.head, arc.tail, arc.upper - arc.lower,
                                    -arc.cost);
    } else {
      base[k] = arc.lower;
      edge_of[k] = residual.AddEdge(arc.tail, arc.head, arc.upper - arc.lower,
                                    arc.cost);
    }
    excess[arc.head] += base[k];
    excess[arc.tail] -= base[k];
    cost += CheckedMul(base[k], arc.cost, "circulation cost");
  }

  std::int64_t required = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      residual.AddEdge(super_source, v, excess[v], 0);
      required += excess[v];
    } else if (excess[v] < 0) {
      residual.AddEdge(v, super_sink, -excess[v], 0);
    }
  }
  if (residual.Route(super_source, super_sink, required) != required) {
    return std::nullopt;
  }

  Circulation out;
  out.flow.resize(network.arcs.size());
  for (std::size_t k = 0; k < network.arcs.size(); ++k) {
    const FlowArc& arc = network.arcs[k];
    const std::int64_t moved = residual.pushed(edge_of[k]);
    out.flow[k] = arc.cost < 0 ? base[k] - moved : base[k] + moved;
    cost += (arc.cost < 0 ? -moved : moved) * arc.cost;
  }
  out.cost = cost;
  return out;
}

bool FlowFeasible(const ProblemInstance& instance) {
  return MinCostCirculation(BuildFlowNetwork(instance)).has_value();
}

std::optional<MatchResult> FlowMinCost(const ProblemInstance& instance) {
  const FlowNetwork network = BuildFlowNetwork(instance);
  const auto circulation = MinCostCirculation(network);
  if (!circulation) return std::nullopt;

  MatchResult result;
  const std::size_t first_pair_arc = instance.s;
  for (int i = 0; i < instance.s; ++i) {
    for (int j = 0; j < instance.t; ++j) {
      const std::size_t k =
          first_pair_arc + static_cast<std::size_t>(i) * instance.t + j;
      if (circulation->flow[k] == 1) result.pairs.emplace_back(i, j);
    }
  }
  result.total_cost = PairCost(instance, result.pairs);
  if (result.total_cost != circulation->cost) {
    throw AssertionFailure("circulation cost disagrees with its pair arcs");
  }
  return result;
}

}  // namespace mmdc
