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

#include "mmdc/json_io.hpp"

#include <array>
#include <limits>
#include <string_view>

namespace mmdc {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kBoundKeys = {
    "s", "t", "alpha", "alpha_cap", "beta", "beta_cap"};
constexpr std::array<std::string_view, 4> kPointKeys = {
    "points_a", "points_b", "metric", "scale"};

bool IsOneOf(std::string_view key, auto const& keys) {
  for (std::string_view k : keys) {
    if (k == key) return true;
  }
  return false;
}

const json& Require(const json& doc, std::string_view key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw FormatError("missing key \"" + std::string(key) + "\"");
  }
  return *it;
}

std::int64_t AsInteger(const json& value, std::string_view what) {
  if (!value.is_number_integer()) {
    throw FormatError(std::string(what) + " must be an integer");
  }
  return value.get<std::int64_t>();
}

int AsInt(const json& value, std::string_view what) {
  const std::int64_t v = AsInteger(value, what);
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw FormatError(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> IntArray(const json& doc, std::string_view key, int size) {
  const json& value = Require(doc, key);
  if (!value.is_array() || static_cast<int>(value.size()) != size) {
    throw FormatError("\"" + std::string(key) + "\" must be an array of " +
                      std::to_string(size) + " integers");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (const json& v : value) out.push_back(AsInt(v, key));
  return out;
}

std::vector<Point> PointArray(const json& doc, std::string_view key,
                              int size) {
  const json& value = Require(doc, key);
  if (!value.is_array() || static_cast<int>(value.size()) != size) {
    throw FormatError("\"" + std::string(key) + "\" must list " +
                      std::to_string(size) + " points");
  }
  std::vector<Point> out;
  for (const json& p : value) {
    if (!p.is_array()) throw FormatError("points must be arrays of numbers");
    Point point;
    for (const json& x : p) {
      if (!x.is_number()) throw FormatError("coordinates must be numbers");
      point.push_back(x.get<double>());
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace

ProblemInstance ParseInstance(const json& doc) {
  if (!doc.is_object()) throw FormatError("instance must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "cost" && !IsOneOf(key, kBoundKeys) &&
        !IsOneOf(key, kPointKeys)) {
      throw FormatError("unknown key \"" + key + "\"");
    }
  }
  const int s = AsInt(Require(doc, "s"), "s");
  const int t = AsInt(Require(doc, "t"), "t");
  if (s < 1 || t < 1) throw FormatError("s and t must be at least 1");

  Bounds bounds{IntArray(doc, "alpha", s), IntArray(doc, "alpha_cap", s),
                IntArray(doc, "beta", t), IntArray(doc, "beta_cap", t)};

  const bool has_cost = doc.contains("cost");
  int point_keys = 0;
  for (std::string_view k : kPointKeys) point_keys += doc.contains(k) ? 1 : 0;
  if (has_cost == (point_keys > 0)) {
    throw FormatError(
        "exactly one of \"cost\" or the point keys must be present");
  }

  ProblemInstance instance;
  if (has_cost) {
    const json& cost = doc["cost"];
    if (!cost.is_array() || static_cast<int>(cost.size()) != s) {
      throw FormatError("\"cost\" must have s rows");
    }
    instance.s = s;
    instance.t = t;
    instance.cost = CostMatrix(s, t);
    for (int i = 0; i < s; ++i) {
      if (!cost[i].is_array() || static_cast<int>(cost[i].size()) != t) {
        throw FormatError("\"cost\" rows must have t entries");
      }
      for (int j = 0; j < t; ++j) instance.cost(i, j) = AsInteger(cost[i][j], "cost");
    }
    instance.alpha = std::move(bounds.alpha);
    instance.alpha_cap = std::move(bounds.alpha_cap);
    instance.beta = std::move(bounds.beta);
    instance.beta_cap = std::move(bounds.beta_cap);
  } else {
    if (point_keys != static_cast<int>(kPointKeys.size())) {
      throw FormatError("point form needs points_a, points_b, metric, scale");
    }
    const json& metric_name = doc["metric"];
    if (!metric_name.is_string()) throw FormatError("metric must be a string");
    const auto metric = ParseMetric(metric_name.get<std::string>());
    if (!metric) throw FormatError("unknown metric");
    const std::int64_t scale = AsInteger(doc["scale"], "scale");
    if (scale < 1) throw FormatError("scale must be at least 1");
    const std::vector<Point> a = PointArray(doc, "points_a", s);
    const std::vector<Point> b = PointArray(doc, "points_b", t);
    instance = FromPoints(a, b, *metric, scale, std::move(bounds));
  }
  if (auto error = Validate(instance)) throw InvalidInstance(*error);
  return instance;
}

ProblemInstance ParseInstanceText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return ParseInstance(doc);
}

nlohmann::ordered_json InstanceToJson(const ProblemInstance& instance) {
  nlohmann::ordered_json doc;
  doc["s"] = instance.s;
  doc["t"] = instance.t;
  doc["alpha"] = instance.alpha;
  doc["alpha_cap"] = instance.alpha_cap;
  doc["beta"] = instance.beta;
  doc["beta_cap"] = instance.beta_cap;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < instance.s; ++i) {
    const auto row = instance.cost.row(i);
    rows.push_back(std::vector<Cost>(row.begin(), row.end()));
  }
  doc["cost"] = std::move(rows);
  return doc;
}

nlohmann::ordered_json ResultToJson(const std::optional<MatchResult>& result,
                                    int gadget_nodes,
                                    const PhaseTimings& timings) {
  nlohmann::ordered_json doc;
  doc["feasible"] = result.has_value();
  auto pairs = nlohmann::ordered_json::array();
  if (result) {
    for (const auto& [i, j] : result->pairs) pairs.push_back({i, j});
  }
  doc["pairs"] = std::move(pairs);
  doc["total_cost"] = result ? nlohmann::ordered_json(result->total_cost)
                             : nlohmann::ordered_json(nullptr);
  doc["gadget_nodes"] = gadget_nodes;
  doc["phase_ms"] = {{"build", timings.build_ms},
                     {"solve", timings.solve_ms},
                     {"extract", timings.extract_ms}};
  return doc;
}

}  // namespace mmdc
