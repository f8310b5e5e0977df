// Copyright 2026 The netinspect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETINSPECT_IO_HPP_
#define NETINSPECT_IO_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netinspect/exact.hpp"
#include "netinspect/types.hpp"

namespace netinspect {

// Instance documents look like:
//
//   {
//     "components": ["e1", "e2"],
//     "nodes": [{"id": "v1", "monitors": ["e1", "e2"]}],
//     "sensors": [0.9, 0.5],
//     "attack_budget": 1
//   }
//
// Parsing yields a validated, canonicalized instance or an Error carrying a
// field-located machine-readable code.
GameInstance parse_instance_text(const std::string& text,
                                 const std::string& origin = "<string>");
GameInstance parse_instance_file(const std::string& path);
std::string serialize_instance(const GameInstance& instance);

// Strategy documents:
//
//   {"player": "defender",
//    "support": [{"action": [[1, "v4"], [2, "v3"]], "probability": 0.4}]}
//   {"player": "attacker",
//    "support": [{"action": ["e1", "e3"], "probability": 0.2}]}
//
// Defender actions list (sensor index, node id) pairs for placed sensors
// only; sensor indices are 1-based positions in the accuracy order.
struct ParsedStrategy {
  std::variant<InspectionStrategy, AttackStrategy> strategy;

  bool is_defender() const {
    return std::holds_alternative<InspectionStrategy>(strategy);
  }
  const InspectionStrategy& defender() const {
    return std::get<InspectionStrategy>(strategy);
  }
  const AttackStrategy& attacker() const {
    return std::get<AttackStrategy>(strategy);
  }
};

ParsedStrategy parse_strategy_text(const std::string& text,
                                   const GameInstance& instance,
                                   const std::string& origin = "<string>");
ParsedStrategy parse_strategy_file(const std::string& path,
                                   const GameInstance& instance);
std::string serialize_strategy(const GameInstance& instance,
                               const InspectionStrategy& sigma1);
std::string serialize_strategy(const GameInstance& instance,
                               const AttackStrategy& sigma2);

struct GenParams {
  uint64_t seed = 0;
  int nodes = 0;
  int components = 0;
  int sensors = 0;
  int attack_budget = 0;
  bool disjoint = false;
  double edge_prob = 0.3;  // random mode: P[node monitors component]
  double acc_min = 0.2;
  double acc_max = 1.0;
};

// Deterministic synthetic instances. Disjoint mode partitions the components
// into `nodes` nonempty sets; random mode samples monitoring pairs with
// probability edge_prob, then repairs coverage (orphan components get a
// random node) and empty monitoring sets (a random component).
GameInstance generate_instance(const GenParams& params);

// Instance with only the first b1 (most accurate) sensors kept.
GameInstance with_sensor_prefix(const GameInstance& instance, int b1);

struct GapCurveRow {
  int b1 = 0;
  double exact_value = 0.0;
  double worst_case = 0.0;
  double gap = 0.0;
  bool gap_relative = true;
  double enumerate_ms = 0.0;
  double lp_ms = 0.0;
  double cover_ms = 0.0;
  double partition_ms = 0.0;
  double construct_ms = 0.0;
  double evaluate_ms = 0.0;
};

struct GapCurve {
  std::vector<GapCurveRow> rows;

  static std::string csv_header();
  std::string to_csv() const;
};

// Exact-vs-heuristic sweep over sensor counts b1_lo..b1_hi (prefixes of the
// template instance's sensor list), with per-phase wall-clock times.
GapCurve gap_curve(const GameInstance& instance, int b1_lo, int b1_hi,
                   const EnumCaps& caps = {},
                   std::chrono::milliseconds cover_budget =
                       std::chrono::milliseconds(10000));

// NETINSPECT_TIME_BUDGET_MS, or 10000 when unset/invalid.
int64_t default_time_budget_ms();

}  // namespace netinspect

#endif  // NETINSPECT_IO_HPP_
