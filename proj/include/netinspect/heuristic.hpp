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

#ifndef NETINSPECT_HEURISTIC_HPP_
#define NETINSPECT_HEURISTIC_HPP_

#include <chrono>
#include <optional>
#include <utility>

#include "netinspect/disjoint.hpp"
#include "netinspect/set_cover.hpp"
#include "netinspect/types.hpp"

namespace netinspect {

struct HeuristicTimings {
  double cover_ms = 0.0;
  double partition_ms = 0.0;
  double construct_ms = 0.0;
  double evaluate_ms = 0.0;
};

struct HeuristicOutcome {
  InspectionStrategy strategy;
  CoverResult cover;
  Partition partition;
  DisjointProfile surrogate;  // profile over the partition blocks
  double worst_case = 0.0;    // max_T U(strategy, T) on the original instance
  AttackPlan worst_plan;
  // Sensors beyond the cover size stay unplaced; nonzero values flag idle
  // inspection capacity to the caller.
  int idle_sensors = 0;
  std::optional<double> gap_vs_value;
  HeuristicTimings timings;
};

// Cover -> greedy partition -> k* on the block sizes -> cycling inspection
// over the cover nodes, evaluated against the original overlapping instance.
HeuristicOutcome solve_heuristic(
    const GameInstance& instance,
    std::chrono::milliseconds cover_budget = std::chrono::milliseconds(10000));

// Exact worst case of a mixed inspection strategy: the attacker greedily
// takes the b2 components with the highest undetection probability (ties by
// component index). Exact by payoff additivity.
std::pair<double, AttackPlan> worst_case_evaluation(
    const GameInstance& instance, const InspectionStrategy& sigma1);

struct GapReport {
  double gap = 0.0;
  bool relative = true;  // false when exact_value == 0 (absolute gap)
};

// Relative excess of the heuristic worst case over the exact game value.
GapReport optimality_gap(double worst_case, double exact_value);

}  // namespace netinspect

#endif  // NETINSPECT_HEURISTIC_HPP_
