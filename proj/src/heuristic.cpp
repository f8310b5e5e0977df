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

#include "netinspect/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netinspect/payoff.hpp"

namespace netinspect {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

std::pair<double, AttackPlan> worst_case_evaluation(
    const GameInstance& instance, const InspectionStrategy& sigma1) {
  std::vector<double> u = undetection_marginals(instance, sigma1);
  std::vector<int> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return u[a] > u[b]; });

  const int b2 = instance.attack_budget();
  AttackPlan plan{ComponentSet(instance.num_components())};
  double value = 0.0;
  for (int i = 0; i < b2; ++i) {
    plan.targets.insert(order[i]);
    value += u[order[i]];
  }
  return {value, plan};
}

HeuristicOutcome solve_heuristic(const GameInstance& instance,
                                 std::chrono::milliseconds cover_budget) {
  HeuristicTimings timings;

  auto t0 = Clock::now();
  CoverResult cover = min_set_cover(instance, CoverMode::kExact, cover_budget);
  timings.cover_ms = ms_since(t0);

  t0 = Clock::now();
  Partition partition = greedy_partition(instance, cover);
  timings.partition_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<std::pair<NodeIndex, int64_t>> blocks;
  blocks.reserve(partition.ordered_blocks.size());
  for (const auto& [v, set] : partition.ordered_blocks) {
    blocks.emplace_back(v, set.count());
  }
  DisjointProfile surrogate =
      make_profile_from_blocks(std::move(blocks), instance.attack_budget());
  InspectionStrategy strategy = build_cycling_inspection(instance, surrogate);
  timings.construct_ms = ms_since(t0);

  t0 = Clock::now();
  auto [worst_case, worst_plan] = worst_case_evaluation(instance, strategy);
  timings.evaluate_ms = ms_since(t0);

  const int idle = std::max(0, instance.num_sensors() - cover.size());
  HeuristicOutcome outcome{std::move(strategy), std::move(cover),
                           std::move(partition), std::move(surrogate),
                           worst_case,           std::move(worst_plan),
                           idle,                 std::nullopt,
                           timings};
  return outcome;
}

GapReport optimality_gap(double worst_case, double exact_value) {
  if (exact_value == 0.0) {
    return GapReport{worst_case, false};
  }
  double gap = (worst_case - exact_value) / exact_value;
  return GapReport{std::max(0.0, gap), true};
}

}  // namespace netinspect
