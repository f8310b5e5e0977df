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

#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "netinspect/exact.hpp"
#include "netinspect/heuristic.hpp"
#include "netinspect/payoff.hpp"
#include "oracles.hpp"

namespace netinspect {
namespace {

using testing::TestRng;

TEST_CASE("worst case of an all-unplaced strategy is the attack budget") {
  GameInstance g = GameInstance::create(
      {"v1", "v2"}, {"e1", "e2", "e3", "e4"},
      {{"e1", "e2"}, {"e3", "e4"}}, {0.9, 0.4}, 3);
  InspectionStrategy idle =
      InspectionStrategy::pure(SensorPositioning::all_unplaced(2));
  auto [value, plan] = worst_case_evaluation(g, idle);
  CHECK(value == 3.0);
  CHECK(plan.size() == 3);
  // Ties resolve toward the lowest component indices.
  CHECK(plan.targets.contains(0));
  CHECK(plan.targets.contains(1));
  CHECK(plan.targets.contains(2));
}

TEST_CASE("worst case of the example-2 equilibrium strategy is the value") {
  GameInstance g = testing::example2_instance();
  DisjointProfile profile = make_disjoint_profile(g);
  InspectionStrategy sigma1 = build_cycling_inspection(g, profile);
  auto [value, plan] = worst_case_evaluation(g, sigma1);
  CHECK(std::abs(value - 5.4) <= 1e-12);
  CHECK(plan.size() == g.attack_budget());
}

TEST_CASE("greedy worst case equals brute-force enumeration exactly") {
  TestRng rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    GameInstance g = testing::random_overlapping_instance(rng);
    InspectionStrategy sigma1 = testing::random_inspection(g, rng, 3);
    auto [value, plan] = worst_case_evaluation(g, sigma1);
    CHECK(std::abs(value - testing::oracle_worst_case(g, sigma1)) <= 1e-12);
    CHECK(std::abs(payoff(g, sigma1, AttackStrategy::pure(plan)) - value) <=
          1e-12);
  }
}

TEST_CASE("heuristic pipeline on figure 1 with a single attack resource") {
  GameInstance g = testing::figure1_instance(/*attack_budget=*/1);
  HeuristicOutcome outcome = solve_heuristic(g);

  CHECK(outcome.cover.optimal);
  CHECK(outcome.cover.size() == 4);
  // Block sizes (3,3,2,1) and b2 = 1 give k* = 4.
  CHECK(outcome.surrogate.k_star == 4);
  CHECK(outcome.surrogate.ordered_nodes ==
        std::vector<NodeIndex>{*g.find_node("v1"), *g.find_node("v4"),
                               *g.find_node("v3"), *g.find_node("v2")});
  REQUIRE(outcome.strategy.support().size() == 4);
  for (const auto& atom : outcome.strategy.support()) {
    CHECK(atom.probability == 0.25);
    CHECK(atom.action.placed_count() == 2);
  }
  CHECK(std::abs(outcome.worst_case -
                 testing::oracle_worst_case(g, outcome.strategy)) <= 1e-12);
  CHECK(outcome.idle_sensors == 0);
}

TEST_CASE("heuristic reduces to the closed form on disjoint instances") {
  TestRng rng(92);
  for (int trial = 0; trial < 10; ++trial) {
    GameInstance g = testing::random_disjoint_instance(rng);
    HeuristicOutcome outcome = solve_heuristic(g);
    DisjointProfile profile = make_disjoint_profile(g);
    CHECK(outcome.strategy == build_cycling_inspection(g, profile));
    CHECK(std::abs(outcome.worst_case - game_value_disjoint(g, profile)) <=
          1e-12);
  }
}

TEST_CASE("heuristic worst case never beats the exact value") {
  TestRng rng(93);
  for (int trial = 0; trial < 15; ++trial) {
    GameInstance g = testing::random_overlapping_instance(rng);
    HeuristicOutcome outcome = solve_heuristic(g);
    EquilibriumResult lp = solve_exact(g);
    CHECK(outcome.worst_case >= lp.value - 1e-9);
    // Condition (1) holds exactly on the surrogate blocks.
    CHECK(satisfies_detection_condition_exact(outcome.surrogate, g.num_sensors(),
                                     outcome.strategy));
  }
}

TEST_CASE("sensors beyond the cover stay unplaced and are flagged") {
  // Two hub nodes cover everything; four sensors exceed the cover size.
  GameInstance g = GameInstance::create(
      {"h1", "h2", "v3", "v4"}, {"e1", "e2", "e3", "e4"},
      {{"e1", "e2"}, {"e3", "e4"}, {"e1"}, {"e3"}},
      {0.9, 0.8, 0.7, 0.6}, 2);
  HeuristicOutcome outcome = solve_heuristic(g);
  CHECK(outcome.cover.size() == 2);
  CHECK(outcome.idle_sensors == 2);
  for (const auto& atom : outcome.strategy.support()) {
    CHECK(atom.action.placed_count() == 2);
    CHECK(atom.action.placements[2] == kUnplaced);
    CHECK(atom.action.placements[3] == kUnplaced);
  }
}

TEST_CASE("optimality gap arithmetic") {
  CHECK(optimality_gap(2.0, 2.0).gap == 0.0);
  GapReport two_percent = optimality_gap(1.02 * 2.5, 2.5);
  CHECK(two_percent.relative);
  CHECK(std::abs(two_percent.gap - 0.02) <= 1e-12);
  GapReport absolute = optimality_gap(0.3, 0.0);
  CHECK_FALSE(absolute.relative);
  CHECK(absolute.gap == 0.3);
}

TEST_CASE("heuristic gap against the LP on small overlapping instances") {
  TestRng rng(94);
  for (int trial = 0; trial < 8; ++trial) {
    GameInstance g = testing::random_overlapping_instance(rng);
    HeuristicOutcome outcome = solve_heuristic(g);
    EquilibriumResult lp = solve_exact(g);
    GapReport gap = optimality_gap(outcome.worst_case, lp.value);
    CHECK(gap.gap >= 0.0);
  }
}

}  // namespace
}  // namespace netinspect
