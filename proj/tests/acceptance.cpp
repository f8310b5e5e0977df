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

// Acceptance suite: ten end-to-end checks covering the regression examples,
// the equilibrium theory cross-validations, the heuristic guarantees and the
// desk-scale benchmark behavior. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "netinspect/disjoint.hpp"
#include "netinspect/exact.hpp"
#include "netinspect/heuristic.hpp"
#include "netinspect/io.hpp"
#include "netinspect/payoff.hpp"
#include "netinspect/set_cover.hpp"
#include "oracles.hpp"

#ifndef NETINSPECT_CLI_PATH
#define NETINSPECT_CLI_PATH "netinspect-cli"
#endif

namespace netinspect {
namespace {

using Clock = std::chrono::steady_clock;
using testing::TestRng;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct CheckFailure {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw CheckFailure{reason};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---- criterion 1: bundled figure1 payoff regression --------------------

std::string criterion1() {
  GameInstance g = testing::figure1_instance();
  InspectionStrategy sigma1 = InspectionStrategy::create(
      {{testing::positioning(g, {"v4", "v3"}), 0.4},
       {testing::positioning(g, {"v1", "v2"}), 0.6}});
  AttackStrategy sigma2 =
      AttackStrategy::create({{testing::plan_of(g, {"e1", "e3"}), 0.2},
                              {testing::plan_of(g, {"e6"}), 0.8}});

  double value = payoff(g, sigma1, sigma2);
  require(std::abs(value - 0.698) <= 1e-12,
          "payoff " + fmt(value) + " != 0.698");

  double best_ms = 1e9;
  for (int rep = 0; rep < 5; ++rep) {
    auto t0 = Clock::now();
    volatile double v = payoff(g, sigma1, sigma2);
    (void)v;
    best_ms = std::min(best_ms, ms_since(t0));
  }
  require(best_ms < 1.0, "payoff call took " + fmt(best_ms) + " ms");
  return "payoff = " + fmt(value) + ", " + fmt(best_ms) + " ms";
}

// ---- criterion 2: bundled example2 closed-form regression --------------

std::string criterion2() {
  GameInstance g = parse_instance_file(
      std::string(NETINSPECT_DATA_DIR) + "/example2.json");
  require(g == testing::example2_instance(), "bundled instance drifted");

  DisjointProfile profile = make_disjoint_profile(g);
  require(profile.k_star == 3, "k* != 3");
  double value = game_value_disjoint(g, profile);
  require(std::abs(value - 5.4) <= 1e-12, "value " + fmt(value) + " != 5.4");

  InspectionStrategy expected = InspectionStrategy::create(
      {{testing::positioning(g, {"v1", "v2", "v3", "v4"}), 1.0 / 3},
       {testing::positioning(g, {"v2", "v3", "v1", "v4"}), 1.0 / 3},
       {testing::positioning(g, {"v3", "v1", "v2", "v4"}), 1.0 / 3}});
  require(build_cycling_inspection(g, profile) == expected,
          "support differs from the known equilibrium");
  return "k* = 3, value = 5.4, support matches";
}

// ---- criterion 3: closed form cross-validated against the LP -----------

std::string criterion3() {
  auto t0 = Clock::now();
  TestRng rng(33);
  double worst_diff = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    GameInstance g = testing::random_disjoint_instance(
        rng, /*max_nodes=*/5, /*max_components=*/12, /*max_sensors=*/3,
        /*max_budget=*/6);
    DisjointProfile profile = make_disjoint_profile(g);
    double closed_form = game_value_disjoint(g, profile);
    EquilibriumResult lp = solve_exact(g);
    double diff = std::abs(closed_form - lp.value);
    worst_diff = std::max(worst_diff, diff);
    require(diff <= 1e-9, "trial " + std::to_string(trial) + ": |" +
                              fmt(closed_form) + " - " + fmt(lp.value) +
                              "| > 1e-9");

    Certificate cert =
        verify_equilibrium(g, build_cycling_inspection(g, profile),
                           build_cycling_attack(g, profile));
    require(cert.defender_gap.has_value(), "defender side not enumerable");
    require(*cert.defender_gap <= 1e-9,
            "defender gap " + fmt(*cert.defender_gap));
    require(cert.attacker_gap <= 1e-9,
            "attacker gap " + fmt(cert.attacker_gap));
  }
  double elapsed = ms_since(t0);
  require(elapsed < 120000.0, "suite took " + fmt(elapsed) + " ms");
  return "100 instances, max |LP - closed form| = " + fmt(worst_diff) + ", " +
         fmt(elapsed / 1000.0) + " s";
}

// ---- criterion 4: greedy worst-case evaluation is exact ----------------

std::string criterion4() {
  auto t0 = Clock::now();
  TestRng rng(44);
  double worst_diff = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    GameInstance g = trial % 2 == 0
                         ? testing::random_overlapping_instance(rng)
                         : testing::random_disjoint_instance(rng);
    InspectionStrategy sigma1 = testing::random_inspection(g, rng, 3);
    auto [value, plan] = worst_case_evaluation(g, sigma1);
    (void)plan;
    double brute = testing::oracle_worst_case(g, sigma1);
    worst_diff = std::max(worst_diff, std::abs(value - brute));
    require(std::abs(value - brute) <= 1e-12,
            "trial " + std::to_string(trial) + ": greedy " + fmt(value) +
                " vs brute " + fmt(brute));
  }
  double elapsed = ms_since(t0);
  require(elapsed < 30000.0, "suite took " + fmt(elapsed) + " ms");
  return "50 instances, max deviation = " + fmt(worst_diff) + ", " +
         fmt(elapsed / 1000.0) + " s";
}

// ---- criterion 5: heuristic worst case bounds the LP value -------------

std::string criterion5() {
  TestRng rng(55);
  double worst_violation = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    GameInstance g = testing::random_overlapping_instance(rng);
    HeuristicOutcome outcome = solve_heuristic(g);
    EquilibriumResult lp = solve_exact(g);
    worst_violation =
        std::max(worst_violation, lp.value - outcome.worst_case);
    require(outcome.worst_case >= lp.value - 1e-9,
            "trial " + std::to_string(trial) + ": worst case " +
                fmt(outcome.worst_case) + " below value " + fmt(lp.value));
    require(satisfies_detection_condition_exact(outcome.surrogate, g.num_sensors(),
                                       outcome.strategy),
            "trial " + std::to_string(trial) +
                ": detection condition fails on the surrogate");
  }
  return "50 instances, max (value - worst_case) = " + fmt(worst_violation);
}

// ---- criterion 6: exact set cover against subset enumeration -----------

std::string criterion6() {
  TestRng rng(66);
  for (int trial = 0; trial < 25; ++trial) {
    GenParams p;
    p.seed = static_cast<uint64_t>(6000 + trial);
    p.nodes = rng.uniform_int(4, 15);
    p.components = rng.uniform_int(6, 20);
    p.sensors = 1;
    p.attack_budget = 1;
    p.disjoint = false;
    p.edge_prob = rng.uniform_real(0.15, 0.45);
    GameInstance g = generate_instance(p);
    CoverResult cover = min_set_cover(g, CoverMode::kExact);
    require(cover.optimal, "trial " + std::to_string(trial) + " uncertified");
    int brute = testing::oracle_min_cover_size(g);
    require(cover.size() == brute,
            "trial " + std::to_string(trial) + ": got " +
                std::to_string(cover.size()) + ", brute force " +
                std::to_string(brute));
  }
  GameInstance fig = testing::figure1_instance();
  CoverResult cover = min_set_cover(fig, CoverMode::kExact);
  require(cover.optimal && cover.size() == 4,
          "figure-1 cover not certified at size 4");
  return "25 covers certified, figure-1 cover = 4";
}

// ---- criterion 7: spare-budget plans and full sensor deployment --------

std::string criterion7() {
  // (a) Perfect-sensor attack plan on a reduced instance within LP caps.
  GameInstance reduced = GameInstance::create(
      {"v1", "v2", "v3"}, {"a1", "a2", "b1", "b2", "c1"},
      {{"a1", "a2"}, {"b1", "b2"}, {"c1"}}, {1.0, 1.0}, 4);
  DisjointProfile profile = make_disjoint_profile(reduced);
  auto plan = perfect_sensor_attack_plan(reduced, profile);
  require(plan.has_value(), "perfect-sensor plan not applicable");
  require(plan->size() == 3, "plan size != k*|E_{k*+1}| + tail");
  double value = game_value_disjoint(reduced, profile);
  EquilibriumResult lp = solve_exact(reduced);
  require(std::abs(lp.value - value) <= 1e-9, "closed form vs LP mismatch");
  double attained = payoff(reduced, build_cycling_inspection(reduced, profile),
                           AttackStrategy::pure(*plan));
  require(std::abs(attained - value) <= 1e-9,
          "plan attains " + fmt(attained) + " instead of " + fmt(value));

  // The layered sizes with three perfect sensors: intersections
  // (2,2,2,2,1) at plan size 9.
  GameInstance layered = testing::example2_instance();
  GameInstance perfect = GameInstance::from_sets(
      layered.node_ids(), layered.component_ids(),
      {layered.monitoring_set(0), layered.monitoring_set(1),
       layered.monitoring_set(2), layered.monitoring_set(3),
       layered.monitoring_set(4)},
      {1.0, 1.0, 1.0}, 10);
  DisjointProfile perfect_profile = make_disjoint_profile(perfect);
  auto big = perfect_sensor_attack_plan(perfect, perfect_profile);
  require(big.has_value() && big->size() == 9, "layered plan missing");
  std::vector<int64_t> want = {2, 2, 2, 2, 1};
  for (int i = 0; i < 5; ++i) {
    require(big->targets.intersection_count(perfect.monitoring_set(
                perfect_profile.ordered_nodes[i])) == want[i],
            "intersection profile wrong at set " + std::to_string(i));
  }

  // (b) Certified equilibria place every sensor. Full deployment is a
  // disjoint-instance property (overlapping games can idle a sensor whose
  // reachable components are never attacked), so the loop stays disjoint.
  TestRng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    GameInstance g = testing::random_disjoint_instance(rng);
    EquilibriumResult eq = solve_exact(g);
    require(eq.certified, "LP uncertified on trial " + std::to_string(trial));
    for (const auto& atom : eq.inspection.support()) {
      require(atom.action.placed_count() == g.num_sensors(),
              "equilibrium support idles a sensor on trial " +
                  std::to_string(trial));
    }
  }
  // ...and placing an idle sensor never increases the pure payoff.
  int checked = 0;
  for (int trial = 0; checked < 100 && trial < 400; ++trial) {
    GameInstance g = testing::random_overlapping_instance(rng);
    InspectionStrategy sigma1 = testing::random_inspection(g, rng, 1);
    SensorPositioning s = sigma1.support()[0].action;
    int idle = -1;
    for (size_t k = 0; k < s.placements.size(); ++k) {
      if (s.placements[k] == kUnplaced) idle = static_cast<int>(k);
    }
    NodeIndex spare = -1;
    for (int v = 0; v < g.num_nodes(); ++v) {
      bool used = false;
      for (NodeIndex placed : s.placements) used |= placed == v;
      if (!used) spare = v;
    }
    if (idle < 0 || spare < 0) continue;
    SensorPositioning extended = s;
    extended.placements[idle] = spare;
    AttackStrategy probe = testing::random_attack(g, rng, 1);
    const AttackPlan& t = probe.support()[0].action;
    require(payoff(g, extended, t) <= payoff(g, s, t) + 1e-12,
            "monotonicity violated");
    ++checked;
  }
  require(checked >= 100, "only " + std::to_string(checked) +
                              " monotonicity pairs exercised");
  return "spare-budget plan attains the value; all sensors deployed on 20 "
         "equilibria and " +
         std::to_string(checked) + " pure pairs";
}

// ---- criterion 8: budget-invariant inspection regime --------------------

std::string criterion8() {
  TestRng rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    GameInstance g = testing::random_disjoint_instance(rng);
    int64_t bound = budget_invariance_bound(g);
    int64_t limit = std::min<int64_t>(bound - 1, g.num_components());
    if (limit < 1) continue;
    InspectionStrategy first =
        build_cycling_inspection(g, make_disjoint_profile(g, 1));
    for (int b2 = 1; b2 <= limit; ++b2) {
      DisjointProfile profile = make_disjoint_profile(g, b2);
      require(profile.k_star == g.num_nodes(),
              "k* != n below the invariance bound");
      require(build_cycling_inspection(g, profile) == first,
              "inspection drifted between budgets on trial " +
                  std::to_string(trial));
    }
  }
  return "20 instances, identical inspection for every b2 below n|E_vn|";
}

// ---- criterion 9: desk-scale benchmark substitutes ----------------------

struct CliRun {
  int exit_code = -1;
  std::string output;
  double wall_ms = 0.0;
};

CliRun run_cli(const std::string& args) {
  std::string command = std::string(NETINSPECT_CLI_PATH) + " " + args + " 2>&1";
  auto t0 = Clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  CliRun run;
  if (pipe == nullptr) return run;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    run.output.append(buffer, n);
  }
  int status = pclose(pipe);
  run.wall_ms = ms_since(t0);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string criterion9() {
  const std::string big = "/tmp/netinspect_accept_400.json";
  CliRun gen = run_cli(
      "gen --seed 2026 --nodes 400 --components 480 --sensors 10 --budget 5 "
      "--mode random --p 0.02 --out " +
      big);
  require(gen.exit_code == 0, "400-node generation failed: " + gen.output);

  CliRun heur = run_cli("solve heuristic --time-budget-ms 2000 " + big);
  require(heur.exit_code == 0, "heuristic solve failed: " + heur.output);
  require(heur.wall_ms < 5000.0,
          "heuristic took " + fmt(heur.wall_ms) + " ms");

  const std::string small = "/tmp/netinspect_accept_20.json";
  CliRun gen2 = run_cli(
      "gen --seed 77 --nodes 20 --components 24 --sensors 4 --budget 1 "
      "--mode random --p 0.15 --out " +
      small);
  require(gen2.exit_code == 0, "20-node generation failed");

  CliRun curve =
      run_cli("gap-curve " + small + " --b1 1..4 --cells-cap 4000000");
  require(curve.exit_code == 0, "gap-curve failed: " + curve.output);
  auto rows = parse_csv(curve.output);
  require(rows.size() == 5, "expected header + 4 rows");

  double exact_first = 0.0, exact_last = 0.0;
  double heur_min = 1e18, heur_max = 0.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    require(rows[i].size() == 11, "row width drifted");
    double gap = std::stod(rows[i][3]);
    require(gap >= 0.0, "negative gap in row " + std::to_string(i));
    double exact_ms = std::stod(rows[i][5]) + std::stod(rows[i][6]);
    double heur_ms = std::stod(rows[i][7]) + std::stod(rows[i][8]) +
                     std::stod(rows[i][9]) + std::stod(rows[i][10]);
    if (i == 1) exact_first = exact_ms;
    if (i + 1 == rows.size()) exact_last = exact_ms;
    heur_min = std::min(heur_min, heur_ms);
    heur_max = std::max(heur_max, heur_ms);
  }
  require(exact_last > exact_first,
          "exact runtime did not grow with b1 (" + fmt(exact_first) +
              " -> " + fmt(exact_last) + " ms)");
  require(heur_max <= std::max(5.0 * heur_min, heur_min + 50.0),
          "heuristic runtime not roughly flat (" + fmt(heur_min) + " vs " +
              fmt(heur_max) + " ms)");
  return "heuristic on 400 nodes in " + fmt(heur.wall_ms / 1000.0) +
         " s; exact ms " + fmt(exact_first) + " -> " + fmt(exact_last) +
         ", heuristic ms within [" + fmt(heur_min) + ", " + fmt(heur_max) +
         "]";
}

// ---- criterion 10: column generation consistency ------------------------

std::string criterion10() {
  TestRng rng(110);
  double worst_diff = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GameInstance g = trial % 2 == 0
                         ? testing::random_overlapping_instance(rng)
                         : testing::random_disjoint_instance(rng);
    EquilibriumResult full = solve_exact(g);
    EquilibriumResult cg = solve_column_generation(g, PricingMode::kEnumerate);
    double diff = std::abs(full.value - cg.value);
    worst_diff = std::max(worst_diff, diff);
    require(diff <= 1e-9, "trial " + std::to_string(trial) + ": |" +
                              fmt(full.value) + " - " + fmt(cg.value) +
                              "| > 1e-9");
    require(cg.certified, "column generation uncertified");
  }
  return "20 instances, max |LP - colgen| = " + fmt(worst_diff);
}

}  // namespace
}  // namespace netinspect

int main() {
  using namespace netinspect;
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 figure1 payoff regression", criterion1},
      {"2 example2 closed-form regression", criterion2},
      {"3 closed-form vs LP cross-validation", criterion3},
      {"4 greedy worst-case exactness", criterion4},
      {"5 heuristic feasibility bound", criterion5},
      {"6 exact set-cover correctness", criterion6},
      {"7 spare-budget plans and full deployment", criterion7},
      {"8 budget-invariant inspection regime", criterion8},
      {"9 desk-scale benchmark shape", criterion9},
      {"10 column-generation consistency", criterion10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    try {
      std::string detail = criterion.run();
      std::printf("PASS  criterion %s: %s\n", criterion.name, detail.c_str());
    } catch (const CheckFailure& f) {
      std::printf("FAIL  criterion %s: %s\n", criterion.name,
                  f.reason.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("FAIL  criterion %s: unexpected error: %s\n", criterion.name,
                  e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
