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

#include "netinspect/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "netinspect/heuristic.hpp"
#include "netinspect/payoff.hpp"
#include "netinspect/simplex.hpp"

namespace netinspect {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string format_count(long double count) {
  if (count < 9.0e18L) {
    return std::to_string(static_cast<long long>(count));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3Lg", count);
  return buf;
}

// Per-component undetection probabilities of one pure positioning.
std::vector<double> row_undetection(const GameInstance& instance,
                                    std::span<const NodeIndex> placements) {
  std::vector<double> undet(instance.num_components(), 1.0);
  for (size_t k = 0; k < placements.size(); ++k) {
    if (placements[k] == kUnplaced) continue;
    const double keep = 1.0 - instance.accuracy(static_cast<int>(k));
    instance.monitoring_set(placements[k]).for_each([&](int e) {
      undet[e] *= keep;
    });
  }
  return undet;
}

// Solves the zero-sum game with payoff matrix `u` (row player minimizes,
// column player maximizes). Returns row strategy, column strategy, value.
// The LP is posed so that the smaller action set forms the constraints.
struct GameSolution {
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  double value = 0.0;
  int64_t iterations = 0;
};

GameSolution solve_zero_sum(const std::vector<double>& u, int num_rows,
                            int num_cols, double max_entry) {
  // Canonical form: maximize 1.x  s.t.  G^T x <= 1, x >= 0 for a positive
  // matrix G whose rows belong to the minimizing player. Then
  // value = 1/sum(x), the row strategy is x normalized and the column
  // strategy comes from the duals.
  const bool defender_rows = num_cols <= num_rows;
  const int vars = defender_rows ? num_rows : num_cols;
  const int cons = defender_rows ? num_cols : num_rows;
  const double shift = defender_rows ? 1.0 : max_entry + 1.0;

  std::vector<double> a(static_cast<size_t>(cons) * vars);
  if (defender_rows) {
    // G = U + 1, constraints indexed by plans.
    for (int t = 0; t < cons; ++t) {
      for (int s = 0; s < vars; ++s) {
        a[static_cast<size_t>(t) * vars + s] =
            u[static_cast<size_t>(s) * num_cols + t] + shift;
      }
    }
  } else {
    // Swap roles: the attacker minimizes (max_entry + 1) - U, constraints
    // indexed by positionings.
    for (int s = 0; s < cons; ++s) {
      for (int t = 0; t < vars; ++t) {
        a[static_cast<size_t>(s) * vars + t] =
            shift - u[static_cast<size_t>(s) * num_cols + t];
      }
    }
  }

  SimplexResult lp =
      simplex_maximize(a, cons, vars, std::vector<double>(cons, 1.0),
                       std::vector<double>(vars, 1.0));
  if (lp.status != SimplexResult::Status::kOptimal) {
    throw Error(ErrorCode::kNumeric, "simplex_failed",
                "simplex did not converge (status " +
                    std::to_string(static_cast<int>(lp.status)) +
                    ", objective " + std::to_string(lp.objective) +
                    ", iterations " + std::to_string(lp.iterations) + ")");
  }

  auto normalize = [](std::vector<double> raw) {
    double total = 0.0;
    for (double& p : raw) {
      if (p < 0.0) p = 0.0;
      total += p;
    }
    if (total <= 0.0) {
      throw Error(ErrorCode::kNumeric, "degenerate_strategy",
                  "LP produced an all-zero strategy");
    }
    for (double& p : raw) p /= total;
    return raw;
  };

  GameSolution out;
  out.iterations = lp.iterations;
  if (lp.objective <= 0.0) {
    throw Error(ErrorCode::kNumeric, "degenerate_objective",
                "game LP objective is not positive");
  }
  // Strong duality must hold between the returned primal and the tableau
  // duals; a drifted tableau would silently corrupt the dual player's
  // strategy otherwise.
  double dual_objective = 0.0;
  for (double y : lp.duals) dual_objective += y;
  if (std::abs(dual_objective - lp.objective) >
      1e-8 * (1.0 + std::abs(lp.objective))) {
    throw Error(ErrorCode::kNumeric, "duality_gap",
                "primal/dual objectives disagree (" +
                    std::to_string(lp.objective) + " vs " +
                    std::to_string(dual_objective) + " after " +
                    std::to_string(lp.iterations) + " iterations)");
  }
  const double shifted_value = 1.0 / lp.objective;
  if (defender_rows) {
    out.row_strategy = normalize(std::move(lp.x));
    out.col_strategy = normalize(std::move(lp.duals));
    out.value = shifted_value - shift;
  } else {
    out.col_strategy = normalize(std::move(lp.x));
    out.row_strategy = normalize(std::move(lp.duals));
    out.value = shift - shifted_value;
  }
  return out;
}

// Keeps atoms above the support threshold and rescales so the kept mass is
// exactly one; truncated LP tails can otherwise exceed the 1e-9 budget of
// MixedStrategy::create.
template <typename Strategy, typename MakeAction>
Strategy make_strategy(std::span<const double> probs, MakeAction&& action_of) {
  double kept = 0.0;
  for (double p : probs) {
    if (p > 1e-12) kept += p;
  }
  std::vector<typename Strategy::Atom> atoms;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 1e-12) continue;
    atoms.push_back({action_of(static_cast<int>(i)), probs[i] / kept});
  }
  return Strategy::create(std::move(atoms));
}

InspectionStrategy make_inspection(const MatrixGame& game,
                                   std::span<const double> probs) {
  return make_strategy<InspectionStrategy>(
      probs, [&](int r) { return game.row_action(r); });
}

AttackStrategy make_attack(const MatrixGame& game,
                           std::span<const double> probs) {
  return make_strategy<AttackStrategy>(
      probs, [&](int c) { return game.col_action(c); });
}

}  // namespace

long double count_positionings(int num_nodes, int num_sensors) {
  long double total = 1.0L;  // the all-unplaced positioning
  long double arrangements = 1.0L;
  for (int i = 1; i <= num_sensors; ++i) {
    arrangements *= static_cast<long double>(num_nodes - i + 1);
    total += arrangements;
  }
  return total;
}

long double count_attack_plans(int num_components, int attack_budget) {
  long double total = 0.0L;
  long double binom = 1.0L;
  for (int j = 0; j <= attack_budget; ++j) {
    if (j > 0) {
      binom *= static_cast<long double>(num_components - j + 1) /
               static_cast<long double>(j);
    }
    total += binom;
  }
  return total;
}

SensorPositioning MatrixGame::row_action(int r) const {
  SensorPositioning s;
  s.placements.assign(
      row_data.begin() + static_cast<size_t>(r) * num_sensors,
      row_data.begin() + static_cast<size_t>(r + 1) * num_sensors);
  return s;
}

AttackPlan MatrixGame::col_action(int c) const {
  AttackPlan plan{ComponentSet(universe)};
  for (int32_t i = col_offsets[c]; i < col_offsets[c + 1]; ++i) {
    plan.targets.insert(col_data[i]);
  }
  return plan;
}

MatrixGame enumerate_actions(const GameInstance& instance,
                             const EnumCaps& caps) {
  const int n = instance.num_nodes();
  const int b1 = instance.num_sensors();
  const int b2 = instance.attack_budget();
  const int m = instance.num_components();

  const long double rows = count_positionings(n, b1);
  const long double cols = count_attack_plans(m, b2);
  if (rows * cols > static_cast<long double>(caps.max_cells)) {
    throw Error(ErrorCode::kSizeCap, "matrix_too_large",
                "payoff matrix needs |A1| = " + format_count(rows) +
                    " by |A2| = " + format_count(cols) +
                    " entries, above the cap of " +
                    std::to_string(caps.max_cells));
  }

  MatrixGame game;
  game.num_rows = static_cast<int>(rows);
  game.num_cols = static_cast<int>(cols);
  game.num_sensors = b1;
  game.attack_budget = b2;
  game.universe = m;
  game.row_data.reserve(static_cast<size_t>(game.num_rows) * b1);
  game.col_offsets.reserve(game.num_cols + 1);
  game.col_offsets.push_back(0);

  // Rows: placed sensors form a prefix; size-major, lexicographic tuples.
  std::vector<NodeIndex> placements(b1, kUnplaced);
  std::vector<char> used(n, 0);
  auto emit_row = [&]() {
    game.row_data.insert(game.row_data.end(), placements.begin(),
                         placements.end());
  };
  auto gen_rows = [&](auto&& self, int depth, int target) -> void {
    if (depth == target) {
      emit_row();
      return;
    }
    for (NodeIndex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      placements[depth] = v;
      self(self, depth + 1, target);
      placements[depth] = kUnplaced;
      used[v] = 0;
    }
  };
  for (int size = 0; size <= b1; ++size) gen_rows(gen_rows, 0, size);
  assert(static_cast<int>(game.row_data.size()) == game.num_rows * b1);

  // Columns: subsets of size 0..b2, lexicographic within a size.
  std::vector<int32_t> plan;
  auto gen_cols = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      game.col_data.insert(game.col_data.end(), plan.begin(), plan.end());
      game.col_offsets.push_back(static_cast<int32_t>(game.col_data.size()));
      return;
    }
    for (int e = start; e <= m - remaining; ++e) {
      plan.push_back(e);
      self(self, e + 1, remaining - 1);
      plan.pop_back();
    }
  };
  for (int size = 0; size <= b2; ++size) gen_cols(gen_cols, 0, size);
  assert(static_cast<int>(game.col_offsets.size()) == game.num_cols + 1);

  game.payoffs.resize(static_cast<size_t>(game.num_rows) * game.num_cols);
  for (int r = 0; r < game.num_rows; ++r) {
    std::vector<double> undet = row_undetection(
        instance, std::span<const NodeIndex>(
                      game.row_data.data() + static_cast<size_t>(r) * b1, b1));
    double* out = game.payoffs.data() + static_cast<size_t>(r) * game.num_cols;
    for (int c = 0; c < game.num_cols; ++c) {
      double total = 0.0;
      for (int32_t i = game.col_offsets[c]; i < game.col_offsets[c + 1]; ++i) {
        total += undet[game.col_data[i]];
      }
      out[c] = total;
    }
  }
  return game;
}

EquilibriumResult solve_matrix_game(const MatrixGame& game) {
  auto t0 = Clock::now();
  GameSolution solution =
      solve_zero_sum(game.payoffs, game.num_rows, game.num_cols,
                     static_cast<double>(game.attack_budget));

  EquilibriumResult result;
  result.inspection = make_inspection(game, solution.row_strategy);
  result.attack = make_attack(game, solution.col_strategy);
  result.value = solution.value;

  // Pure-deviation certificates recomputed from the matrix itself.
  double worst_column = -1.0;
  for (int c = 0; c < game.num_cols; ++c) {
    double v = 0.0;
    for (int r = 0; r < game.num_rows; ++r) {
      if (solution.row_strategy[r] > 0.0) {
        v += solution.row_strategy[r] * game.at(r, c);
      }
    }
    worst_column = std::max(worst_column, v);
  }
  double best_row = std::numeric_limits<double>::infinity();
  for (int r = 0; r < game.num_rows; ++r) {
    double v = 0.0;
    for (int c = 0; c < game.num_cols; ++c) {
      if (solution.col_strategy[c] > 0.0) {
        v += solution.col_strategy[c] * game.at(r, c);
      }
    }
    best_row = std::min(best_row, v);
  }
  // Deviation gains: attacker against the returned inspection, defender
  // against the returned attack.
  result.attacker_gap = std::max(0.0, worst_column - result.value);
  result.defender_gap = std::max(0.0, result.value - best_row);
  result.certified = result.defender_gap <= 1e-9 && result.attacker_gap <= 1e-9;
  result.lp_ms = ms_since(t0);
  return result;
}

EquilibriumResult solve_exact(const GameInstance& instance,
                              const EnumCaps& caps) {
  auto t0 = Clock::now();
  MatrixGame game = enumerate_actions(instance, caps);
  double enumerate_ms = ms_since(t0);
  EquilibriumResult result = solve_matrix_game(game);
  result.enumerate_ms = enumerate_ms;
  return result;
}

std::pair<SensorPositioning, double> defender_best_response(
    const GameInstance& instance, std::span<const double> attack_marginals) {
  const int n = instance.num_nodes();
  const int b1 = instance.num_sensors();
  assert(static_cast<int>(attack_marginals.size()) ==
         instance.num_components());

  std::vector<double> weight(attack_marginals.begin(), attack_marginals.end());
  double total = 0.0;
  for (double w : weight) total += w;

  SensorPositioning current = SensorPositioning::all_unplaced(b1);
  SensorPositioning best = current;
  double best_value = total;
  std::vector<char> used(n, 0);

  // DFS over prefix placements; every prefix is a candidate. Weights are
  // saved and restored instead of divided back (lambda may be 1).
  auto dfs = [&](auto&& self, int sensor, double value) -> void {
    if (value < best_value - 1e-15) {
      best_value = value;
      best = current;
    }
    if (sensor == b1) return;
    const double lambda = instance.accuracy(sensor);
    for (NodeIndex v = 0; v < n; ++v) {
      if (used[v]) continue;
      const ComponentSet& set = instance.monitoring_set(v);
      double delta = 0.0;
      set.for_each([&](int e) { delta += weight[e]; });
      delta *= lambda;

      std::vector<std::pair<int, double>> saved;
      set.for_each([&](int e) {
        saved.emplace_back(e, weight[e]);
        weight[e] *= 1.0 - lambda;
      });
      used[v] = 1;
      current.placements[sensor] = v;
      self(self, sensor + 1, value - delta);
      current.placements[sensor] = kUnplaced;
      used[v] = 0;
      for (const auto& [e, w] : saved) weight[e] = w;
    }
  };
  dfs(dfs, 0, total);
  return {best, best_value};
}

std::pair<SensorPositioning, double> greedy_best_response(
    const GameInstance& instance, std::span<const double> attack_marginals) {
  const int n = instance.num_nodes();
  const int b1 = instance.num_sensors();
  std::vector<double> weight(attack_marginals.begin(), attack_marginals.end());
  double value = 0.0;
  for (double w : weight) value += w;

  SensorPositioning s = SensorPositioning::all_unplaced(b1);
  std::vector<char> used(n, 0);
  for (int sensor = 0; sensor < b1; ++sensor) {
    const double lambda = instance.accuracy(sensor);
    NodeIndex pick = -1;
    double pick_delta = -1.0;
    for (NodeIndex v = 0; v < n; ++v) {
      if (used[v]) continue;
      double delta = 0.0;
      instance.monitoring_set(v).for_each([&](int e) { delta += weight[e]; });
      delta *= lambda;
      if (delta > pick_delta) {
        pick_delta = delta;
        pick = v;
      }
    }
    if (pick < 0) break;
    used[pick] = 1;
    s.placements[sensor] = pick;
    instance.monitoring_set(pick).for_each(
        [&](int e) { weight[e] *= 1.0 - lambda; });
    value -= pick_delta;
  }
  return {s, value};
}

Certificate verify_equilibrium(const GameInstance& instance,
                               const InspectionStrategy& sigma1,
                               const AttackStrategy& sigma2, double tol,
                               int64_t row_cap) {
  Certificate cert;
  cert.payoff = payoff(instance, sigma1, sigma2);

  auto [worst_case, plan] = worst_case_evaluation(instance, sigma1);
  (void)plan;
  cert.attacker_gap = std::max(0.0, worst_case - cert.payoff);

  if (count_positionings(instance.num_nodes(), instance.num_sensors()) <=
      static_cast<long double>(row_cap)) {
    std::vector<double> q = attack_marginals(instance, sigma2);
    auto [best, best_value] = defender_best_response(instance, q);
    (void)best;
    cert.defender_gap = std::max(0.0, cert.payoff - best_value);
    cert.certified = cert.attacker_gap <= tol && *cert.defender_gap <= tol;
  }
  return cert;
}

EquilibriumResult solve_column_generation(const GameInstance& instance,
                                          PricingMode pricing,
                                          const ColGenCaps& caps) {
  const int b1 = instance.num_sensors();
  const int m = instance.num_components();
  const int b2 = instance.attack_budget();

  const long double num_cols = count_attack_plans(m, b2);
  if (num_cols > static_cast<long double>(caps.max_constraints)) {
    throw Error(ErrorCode::kSizeCap, "constraints_too_large",
                "column generation materializes |A2| = " +
                    format_count(num_cols) + " constraints, above the cap of " +
                    std::to_string(caps.max_constraints));
  }
  if (pricing == PricingMode::kEnumerate &&
      count_positionings(instance.num_nodes(), b1) >
          static_cast<long double>(caps.max_pricing_rows)) {
    throw Error(ErrorCode::kSizeCap, "pricing_too_large",
                "enumerate pricing scans |A1| = " +
                    format_count(count_positionings(instance.num_nodes(), b1)) +
                    " positionings, above the cap of " +
                    std::to_string(caps.max_pricing_rows));
  }

  auto t0 = Clock::now();

  // Materialize the attack plans once (shared with every master solve).
  std::vector<int32_t> col_offsets{0};
  std::vector<int32_t> col_data;
  {
    std::vector<int32_t> plan;
    auto gen = [&](auto&& self, int start, int remaining) -> void {
      if (remaining == 0) {
        col_data.insert(col_data.end(), plan.begin(), plan.end());
        col_offsets.push_back(static_cast<int32_t>(col_data.size()));
        return;
      }
      for (int e = start; e <= m - remaining; ++e) {
        plan.push_back(e);
        self(self, e + 1, remaining - 1);
        plan.pop_back();
      }
    };
    for (int size = 0; size <= b2; ++size) gen(gen, 0, size);
  }
  const int ncols = static_cast<int>(col_offsets.size()) - 1;

  // Master rows, seeded with the heuristic strategy's support.
  std::vector<SensorPositioning> rows;
  {
    HeuristicOutcome seed = solve_heuristic(instance);
    for (const auto& atom : seed.strategy.support()) {
      rows.push_back(atom.action);
    }
  }

  std::vector<std::vector<double>> row_payoffs;
  auto append_row = [&](const SensorPositioning& s) {
    std::vector<double> undet = row_undetection(
        instance,
        std::span<const NodeIndex>(s.placements.data(), s.placements.size()));
    std::vector<double> payoff_row(ncols);
    for (int c = 0; c < ncols; ++c) {
      double total = 0.0;
      for (int32_t i = col_offsets[c]; i < col_offsets[c + 1]; ++i) {
        total += undet[col_data[i]];
      }
      payoff_row[c] = total;
    }
    row_payoffs.push_back(std::move(payoff_row));
  };
  for (const auto& s : rows) append_row(s);
  double enumerate_ms = ms_since(t0);

  t0 = Clock::now();
  GameSolution master;
  double price_value = 0.0;
  for (;;) {
    std::vector<double> flat;
    flat.reserve(rows.size() * ncols);
    for (const auto& row : row_payoffs) {
      flat.insert(flat.end(), row.begin(), row.end());
    }
    master = solve_zero_sum(flat, static_cast<int>(rows.size()), ncols,
                            static_cast<double>(b2));

    // Marginals of the master's dual attack strategy drive the pricing.
    std::vector<double> q(m, 0.0);
    for (int c = 0; c < ncols; ++c) {
      if (master.col_strategy[c] <= 0.0) continue;
      for (int32_t i = col_offsets[c]; i < col_offsets[c + 1]; ++i) {
        q[col_data[i]] += master.col_strategy[c];
      }
    }
    auto [candidate, candidate_value] =
        pricing == PricingMode::kEnumerate
            ? defender_best_response(instance, q)
            : greedy_best_response(instance, q);
    price_value = candidate_value;
    if (candidate_value >= master.value - 1e-9) break;
    // Greedy pricing can re-propose a known row; that means it cannot make
    // further progress and the run ends uncertified.
    if (std::find(rows.begin(), rows.end(), candidate) != rows.end()) break;
    rows.push_back(candidate);
    append_row(candidate);
  }

  EquilibriumResult result;
  result.inspection = make_strategy<InspectionStrategy>(
      master.row_strategy, [&](int i) { return rows[i]; });
  result.attack =
      make_strategy<AttackStrategy>(master.col_strategy, [&](int c) {
        AttackPlan plan{ComponentSet(m)};
        for (int32_t i = col_offsets[c]; i < col_offsets[c + 1]; ++i) {
          plan.targets.insert(col_data[i]);
        }
        return plan;
      });
  result.value = master.value;
  result.columns_used = static_cast<int>(rows.size());

  auto [worst_case, plan] = worst_case_evaluation(instance, result.inspection);
  (void)plan;
  result.attacker_gap = std::max(0.0, worst_case - result.value);
  result.defender_gap = std::max(0.0, result.value - price_value);
  result.certified = pricing == PricingMode::kEnumerate &&
                     result.defender_gap <= 1e-9 && result.attacker_gap <= 1e-9;
  result.lp_ms = ms_since(t0);
  result.enumerate_ms = enumerate_ms;
  return result;
}

}  // namespace netinspect
