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

#ifndef NETINSPECT_EXACT_HPP_
#define NETINSPECT_EXACT_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netinspect/types.hpp"

namespace netinspect {

struct EnumCaps {
  int64_t max_cells = 2'000'000;  // |A1| * |A2| payoff entries
};

// Dense payoff matrix over fully enumerated action sets. Rows are the sensor
// positionings in which the placed sensors form a prefix of the accuracy
// order (the |A1| = sum_i i! C(n,i) family of the defender LP); skipping a
// more accurate sensor in favor of a less accurate one is weakly dominated,
// so minima over this family coincide with minima over all positionings.
// Columns are all attack plans of size 0..b2. Both enumerations are
// size-major, lexicographic within a size.
struct MatrixGame {
  int num_rows = 0;
  int num_cols = 0;
  int num_sensors = 0;
  int attack_budget = 0;
  int universe = 0;                  // component count
  std::vector<int32_t> row_data;     // num_rows * num_sensors placements
  std::vector<int32_t> col_offsets;  // num_cols + 1
  std::vector<int32_t> col_data;     // concatenated plan members
  std::vector<double> payoffs;       // row-major

  SensorPositioning row_action(int r) const;
  AttackPlan col_action(int c) const;
  double at(int r, int c) const {
    return payoffs[static_cast<size_t>(r) * num_cols + c];
  }
};

MatrixGame enumerate_actions(const GameInstance& instance,
                             const EnumCaps& caps = {});

struct EquilibriumResult {
  InspectionStrategy inspection;
  AttackStrategy attack;
  double value = 0.0;
  // Max pure-deviation gains; both must stay within 1e-9 for certification.
  double defender_gap = 0.0;
  double attacker_gap = 0.0;
  bool certified = false;
  int columns_used = -1;  // column generation only
  double enumerate_ms = 0.0;
  double lp_ms = 0.0;
};

// Minimax LP over the dense matrix via self-contained primal simplex: the
// side with fewer actions becomes the constraint set, the opponent's
// equilibrium strategy is read off the duals. Throws Error(kNumeric) with a
// residual report when the simplex fails to converge.
EquilibriumResult solve_matrix_game(const MatrixGame& game);

// enumerate_actions + solve_matrix_game with per-phase wall-clock times.
EquilibriumResult solve_exact(const GameInstance& instance,
                              const EnumCaps& caps = {});

enum class PricingMode { kEnumerate, kGreedy };

struct ColGenCaps {
  int64_t max_constraints = 50'000;     // |A2|, fully materialized
  int64_t max_pricing_rows = 2'000'000;  // |A1| for enumerate pricing
};

// Restricted-master column generation for the defender LP. The master is
// seeded with the heuristic strategy's support and grows by one positioning
// per round; pricing searches for the positioning with the most negative
// reduced cost, either exactly (enumerate: certificate of optimality) or
// sensor-by-sensor (greedy: no certificate, result flagged uncertified).
// Stops when the minimal reduced cost is >= -1e-9.
EquilibriumResult solve_column_generation(const GameInstance& instance,
                                          PricingMode pricing,
                                          const ColGenCaps& caps = {});

struct Certificate {
  double payoff = 0.0;
  double attacker_gap = 0.0;
  std::optional<double> defender_gap;  // empty when A1 is too large to scan
  bool certified = false;
};

// NE check: attacker side via the exact greedy worst case, defender side via
// best-response enumeration when |A1| fits under row_cap (otherwise the
// certificate is partial).
Certificate verify_equilibrium(const GameInstance& instance,
                               const InspectionStrategy& sigma1,
                               const AttackStrategy& sigma2, double tol = 1e-9,
                               int64_t row_cap = 500'000);

// Positioning minimizing sum_e q(e) * undet(s, e) over the prefix-placement
// family, with its value. Exact DFS scan; deterministic tie-breaks.
std::pair<SensorPositioning, double> defender_best_response(
    const GameInstance& instance, std::span<const double> attack_marginals);

// Locally best node for each sensor in accuracy order; an upper bound on the
// best response value.
std::pair<SensorPositioning, double> greedy_best_response(
    const GameInstance& instance, std::span<const double> attack_marginals);

// Action-set cardinalities |A1| and |A2| (long double: they overflow int64
// quickly), used for cap checks and error messages.
long double count_positionings(int num_nodes, int num_sensors);
long double count_attack_plans(int num_components, int attack_budget);

}  // namespace netinspect

#endif  // NETINSPECT_EXACT_HPP_
