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

#ifndef NETINSPECT_DISJOINT_HPP_
#define NETINSPECT_DISJOINT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netinspect/rational.hpp"
#include "netinspect/types.hpp"

namespace netinspect {

// Derived quantities for a game whose monitoring sets are mutually disjoint
// (or for the disjoint surrogate the heuristic builds from a partition).
// Nodes are ordered by decreasing set size, ties by ascending node index, and
// that order is used consistently by every construction below.
//
//   k_star       smallest k such that (b2 - sum of sizes below k) / k covers
//                the next set entirely; the top k_star sets are the ones the
//                attacker does not saturate
//   uniform_mass (b2 - tail_total) / k_star, the expected number of attacks
//                each top set receives in equilibrium (kept exact)
//   b2_prime     k_star * floor(uniform_mass)
//   residual     b2 - tail_total - b2_prime, in [0, k_star)
struct DisjointProfile {
  std::vector<NodeIndex> ordered_nodes;
  std::vector<int64_t> sizes;  // descending, zeros allowed (surrogate blocks)
  int attack_budget = 0;
  int k_star = 0;
  int64_t tail_total = 0;
  Rational uniform_mass;
  int64_t b2_prime = 0;
  int64_t residual = 0;
};

// Minimal k in [n] with (b2 - sum_{j>k} sizes_j) / k >= sizes_{k+1}, where
// sizes_{n+1} = 0. Requires a descending size list and 1 <= b2 <= sum sizes.
int compute_k_star(std::span<const int64_t> sizes_desc, int64_t attack_budget);

// Profile of a disjoint instance; throws Error(kInfeasibleMode) when some
// monitoring sets overlap. The overload with a budget override supports
// sweeping b2 without rebuilding instances.
DisjointProfile make_disjoint_profile(const GameInstance& instance);
DisjointProfile make_disjoint_profile(const GameInstance& instance,
                                      int attack_budget);

// Profile over arbitrary (node, size) blocks, used for partition surrogates.
// `sizes` need not be sorted; ordering is applied here. Zero sizes are kept.
DisjointProfile make_profile_from_blocks(
    std::vector<std::pair<NodeIndex, int64_t>> blocks, int attack_budget);

// Equilibrium value b2 - sum_i lambda_i * min(|E_{v_i}|, uniform_mass).
double game_value_disjoint(const GameInstance& instance,
                           const DisjointProfile& profile);

// Uniform mixture over the k_star rotations of the best sensors across the
// top k_star nodes; sensors beyond k_star (up to the number of profile nodes)
// sit deterministically on the next-largest sets, and any remaining sensors
// stay unplaced. Equalizes the detection probability across the top nodes.
InspectionStrategy build_cycling_inspection(const GameInstance& instance,
                                            const DisjointProfile& profile);

// Uniform mixture over k_star plans: the tail sets are fully targeted, each
// top set receives floor(uniform_mass) fixed components, and a wrap-around
// window of `residual` sets receives one extra component per plan. Satisfies
// the attack-marginal condition exactly. Requires a disjoint instance.
AttackStrategy build_cycling_attack(const GameInstance& instance,
                                    const DisjointProfile& profile);

struct MarginalReport {
  bool detection_ok = false;
  bool attack_ok = false;
  double max_abs_deviation = 0.0;
};

// Checks the two marginal conditions node-by-node / set-by-set to 1e-12 and
// reports the worst violation. Requires a disjoint instance.
MarginalReport verify_equilibrium_marginals(const GameInstance& instance,
                                             const InspectionStrategy& sigma1,
                                             const AttackStrategy& sigma2);

// n * |E_{v_n}|: every attack budget strictly below this bound yields k* = n
// and the identical cycling inspection strategy.
int64_t budget_invariance_bound(const GameInstance& instance);

// With b1 >= k* perfect top sensors and b2 beyond
// k*|E_{v_{k*+1}}| + tail_total, a pure plan taking
// min(|E_{v_j}|, |E_{v_{k*+1}}|) from every set is an equilibrium attack.
// Returns nullopt when the preconditions fail (equilibrium plans then use
// exactly b2 resources).
std::optional<AttackPlan> perfect_sensor_attack_plan(
    const GameInstance& instance, const DisjointProfile& profile);

// Exact structural form of the detection condition for strategies built on
// rotations: every support weight is exactly 1/k_star, each of the first
// min(b1, k_star) sensors visits each top node exactly once across the
// support, later sensors are pinned, and no sensor strays elsewhere.
bool satisfies_detection_condition_exact(const DisjointProfile& profile,
                                         int num_sensors,
                                         const InspectionStrategy& sigma1);

}  // namespace netinspect

#endif  // NETINSPECT_DISJOINT_HPP_
