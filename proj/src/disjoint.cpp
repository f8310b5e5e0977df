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

#include "netinspect/disjoint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "netinspect/payoff.hpp"

namespace netinspect {
namespace {

void require_disjoint(const GameInstance& instance) {
  if (!instance.is_disjoint()) {
    throw Error(ErrorCode::kInfeasibleMode, "overlapping_sets",
                "monitoring sets overlap; the closed-form equilibrium only "
                "applies to mutually disjoint monitoring sets");
  }
}

DisjointProfile finish_profile(std::vector<NodeIndex> ordered_nodes,
                               std::vector<int64_t> sizes, int attack_budget) {
  int64_t total = std::accumulate(sizes.begin(), sizes.end(), int64_t{0});
  if (attack_budget < 1 || attack_budget > total) {
    throw_validation("budget_range",
                     "attack budget must lie in [1, total component count]");
  }
  DisjointProfile profile;
  profile.k_star = compute_k_star(sizes, attack_budget);
  profile.tail_total = std::accumulate(sizes.begin() + profile.k_star,
                                       sizes.end(), int64_t{0});
  profile.uniform_mass =
      Rational::of(attack_budget - profile.tail_total, profile.k_star);
  profile.b2_prime = profile.k_star * profile.uniform_mass.floor();
  profile.residual = attack_budget - profile.tail_total - profile.b2_prime;
  assert(profile.residual >= 0 && profile.residual < profile.k_star);
  profile.ordered_nodes = std::move(ordered_nodes);
  profile.sizes = std::move(sizes);
  profile.attack_budget = attack_budget;
  return profile;
}

}  // namespace

int compute_k_star(std::span<const int64_t> sizes_desc, int64_t attack_budget) {
  if (sizes_desc.empty()) {
    throw_validation("empty_sizes", "k* needs at least one monitoring set");
  }
  for (size_t i = 0; i + 1 < sizes_desc.size(); ++i) {
    if (sizes_desc[i] < sizes_desc[i + 1]) {
      throw_validation("unsorted_sizes",
                       "monitoring-set sizes must be non-increasing");
    }
  }
  const int n = static_cast<int>(sizes_desc.size());
  int64_t suffix = std::accumulate(sizes_desc.begin(), sizes_desc.end(),
                                   int64_t{0});
  for (int k = 1; k <= n; ++k) {
    suffix -= sizes_desc[k - 1];
    int64_t next = (k < n) ? sizes_desc[k] : 0;
    // (b2 - suffix) / k >= next, in integers.
    if (attack_budget - suffix >= k * next) return k;
  }
  // Unreachable: the inequality is vacuous at k = n.
  throw Error(ErrorCode::kNumeric, "k_star", "k* search failed");
}

DisjointProfile make_disjoint_profile(const GameInstance& instance) {
  return make_disjoint_profile(instance, instance.attack_budget());
}

DisjointProfile make_disjoint_profile(const GameInstance& instance,
                                      int attack_budget) {
  require_disjoint(instance);
  std::vector<std::pair<NodeIndex, int64_t>> blocks;
  blocks.reserve(instance.num_nodes());
  for (NodeIndex v = 0; v < instance.num_nodes(); ++v) {
    blocks.emplace_back(v, instance.monitoring_set(v).count());
  }
  return make_profile_from_blocks(std::move(blocks), attack_budget);
}

DisjointProfile make_profile_from_blocks(
    std::vector<std::pair<NodeIndex, int64_t>> blocks, int attack_budget) {
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  std::vector<NodeIndex> nodes;
  std::vector<int64_t> sizes;
  nodes.reserve(blocks.size());
  sizes.reserve(blocks.size());
  for (const auto& [v, size] : blocks) {
    nodes.push_back(v);
    sizes.push_back(size);
  }
  return finish_profile(std::move(nodes), std::move(sizes), attack_budget);
}

double game_value_disjoint(const GameInstance& instance,
                           const DisjointProfile& profile) {
  require_disjoint(instance);
  const double mass = profile.uniform_mass.to_double();
  double detected = 0.0;
  int limit = std::min<int>(instance.num_sensors(),
                            static_cast<int>(profile.sizes.size()));
  for (int i = 0; i < limit; ++i) {
    detected += instance.accuracy(i) *
                std::min(static_cast<double>(profile.sizes[i]), mass);
  }
  return profile.attack_budget - detected;
}

InspectionStrategy build_cycling_inspection(const GameInstance& instance,
                                            const DisjointProfile& profile) {
  const int b1 = instance.num_sensors();
  const int k = profile.k_star;
  const int num_nodes = static_cast<int>(profile.ordered_nodes.size());
  const int cycling = std::min(b1, k);
  const int placed = std::min(b1, num_nodes);

  if (cycling == 0) {
    // No sensors (or no nodes): the k* rotations collapse to one atom.
    return InspectionStrategy::pure(SensorPositioning::all_unplaced(b1));
  }

  std::vector<InspectionStrategy::Atom> atoms;
  atoms.reserve(k);
  for (int l = 0; l < k; ++l) {
    SensorPositioning s = SensorPositioning::all_unplaced(b1);
    for (int j = 0; j < cycling; ++j) {
      s.placements[j] = profile.ordered_nodes[(l + j) % k];
    }
    for (int j = k; j < placed; ++j) {
      s.placements[j] = profile.ordered_nodes[j];
    }
    atoms.push_back({std::move(s), 1.0 / k});
  }
  return InspectionStrategy::create(std::move(atoms));
}

AttackStrategy build_cycling_attack(const GameInstance& instance,
                                    const DisjointProfile& profile) {
  require_disjoint(instance);
  const int k = profile.k_star;
  const int64_t base = profile.uniform_mass.floor();
  const int64_t r = profile.residual;

  // Components of each ordered set, ascending by component index, so that
  // "the first floor(uniform_mass) components" is deterministic.
  std::vector<std::vector<int>> members(profile.ordered_nodes.size());
  for (size_t i = 0; i < profile.ordered_nodes.size(); ++i) {
    members[i] =
        instance.monitoring_set(profile.ordered_nodes[i]).to_indices();
  }

  AttackPlan fixed{ComponentSet(instance.num_components())};
  for (size_t i = 0; i < members.size(); ++i) {
    if (static_cast<int>(i) < k) {
      assert(base <= static_cast<int64_t>(members[i].size()));
      for (int64_t j = 0; j < base; ++j) fixed.targets.insert(members[i][j]);
    } else {
      for (int e : members[i]) fixed.targets.insert(e);
    }
  }

  if (r == 0) {
    assert(fixed.size() == profile.attack_budget);
    return AttackStrategy::pure(std::move(fixed));
  }

  std::vector<AttackStrategy::Atom> atoms;
  atoms.reserve(k);
  for (int l = 0; l < k; ++l) {
    AttackPlan plan = fixed;
    for (int64_t t = 0; t < r; ++t) {
      int i = static_cast<int>((l + t) % k);
      assert(base < static_cast<int64_t>(members[i].size()));
      plan.targets.insert(members[i][base]);
    }
    assert(plan.size() == profile.attack_budget);
    atoms.push_back({std::move(plan), 1.0 / k});
  }
  return AttackStrategy::create(std::move(atoms));
}

MarginalReport verify_equilibrium_marginals(const GameInstance& instance,
                                             const InspectionStrategy& sigma1,
                                             const AttackStrategy& sigma2) {
  require_disjoint(instance);
  const DisjointProfile profile = make_disjoint_profile(instance);
  const int b1 = instance.num_sensors();
  const int k = profile.k_star;
  const int n = static_cast<int>(profile.ordered_nodes.size());
  constexpr double kTol = 1e-12;

  double top_detection = 0.0;
  for (int j = 0; j < std::min(b1, k); ++j) top_detection += instance.accuracy(j);
  top_detection /= k;

  MarginalReport report;
  report.detection_ok = true;
  report.attack_ok = true;

  for (int i = 0; i < n; ++i) {
    double expected;
    if (i < k) {
      expected = top_detection;
    } else if (i < b1) {
      expected = instance.accuracy(i);
    } else {
      expected = 0.0;
    }
    double actual =
        detection_probability(instance, sigma1, profile.ordered_nodes[i]);
    double dev = std::abs(actual - expected);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    if (dev > kTol) report.detection_ok = false;
  }

  std::vector<double> q = attack_marginals(instance, sigma2);
  for (int i = 0; i < n; ++i) {
    double expected = (i < k) ? profile.uniform_mass.to_double()
                              : static_cast<double>(profile.sizes[i]);
    double actual = 0.0;
    instance.monitoring_set(profile.ordered_nodes[i])
        .for_each([&](int e) { actual += q[e]; });
    double dev = std::abs(actual - expected);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    if (dev > kTol) report.attack_ok = false;
  }
  return report;
}

int64_t budget_invariance_bound(const GameInstance& instance) {
  require_disjoint(instance);
  int64_t smallest = instance.monitoring_set(0).count();
  for (NodeIndex v = 1; v < instance.num_nodes(); ++v) {
    smallest = std::min<int64_t>(smallest, instance.monitoring_set(v).count());
  }
  return smallest * instance.num_nodes();
}

std::optional<AttackPlan> perfect_sensor_attack_plan(
    const GameInstance& instance, const DisjointProfile& profile) {
  require_disjoint(instance);
  const int k = profile.k_star;
  const int n = static_cast<int>(profile.sizes.size());
  if (instance.num_sensors() < k) return std::nullopt;
  for (int j = 0; j < k; ++j) {
    if (instance.accuracy(j) != 1.0) return std::nullopt;
  }
  if (k >= n) return std::nullopt;  // |E_{v_{k*+1}}| undefined/zero boundary
  const int64_t next_size = profile.sizes[k];
  const int64_t plan_size = k * next_size + profile.tail_total;
  if (profile.attack_budget <= plan_size) return std::nullopt;

  AttackPlan plan{ComponentSet(instance.num_components())};
  for (int j = 0; j < n; ++j) {
    std::vector<int> members =
        instance.monitoring_set(profile.ordered_nodes[j]).to_indices();
    int64_t take = std::min<int64_t>(profile.sizes[j], next_size);
    for (int64_t t = 0; t < take; ++t) plan.targets.insert(members[t]);
  }
  assert(plan.size() == plan_size);
  return plan;
}

bool satisfies_detection_condition_exact(const DisjointProfile& profile,
                                         int num_sensors,
                                         const InspectionStrategy& sigma1) {
  const int k = profile.k_star;
  const int cycling = std::min(num_sensors, k);
  const int placed =
      std::min(num_sensors, static_cast<int>(profile.ordered_nodes.size()));
  const double weight = 1.0 / k;

  if (cycling == 0) {
    return sigma1.support().size() == 1 &&
           sigma1.support()[0].action.placed_count() == 0;
  }
  if (static_cast<int>(sigma1.support().size()) != k) return false;

  std::vector<int> top_rank(profile.ordered_nodes.empty()
                                ? 0
                                : *std::max_element(
                                      profile.ordered_nodes.begin(),
                                      profile.ordered_nodes.end()) +
                                      1,
                            -1);
  for (int i = 0; i < static_cast<int>(profile.ordered_nodes.size()); ++i) {
    top_rank[profile.ordered_nodes[i]] = i;
  }

  // counts[j][i]: how many support atoms put sensor j on ordered node i.
  std::vector<std::vector<int>> counts(
      num_sensors, std::vector<int>(profile.ordered_nodes.size(), 0));
  for (const auto& atom : sigma1.support()) {
    if (atom.probability != weight) return false;
    const auto& p = atom.action.placements;
    if (static_cast<int>(p.size()) != num_sensors) return false;
    for (int j = 0; j < num_sensors; ++j) {
      if (j < placed) {
        if (p[j] == kUnplaced || p[j] >= static_cast<int>(top_rank.size()) ||
            top_rank[p[j]] < 0) {
          return false;
        }
        ++counts[j][top_rank[p[j]]];
      } else if (p[j] != kUnplaced) {
        return false;
      }
    }
  }
  for (int j = 0; j < placed; ++j) {
    for (int i = 0; i < static_cast<int>(profile.ordered_nodes.size()); ++i) {
      int expect;
      if (j < cycling) {
        expect = (i < k) ? 1 : 0;  // each rotation visits each top node once
      } else {
        expect = (i == j) ? k : 0;  // pinned sensors never move
      }
      if (counts[j][i] != expect) return false;
    }
  }
  return true;
}

}  // namespace netinspect
