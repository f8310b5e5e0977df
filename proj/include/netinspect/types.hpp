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

#ifndef NETINSPECT_TYPES_HPP_
#define NETINSPECT_TYPES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "netinspect/component_set.hpp"
#include "netinspect/errors.hpp"

namespace netinspect {

using NodeIndex = int32_t;
using ComponentIndex = int32_t;

// Sentinel for a sensor that is not positioned anywhere in the network.
inline constexpr NodeIndex kUnplaced = -1;

// Immutable description of one inspection game: nodes with their monitoring
// sets, the component universe, per-sensor detection accuracies (sorted
// descending at construction) and the attacker's budget. String ids live only
// at the boundary; everything internal runs on dense indices and bitsets.
class GameInstance {
 public:
  // Validates and canonicalizes. Throws Error(kValidation) with a distinct
  // detail tag per failure: empty_components, empty_nodes, duplicate_id,
  // unknown_component, empty_monitoring_set, uncovered_component,
  // accuracy_range, budget_range, sensor_count.
  static GameInstance create(
      std::vector<std::string> node_ids, std::vector<std::string> component_ids,
      const std::vector<std::vector<std::string>>& monitors,
      std::vector<double> sensor_accuracies, int attack_budget);

  // Index-based construction used by the generator and tests; same checks.
  static GameInstance from_sets(std::vector<std::string> node_ids,
                                std::vector<std::string> component_ids,
                                std::vector<ComponentSet> monitoring_sets,
                                std::vector<double> sensor_accuracies,
                                int attack_budget);

  int num_nodes() const { return static_cast<int>(node_ids_.size()); }
  int num_components() const { return static_cast<int>(component_ids_.size()); }
  int num_sensors() const { return static_cast<int>(accuracies_.size()); }
  int attack_budget() const { return attack_budget_; }

  const ComponentSet& monitoring_set(NodeIndex v) const {
    return monitoring_sets_[v];
  }
  double accuracy(int sensor) const { return accuracies_[sensor]; }
  const std::vector<double>& accuracies() const { return accuracies_; }

  const std::string& node_id(NodeIndex v) const { return node_ids_[v]; }
  const std::string& component_id(ComponentIndex e) const {
    return component_ids_[e];
  }
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  const std::vector<std::string>& component_ids() const {
    return component_ids_;
  }

  std::optional<NodeIndex> find_node(const std::string& id) const;
  std::optional<ComponentIndex> find_component(const std::string& id) const;

  // True when the monitoring sets are pairwise disjoint.
  bool is_disjoint() const { return disjoint_; }

  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.node_ids_ == b.node_ids_ && a.component_ids_ == b.component_ids_ &&
           a.monitoring_sets_ == b.monitoring_sets_ &&
           a.accuracies_ == b.accuracies_ &&
           a.attack_budget_ == b.attack_budget_;
  }

 private:
  GameInstance() = default;

  std::vector<std::string> node_ids_;
  std::vector<std::string> component_ids_;
  std::vector<ComponentSet> monitoring_sets_;
  std::vector<double> accuracies_;  // descending
  int attack_budget_ = 0;
  bool disjoint_ = false;
  std::unordered_map<std::string, NodeIndex> node_index_;
  std::unordered_map<std::string, ComponentIndex> component_index_;
};

// Defender pure action: entry k is the node hosting sensor k, or kUnplaced.
struct SensorPositioning {
  std::vector<NodeIndex> placements;

  static SensorPositioning all_unplaced(int num_sensors) {
    return SensorPositioning{std::vector<NodeIndex>(num_sensors, kUnplaced)};
  }

  int placed_count() const {
    return static_cast<int>(
        std::count_if(placements.begin(), placements.end(),
                      [](NodeIndex v) { return v != kUnplaced; }));
  }

  // Placed entries must be distinct in-range nodes and the vector must have
  // one slot per sensor.
  void validate_for(const GameInstance& instance) const;

  friend bool operator==(const SensorPositioning&,
                         const SensorPositioning&) = default;
  friend bool operator<(const SensorPositioning& a,
                        const SensorPositioning& b) {
    return a.placements < b.placements;
  }
};

// Attacker pure action: a set of at most b2 targeted components.
struct AttackPlan {
  ComponentSet targets;

  static AttackPlan of(int universe, const std::vector<int>& indices) {
    AttackPlan plan{ComponentSet(universe)};
    for (int e : indices) plan.targets.insert(e);
    return plan;
  }

  int size() const { return targets.count(); }

  void validate_for(const GameInstance& instance) const;

  friend bool operator==(const AttackPlan&, const AttackPlan&) = default;
  friend bool operator<(const AttackPlan& a, const AttackPlan& b) {
    return a.targets.to_indices() < b.targets.to_indices();
  }
};

// Sparse probability distribution over pure actions. Construction
// canonicalizes: atoms sorted by action, zero-mass atoms dropped, weights
// re-normalized when the total is within 1e-9 of one and rejected beyond
// that.
template <typename Action>
class MixedStrategy {
 public:
  struct Atom {
    Action action;
    double probability;
  };

  static MixedStrategy create(std::vector<Atom> atoms) {
    std::vector<Atom> kept;
    kept.reserve(atoms.size());
    double total = 0.0;
    for (auto& atom : atoms) {
      if (atom.probability < -1e-15) {
        throw_validation("negative_probability",
                         "strategy probability is negative");
      }
      if (atom.probability <= 1e-15) continue;
      total += atom.probability;
      kept.push_back(std::move(atom));
    }
    if (kept.empty()) {
      throw_validation("empty_support", "strategy has empty support");
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw_validation("probability_sum",
                       "strategy probabilities sum to " + std::to_string(total));
    }
    if (std::abs(total - 1.0) > 1e-12) {
      for (auto& atom : kept) atom.probability /= total;
    }
    std::sort(kept.begin(), kept.end(), [](const Atom& a, const Atom& b) {
      return a.action < b.action;
    });
    for (size_t i = 1; i < kept.size(); ++i) {
      if (kept[i].action == kept[i - 1].action) {
        throw_validation("duplicate_action",
                         "strategy support contains a repeated action");
      }
    }
    MixedStrategy out;
    out.support_ = std::move(kept);
    return out;
  }

  static MixedStrategy pure(Action action) {
    MixedStrategy out;
    out.support_.push_back(Atom{std::move(action), 1.0});
    return out;
  }

  const std::vector<Atom>& support() const { return support_; }

  void validate_for(const GameInstance& instance) const {
    for (const auto& atom : support_) atom.action.validate_for(instance);
  }

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    if (a.support_.size() != b.support_.size()) return false;
    for (size_t i = 0; i < a.support_.size(); ++i) {
      if (!(a.support_[i].action == b.support_[i].action) ||
          a.support_[i].probability != b.support_[i].probability) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Atom> support_;
};

using InspectionStrategy = MixedStrategy<SensorPositioning>;
using AttackStrategy = MixedStrategy<AttackPlan>;

}  // namespace netinspect

#endif  // NETINSPECT_TYPES_HPP_
