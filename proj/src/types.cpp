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

#include "netinspect/types.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace netinspect {
namespace {

std::string at(const std::string& field, size_t index) {
  return field + "[" + std::to_string(index) + "]";
}

}  // namespace

GameInstance GameInstance::from_sets(std::vector<std::string> node_ids,
                                     std::vector<std::string> component_ids,
                                     std::vector<ComponentSet> monitoring_sets,
                                     std::vector<double> sensor_accuracies,
                                     int attack_budget) {
  GameInstance inst;
  if (component_ids.empty()) {
    throw_validation("empty_components", "instance has no components",
                     "components");
  }
  if (node_ids.empty()) {
    throw_validation("empty_nodes", "instance has no nodes", "nodes");
  }
  if (monitoring_sets.size() != node_ids.size()) {
    throw_validation("monitoring_set_count",
                     "expected one monitoring set per node", "nodes");
  }

  for (size_t i = 0; i < node_ids.size(); ++i) {
    if (!inst.node_index_.emplace(node_ids[i], static_cast<NodeIndex>(i))
             .second) {
      throw_validation("duplicate_id", "duplicate node id " + node_ids[i],
                       at("nodes", i));
    }
  }
  for (size_t i = 0; i < component_ids.size(); ++i) {
    if (!inst.component_index_
             .emplace(component_ids[i], static_cast<ComponentIndex>(i))
             .second) {
      throw_validation("duplicate_id",
                       "duplicate component id " + component_ids[i],
                       at("components", i));
    }
  }

  const int num_components = static_cast<int>(component_ids.size());
  ComponentSet covered(num_components);
  for (size_t v = 0; v < monitoring_sets.size(); ++v) {
    if (monitoring_sets[v].universe() != num_components) {
      throw_validation("monitoring_set_universe",
                       "monitoring set indexes a different component universe",
                       at("nodes", v));
    }
    if (monitoring_sets[v].empty()) {
      throw_validation("empty_monitoring_set",
                       "monitoring set of node " + node_ids[v] + " is empty",
                       at("nodes", v));
    }
    covered |= monitoring_sets[v];
  }
  if (covered.count() != num_components) {
    for (int e = 0; e < num_components; ++e) {
      if (!covered.contains(e)) {
        throw_validation("uncovered_component",
                         "component " + component_ids[e] +
                             " belongs to no monitoring set",
                         at("components", e));
      }
    }
  }

  for (size_t k = 0; k < sensor_accuracies.size(); ++k) {
    double lambda = sensor_accuracies[k];
    if (!(lambda > 0.0) || lambda > 1.0 || !std::isfinite(lambda)) {
      throw_validation("accuracy_range",
                       "sensor " + std::to_string(k + 1) +
                           " accuracy must lie in (0,1]",
                       at("sensors", k));
    }
  }
  if (sensor_accuracies.size() > node_ids.size()) {
    throw_validation("sensor_count",
                     "more sensors than nodes (b1 must be <= n)", "sensors");
  }
  if (attack_budget < 1 || attack_budget > num_components) {
    throw_validation("budget_range",
                     "attack_budget must lie in [1, number of components]",
                     "attack_budget");
  }
  // Canonical order: most accurate sensor first.
  std::sort(sensor_accuracies.rbegin(), sensor_accuracies.rend());

  inst.disjoint_ = true;
  for (size_t v = 0; v + 1 < monitoring_sets.size() && inst.disjoint_; ++v) {
    for (size_t w = v + 1; w < monitoring_sets.size(); ++w) {
      if (monitoring_sets[v].intersects(monitoring_sets[w])) {
        inst.disjoint_ = false;
        break;
      }
    }
  }

  inst.node_ids_ = std::move(node_ids);
  inst.component_ids_ = std::move(component_ids);
  inst.monitoring_sets_ = std::move(monitoring_sets);
  inst.accuracies_ = std::move(sensor_accuracies);
  inst.attack_budget_ = attack_budget;
  return inst;
}

GameInstance GameInstance::create(
    std::vector<std::string> node_ids, std::vector<std::string> component_ids,
    const std::vector<std::vector<std::string>>& monitors,
    std::vector<double> sensor_accuracies, int attack_budget) {
  std::unordered_map<std::string, ComponentIndex> lookup;
  for (size_t i = 0; i < component_ids.size(); ++i) {
    lookup.emplace(component_ids[i], static_cast<ComponentIndex>(i));
  }
  std::vector<ComponentSet> sets;
  sets.reserve(monitors.size());
  for (size_t v = 0; v < monitors.size(); ++v) {
    ComponentSet set(static_cast<int>(component_ids.size()));
    for (size_t j = 0; j < monitors[v].size(); ++j) {
      auto it = lookup.find(monitors[v][j]);
      if (it == lookup.end()) {
        throw_validation("unknown_component",
                         "monitoring set references unknown component " +
                             monitors[v][j],
                         at("nodes", v) + ".monitors[" + std::to_string(j) +
                             "]");
      }
      set.insert(it->second);
    }
    sets.push_back(std::move(set));
  }
  return from_sets(std::move(node_ids), std::move(component_ids),
                   std::move(sets), std::move(sensor_accuracies),
                   attack_budget);
}

std::optional<NodeIndex> GameInstance::find_node(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ComponentIndex> GameInstance::find_component(
    const std::string& id) const {
  auto it = component_index_.find(id);
  if (it == component_index_.end()) return std::nullopt;
  return it->second;
}

void SensorPositioning::validate_for(const GameInstance& instance) const {
  if (static_cast<int>(placements.size()) != instance.num_sensors()) {
    throw_validation("positioning_length",
                     "sensor positioning must assign every sensor");
  }
  std::set<NodeIndex> seen;
  for (NodeIndex v : placements) {
    if (v == kUnplaced) continue;
    if (v < 0 || v >= instance.num_nodes()) {
      throw_validation("unknown_node",
                       "positioning references node index " +
                           std::to_string(v) + " outside the instance");
    }
    if (!seen.insert(v).second) {
      throw_validation("duplicate_node",
                       "two sensors share node " + instance.node_id(v));
    }
  }
}

void AttackPlan::validate_for(const GameInstance& instance) const {
  if (targets.universe() != instance.num_components()) {
    throw_validation("unknown_component",
                     "attack plan indexes a different component universe");
  }
  if (size() > instance.attack_budget()) {
    throw_validation("budget_exceeded",
                     "attack plan targets more than b2 components");
  }
}

}  // namespace netinspect
