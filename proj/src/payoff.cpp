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

#include "netinspect/payoff.hpp"

namespace netinspect {

double undetection_probability(const GameInstance& instance,
                               const SensorPositioning& s, ComponentIndex e) {
  if (e < 0 || e >= instance.num_components()) {
    throw_validation("unknown_component",
                     "component index outside the instance");
  }
  s.validate_for(instance);
  double prob = 1.0;
  for (size_t k = 0; k < s.placements.size(); ++k) {
    NodeIndex v = s.placements[k];
    if (v != kUnplaced && instance.monitoring_set(v).contains(e)) {
      prob *= 1.0 - instance.accuracy(static_cast<int>(k));
    }
  }
  return prob;
}

double payoff(const GameInstance& instance, const SensorPositioning& s,
              const AttackPlan& plan) {
  s.validate_for(instance);
  plan.validate_for(instance);
  // Inline the per-component product; undetection_probability would
  // re-validate s for every target.
  double total = 0.0;
  plan.targets.for_each([&](int e) {
    double prob = 1.0;
    for (size_t k = 0; k < s.placements.size(); ++k) {
      NodeIndex v = s.placements[k];
      if (v != kUnplaced && instance.monitoring_set(v).contains(e)) {
        prob *= 1.0 - instance.accuracy(static_cast<int>(k));
      }
    }
    total += prob;
  });
  return total;
}

double payoff(const GameInstance& instance, const InspectionStrategy& sigma1,
              const AttackStrategy& sigma2) {
  sigma1.validate_for(instance);
  sigma2.validate_for(instance);
  double total = 0.0;
  for (const auto& def : sigma1.support()) {
    for (const auto& atk : sigma2.support()) {
      total += def.probability * atk.probability *
               payoff(instance, def.action, atk.action);
    }
  }
  return total;
}

double detection_probability(const GameInstance& instance,
                             const InspectionStrategy& sigma1, NodeIndex v) {
  if (v < 0 || v >= instance.num_nodes()) {
    throw_validation("unknown_node", "node index outside the instance");
  }
  sigma1.validate_for(instance);
  double prob = 0.0;
  for (const auto& atom : sigma1.support()) {
    for (size_t k = 0; k < atom.action.placements.size(); ++k) {
      if (atom.action.placements[k] == v) {
        prob += instance.accuracy(static_cast<int>(k)) * atom.probability;
      }
    }
  }
  return prob;
}

double attack_probability(const GameInstance& instance,
                          const AttackStrategy& sigma2, ComponentIndex e) {
  if (e < 0 || e >= instance.num_components()) {
    throw_validation("unknown_component",
                     "component index outside the instance");
  }
  sigma2.validate_for(instance);
  double prob = 0.0;
  for (const auto& atom : sigma2.support()) {
    if (atom.action.targets.contains(e)) prob += atom.probability;
  }
  return prob;
}

std::vector<double> undetection_marginals(const GameInstance& instance,
                                          const InspectionStrategy& sigma1) {
  sigma1.validate_for(instance);
  std::vector<double> u(instance.num_components(), 0.0);
  for (const auto& atom : sigma1.support()) {
    for (int e = 0; e < instance.num_components(); ++e) {
      double prob = 1.0;
      for (size_t k = 0; k < atom.action.placements.size(); ++k) {
        NodeIndex v = atom.action.placements[k];
        if (v != kUnplaced && instance.monitoring_set(v).contains(e)) {
          prob *= 1.0 - instance.accuracy(static_cast<int>(k));
        }
      }
      u[e] += atom.probability * prob;
    }
  }
  return u;
}

std::vector<double> attack_marginals(const GameInstance& instance,
                                     const AttackStrategy& sigma2) {
  sigma2.validate_for(instance);
  std::vector<double> q(instance.num_components(), 0.0);
  for (const auto& atom : sigma2.support()) {
    atom.action.targets.for_each([&](int e) { q[e] += atom.probability; });
  }
  return q;
}

}  // namespace netinspect
