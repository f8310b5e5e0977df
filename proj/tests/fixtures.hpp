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

#ifndef NETINSPECT_TESTS_FIXTURES_HPP_
#define NETINSPECT_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "netinspect/types.hpp"

namespace netinspect::testing {

// The 5-node, 9-component instance with two sensors (0.9, 0.5).
inline GameInstance figure1_instance(int attack_budget = 2) {
  return GameInstance::create(
      {"v1", "v2", "v3", "v4", "v5"},
      {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"},
      {{"e1", "e2", "e3"},
       {"e3", "e6", "e7"},
       {"e3", "e4", "e5"},
       {"e7", "e8", "e9"},
       {"e8"}},
      {0.9, 0.5}, attack_budget);
}

// The layered disjoint instance: set sizes (5,4,4,2,1), four sensors
// (0.9, 0.5, 0.4, 0.2), ten attack resources. Component e<i>_<j> sits in
// layer j of monitoring set i.
inline GameInstance example2_instance() {
  std::vector<std::string> components;
  std::vector<std::vector<std::string>> monitors(5);
  const int sizes[5] = {5, 4, 4, 2, 1};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < sizes[i]; ++j) {
      std::string id =
          "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      components.push_back(id);
      monitors[i].push_back(id);
    }
  }
  return GameInstance::create({"v1", "v2", "v3", "v4", "v5"}, components,
                              monitors, {0.9, 0.5, 0.4, 0.2}, 10);
}

inline SensorPositioning positioning(const GameInstance& g,
                                     const std::vector<std::string>& nodes) {
  SensorPositioning s = SensorPositioning::all_unplaced(g.num_sensors());
  for (size_t k = 0; k < nodes.size(); ++k) {
    if (!nodes[k].empty()) s.placements[k] = *g.find_node(nodes[k]);
  }
  return s;
}

inline AttackPlan plan_of(const GameInstance& g,
                          const std::vector<std::string>& ids) {
  AttackPlan plan{ComponentSet(g.num_components())};
  for (const std::string& id : ids) plan.targets.insert(*g.find_component(id));
  return plan;
}

}  // namespace netinspect::testing

#endif  // NETINSPECT_TESTS_FIXTURES_HPP_
