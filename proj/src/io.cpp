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

#include "netinspect/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "netinspect/heuristic.hpp"

namespace netinspect {
namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_validation("file_not_found", "cannot open " + path, path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw_validation("parse_error", std::string("malformed document: ") +
                                        e.what(),
                     origin);
  }
}

const json& expect(const json& doc, const char* field,
                   const std::string& origin) {
  auto it = doc.find(field);
  if (it == doc.end()) {
    throw_validation("missing_field",
                     std::string("missing field '") + field + "'",
                     origin + ":" + field);
  }
  return *it;
}

// Deterministic draws independent of the standard library's distribution
// implementations, so fixed seeds give identical bytes everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  double uniform_real(double lo, double hi) {
    double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[uniform_int(0, static_cast<int>(i) - 1)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

GameInstance parse_instance_text(const std::string& text,
                                 const std::string& origin) {
  json doc = parse_document(text, origin);
  if (!doc.is_object()) {
    throw_validation("malformed_document", "instance must be a JSON object",
                     origin);
  }

  const json& components = expect(doc, "components", origin);
  if (!components.is_array()) {
    throw_validation("malformed_document", "'components' must be an array",
                     origin + ":components");
  }
  std::vector<std::string> component_ids;
  for (size_t i = 0; i < components.size(); ++i) {
    if (!components[i].is_string()) {
      throw_validation("malformed_document", "component ids must be strings",
                       origin + ":components[" + std::to_string(i) + "]");
    }
    component_ids.push_back(components[i].get<std::string>());
  }

  const json& nodes = expect(doc, "nodes", origin);
  if (!nodes.is_array()) {
    throw_validation("malformed_document", "'nodes' must be an array",
                     origin + ":nodes");
  }
  std::vector<std::string> node_ids;
  std::vector<std::vector<std::string>> monitors;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = origin + ":nodes[" + std::to_string(i) + "]";
    if (!nodes[i].is_object()) {
      throw_validation("malformed_document", "node entries must be objects",
                       where);
    }
    const json& id = expect(nodes[i], "id", where);
    const json& mon = expect(nodes[i], "monitors", where);
    if (!id.is_string() || !mon.is_array()) {
      throw_validation("malformed_document",
                       "node needs a string 'id' and array 'monitors'", where);
    }
    node_ids.push_back(id.get<std::string>());
    std::vector<std::string> list;
    for (size_t j = 0; j < mon.size(); ++j) {
      if (!mon[j].is_string()) {
        throw_validation("malformed_document",
                         "monitored component ids must be strings",
                         where + ".monitors[" + std::to_string(j) + "]");
      }
      list.push_back(mon[j].get<std::string>());
    }
    monitors.push_back(std::move(list));
  }

  const json& sensors = expect(doc, "sensors", origin);
  if (!sensors.is_array()) {
    throw_validation("malformed_document", "'sensors' must be an array",
                     origin + ":sensors");
  }
  std::vector<double> accuracies;
  for (size_t i = 0; i < sensors.size(); ++i) {
    if (!sensors[i].is_number()) {
      throw_validation("malformed_document", "sensor accuracies must be numbers",
                       origin + ":sensors[" + std::to_string(i) + "]");
    }
    accuracies.push_back(sensors[i].get<double>());
  }

  const json& budget = expect(doc, "attack_budget", origin);
  if (!budget.is_number_integer()) {
    throw_validation("malformed_document", "'attack_budget' must be an integer",
                     origin + ":attack_budget");
  }

  return GameInstance::create(std::move(node_ids), std::move(component_ids),
                              monitors, std::move(accuracies),
                              budget.get<int>());
}

GameInstance parse_instance_file(const std::string& path) {
  return parse_instance_text(read_file(path), path);
}

std::string serialize_instance(const GameInstance& instance) {
  json doc;
  doc["components"] = instance.component_ids();
  json nodes = json::array();
  for (NodeIndex v = 0; v < instance.num_nodes(); ++v) {
    json node;
    node["id"] = instance.node_id(v);
    json mon = json::array();
    instance.monitoring_set(v).for_each(
        [&](int e) { mon.push_back(instance.component_id(e)); });
    node["monitors"] = std::move(mon);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  doc["sensors"] = instance.accuracies();
  doc["attack_budget"] = instance.attack_budget();
  return doc.dump(2) + "\n";
}

ParsedStrategy parse_strategy_text(const std::string& text,
                                   const GameInstance& instance,
                                   const std::string& origin) {
  json doc = parse_document(text, origin);
  if (!doc.is_object()) {
    throw_validation("malformed_document", "strategy must be a JSON object",
                     origin);
  }
  const json& player = expect(doc, "player", origin);
  const json& support = expect(doc, "support", origin);
  if (!player.is_string() || !support.is_array() || support.empty()) {
    throw_validation("malformed_document",
                     "strategy needs a 'player' string and nonempty 'support'",
                     origin);
  }

  const std::string role = player.get<std::string>();
  if (role == "defender") {
    std::vector<InspectionStrategy::Atom> atoms;
    for (size_t i = 0; i < support.size(); ++i) {
      const std::string where = origin + ":support[" + std::to_string(i) + "]";
      if (!support[i].is_object()) {
        throw_validation("malformed_document", "support entries must be objects",
                         where);
      }
      const json& action = expect(support[i], "action", where);
      const json& prob = expect(support[i], "probability", where);
      if (!action.is_array() || !prob.is_number()) {
        throw_validation("malformed_document",
                         "support entries need 'action' array and numeric "
                         "'probability'",
                         where);
      }
      SensorPositioning s =
          SensorPositioning::all_unplaced(instance.num_sensors());
      for (const json& pair : action) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_string()) {
          throw_validation("malformed_document",
                           "defender actions are [sensor_index, node_id] pairs",
                           where);
        }
        int sensor = pair[0].get<int>();
        if (sensor < 1 || sensor > instance.num_sensors()) {
          throw_validation("unknown_sensor",
                           "sensor index " + std::to_string(sensor) +
                               " outside [1, b1]",
                           where);
        }
        auto v = instance.find_node(pair[1].get<std::string>());
        if (!v) {
          throw_validation("unknown_node",
                           "unknown node id " + pair[1].get<std::string>(),
                           where);
        }
        s.placements[sensor - 1] = *v;
      }
      atoms.push_back({std::move(s), prob.get<double>()});
    }
    ParsedStrategy out{InspectionStrategy::create(std::move(atoms))};
    out.defender().validate_for(instance);
    return out;
  }
  if (role == "attacker") {
    std::vector<AttackStrategy::Atom> atoms;
    for (size_t i = 0; i < support.size(); ++i) {
      const std::string where = origin + ":support[" + std::to_string(i) + "]";
      if (!support[i].is_object()) {
        throw_validation("malformed_document", "support entries must be objects",
                         where);
      }
      const json& action = expect(support[i], "action", where);
      const json& prob = expect(support[i], "probability", where);
      if (!action.is_array() || !prob.is_number()) {
        throw_validation("malformed_document",
                         "support entries need 'action' array and numeric "
                         "'probability'",
                         where);
      }
      AttackPlan plan{ComponentSet(instance.num_components())};
      for (const json& id : action) {
        if (!id.is_string()) {
          throw_validation("malformed_document",
                           "attacker actions are component id lists", where);
        }
        auto e = instance.find_component(id.get<std::string>());
        if (!e) {
          throw_validation("unknown_component",
                           "unknown component id " + id.get<std::string>(),
                           where);
        }
        plan.targets.insert(*e);
      }
      atoms.push_back({std::move(plan), prob.get<double>()});
    }
    ParsedStrategy out{AttackStrategy::create(std::move(atoms))};
    out.attacker().validate_for(instance);
    return out;
  }
  throw_validation("unknown_player",
                   "'player' must be \"defender\" or \"attacker\"",
                   origin + ":player");
}

ParsedStrategy parse_strategy_file(const std::string& path,
                                   const GameInstance& instance) {
  return parse_strategy_text(read_file(path), instance, path);
}

std::string serialize_strategy(const GameInstance& instance,
                               const InspectionStrategy& sigma1) {
  json doc;
  doc["player"] = "defender";
  json support = json::array();
  for (const auto& atom : sigma1.support()) {
    json action = json::array();
    for (size_t k = 0; k < atom.action.placements.size(); ++k) {
      if (atom.action.placements[k] == kUnplaced) continue;
      action.push_back(json::array(
          {static_cast<int>(k) + 1,
           instance.node_id(atom.action.placements[k])}));
    }
    support.push_back(
        json{{"action", std::move(action)}, {"probability", atom.probability}});
  }
  doc["support"] = std::move(support);
  return doc.dump(2) + "\n";
}

std::string serialize_strategy(const GameInstance& instance,
                               const AttackStrategy& sigma2) {
  json doc;
  doc["player"] = "attacker";
  json support = json::array();
  for (const auto& atom : sigma2.support()) {
    json action = json::array();
    atom.action.targets.for_each(
        [&](int e) { action.push_back(instance.component_id(e)); });
    support.push_back(
        json{{"action", std::move(action)}, {"probability", atom.probability}});
  }
  doc["support"] = std::move(support);
  return doc.dump(2) + "\n";
}

GameInstance generate_instance(const GenParams& p) {
  if (p.nodes < 1 || p.components < 1 || p.sensors < 0 ||
      p.sensors > p.nodes || p.attack_budget < 1 ||
      p.attack_budget > p.components) {
    throw_validation("infeasible_parameters",
                     "generator needs 1 <= nodes, sensors <= nodes, "
                     "1 <= attack_budget <= components");
  }
  if (p.disjoint && p.components < p.nodes) {
    throw_validation("infeasible_parameters",
                     "disjoint mode needs at least one component per node");
  }
  if (!(p.acc_min > 0.0) || p.acc_min > p.acc_max || p.acc_max > 1.0) {
    throw_validation("infeasible_parameters",
                     "accuracy range must satisfy 0 < min <= max <= 1");
  }
  if (!p.disjoint && !(p.edge_prob > 0.0 && p.edge_prob <= 1.0)) {
    throw_validation("infeasible_parameters",
                     "edge probability must lie in (0, 1]");
  }

  Rng rng(p.seed);
  std::vector<std::string> node_ids(p.nodes);
  for (int v = 0; v < p.nodes; ++v) node_ids[v] = "v" + std::to_string(v + 1);
  std::vector<std::string> component_ids(p.components);
  for (int e = 0; e < p.components; ++e) {
    component_ids[e] = "e" + std::to_string(e + 1);
  }

  std::vector<ComponentSet> sets(p.nodes, ComponentSet(p.components));
  if (p.disjoint) {
    std::vector<int> order(p.components);
    for (int e = 0; e < p.components; ++e) order[e] = e;
    rng.shuffle(order);
    // n-1 distinct cut points make every block nonempty.
    std::vector<int> cuts(p.components - 1);
    for (int i = 0; i < p.components - 1; ++i) cuts[i] = i + 1;
    rng.shuffle(cuts);
    cuts.resize(p.nodes - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(p.components);
    int start = 0;
    for (int v = 0; v < p.nodes; ++v) {
      for (int e = start; e < cuts[v]; ++e) sets[v].insert(order[e]);
      start = cuts[v];
    }
  } else {
    for (int v = 0; v < p.nodes; ++v) {
      for (int e = 0; e < p.components; ++e) {
        if (rng.uniform_real(0.0, 1.0) < p.edge_prob) sets[v].insert(e);
      }
    }
    ComponentSet covered(p.components);
    for (const auto& set : sets) covered |= set;
    for (int e = 0; e < p.components; ++e) {
      if (!covered.contains(e)) {
        sets[rng.uniform_int(0, p.nodes - 1)].insert(e);
      }
    }
    for (int v = 0; v < p.nodes; ++v) {
      if (sets[v].empty()) {
        sets[v].insert(rng.uniform_int(0, p.components - 1));
      }
    }
  }

  std::vector<double> accuracies(p.sensors);
  for (int k = 0; k < p.sensors; ++k) {
    accuracies[k] = rng.uniform_real(p.acc_min, p.acc_max);
  }

  return GameInstance::from_sets(std::move(node_ids), std::move(component_ids),
                                 std::move(sets), std::move(accuracies),
                                 p.attack_budget);
}

GameInstance with_sensor_prefix(const GameInstance& instance, int b1) {
  if (b1 < 0 || b1 > instance.num_sensors()) {
    throw_validation("infeasible_parameters",
                     "sensor prefix must lie in [0, b1]");
  }
  std::vector<ComponentSet> sets;
  sets.reserve(instance.num_nodes());
  for (NodeIndex v = 0; v < instance.num_nodes(); ++v) {
    sets.push_back(instance.monitoring_set(v));
  }
  std::vector<double> accuracies(instance.accuracies().begin(),
                                 instance.accuracies().begin() + b1);
  return GameInstance::from_sets(instance.node_ids(), instance.component_ids(),
                                 std::move(sets), std::move(accuracies),
                                 instance.attack_budget());
}

std::string GapCurve::csv_header() {
  return "b1,exact_value,heuristic_worst_case,gap,gap_kind,enumerate_ms,"
         "lp_ms,cover_ms,partition_ms,construct_ms,evaluate_ms";
}

std::string GapCurve::to_csv() const {
  std::string out = csv_header() + "\n";
  for (const GapCurveRow& row : rows) {
    out += std::to_string(row.b1);
    out += "," + format_double(row.exact_value);
    out += "," + format_double(row.worst_case);
    out += "," + format_double(row.gap);
    out += row.gap_relative ? ",relative" : ",absolute";
    out += "," + format_ms(row.enumerate_ms);
    out += "," + format_ms(row.lp_ms);
    out += "," + format_ms(row.cover_ms);
    out += "," + format_ms(row.partition_ms);
    out += "," + format_ms(row.construct_ms);
    out += "," + format_ms(row.evaluate_ms);
    out += "\n";
  }
  return out;
}

GapCurve gap_curve(const GameInstance& instance, int b1_lo, int b1_hi,
                   const EnumCaps& caps,
                   std::chrono::milliseconds cover_budget) {
  if (b1_lo < 1 || b1_lo > b1_hi || b1_hi > instance.num_sensors()) {
    throw_validation("infeasible_parameters",
                     "b1 range must satisfy 1 <= lo <= hi <= sensors");
  }
  GapCurve curve;
  for (int b1 = b1_lo; b1 <= b1_hi; ++b1) {
    GameInstance trimmed = with_sensor_prefix(instance, b1);
    EquilibriumResult exact = solve_exact(trimmed, caps);
    HeuristicOutcome heuristic = solve_heuristic(trimmed, cover_budget);
    GapReport gap = optimality_gap(heuristic.worst_case, exact.value);
    if (gap.relative) heuristic.gap_vs_value = gap.gap;

    GapCurveRow row;
    row.b1 = b1;
    row.exact_value = exact.value;
    row.worst_case = heuristic.worst_case;
    row.gap = gap.gap;
    row.gap_relative = gap.relative;
    row.enumerate_ms = exact.enumerate_ms;
    row.lp_ms = exact.lp_ms;
    row.cover_ms = heuristic.timings.cover_ms;
    row.partition_ms = heuristic.timings.partition_ms;
    row.construct_ms = heuristic.timings.construct_ms;
    row.evaluate_ms = heuristic.timings.evaluate_ms;
    curve.rows.push_back(row);
  }
  return curve;
}

int64_t default_time_budget_ms() {
  const char* env = std::getenv("NETINSPECT_TIME_BUDGET_MS");
  if (env != nullptr) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 10000;
}

}  // namespace netinspect
