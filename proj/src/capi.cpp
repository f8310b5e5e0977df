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

#include "netinspect.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "netinspect/disjoint.hpp"
#include "netinspect/exact.hpp"
#include "netinspect/heuristic.hpp"
#include "netinspect/io.hpp"
#include "netinspect/payoff.hpp"

using netinspect::AttackStrategy;
using netinspect::Error;
using netinspect::ErrorCode;
using netinspect::GameInstance;
using netinspect::InspectionStrategy;

namespace {

thread_local std::string g_last_message;
thread_local std::string g_last_json;

void record_error(ni_status status, const std::string& detail,
                  const std::string& message, const std::string& location) {
  g_last_message = message;
  nlohmann::ordered_json payload;
  payload["code"] = static_cast<int>(status);
  payload["detail"] = detail;
  payload["message"] = message;
  payload["location"] = location;
  g_last_json = payload.dump();
}

ni_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
      return NI_ERR_VALIDATION;
    case ErrorCode::kSizeCap:
      return NI_ERR_SIZE_CAP;
    case ErrorCode::kNumeric:
      return NI_ERR_NUMERIC;
    case ErrorCode::kInfeasibleMode:
      return NI_ERR_INFEASIBLE;
  }
  return NI_ERROR;
}

template <typename Fn>
ni_status guarded(Fn&& fn) {
  try {
    fn();
    return NI_OK;
  } catch (const Error& e) {
    ni_status status = status_of(e.code());
    record_error(status, e.detail(), e.what(), e.location());
    return status;
  } catch (const std::exception& e) {
    record_error(NI_ERROR, "internal", e.what(), "");
    return NI_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::chrono::milliseconds budget_of(int64_t time_budget_ms) {
  if (time_budget_ms <= 0) {
    time_budget_ms = netinspect::default_time_budget_ms();
  }
  return std::chrono::milliseconds(time_budget_ms);
}

}  // namespace

struct ni_instance {
  std::shared_ptr<const GameInstance> game;
};

struct ni_strategy {
  std::shared_ptr<const GameInstance> game;
  std::variant<InspectionStrategy, AttackStrategy> strategy;

  bool is_defender() const {
    return std::holds_alternative<InspectionStrategy>(strategy);
  }
};

struct ni_equilibrium {
  std::shared_ptr<const GameInstance> game;
  netinspect::EquilibriumResult result;
};

struct ni_disjoint {
  std::shared_ptr<const GameInstance> game;
  netinspect::DisjointProfile profile;
  double value = 0.0;
  InspectionStrategy inspection;
  AttackStrategy attack;
};

struct ni_heuristic {
  std::shared_ptr<const GameInstance> game;
  netinspect::HeuristicOutcome outcome;
};

namespace {

// Strategy handles remember the instance they were built against; using one
// with a structurally different instance is a validation error.
void check_same_instance(const ni_instance* inst, const ni_strategy* s) {
  if (!(*inst->game == *s->game)) {
    netinspect::throw_validation(
        "instance_mismatch", "strategy was built for a different instance");
  }
}

const InspectionStrategy& as_defender(const ni_strategy* s) {
  if (!s->is_defender()) {
    netinspect::throw_validation("wrong_player",
                                 "expected a defender strategy");
  }
  return std::get<InspectionStrategy>(s->strategy);
}

const AttackStrategy& as_attacker(const ni_strategy* s) {
  if (s->is_defender()) {
    netinspect::throw_validation("wrong_player",
                                 "expected an attacker strategy");
  }
  return std::get<AttackStrategy>(s->strategy);
}

ni_strategy* wrap_defender(std::shared_ptr<const GameInstance> game,
                           InspectionStrategy strategy) {
  return new ni_strategy{std::move(game), std::move(strategy)};
}

ni_strategy* wrap_attacker(std::shared_ptr<const GameInstance> game,
                           AttackStrategy strategy) {
  return new ni_strategy{std::move(game), std::move(strategy)};
}

}  // namespace

extern "C" {

const char* ni_last_error_message(void) { return g_last_message.c_str(); }

const char* ni_last_error_json(void) { return g_last_json.c_str(); }

void ni_string_free(char* s) { std::free(s); }

ni_status ni_instance_load(const char* path, ni_instance** out) {
  return guarded([&] {
    auto game = std::make_shared<const GameInstance>(
        netinspect::parse_instance_file(path));
    *out = new ni_instance{std::move(game)};
  });
}

ni_status ni_instance_parse(const char* json_text, ni_instance** out) {
  return guarded([&] {
    auto game = std::make_shared<const GameInstance>(
        netinspect::parse_instance_text(json_text));
    *out = new ni_instance{std::move(game)};
  });
}

ni_status ni_instance_to_json(const ni_instance* inst, char** out_json) {
  return guarded([&] {
    *out_json = copy_string(netinspect::serialize_instance(*inst->game));
  });
}

ni_status ni_instance_generate(uint64_t seed, int nodes, int components,
                               int sensors, int attack_budget, int disjoint,
                               double edge_prob, double acc_min,
                               double acc_max, ni_instance** out) {
  return guarded([&] {
    netinspect::GenParams params;
    params.seed = seed;
    params.nodes = nodes;
    params.components = components;
    params.sensors = sensors;
    params.attack_budget = attack_budget;
    params.disjoint = disjoint != 0;
    params.edge_prob = edge_prob;
    params.acc_min = acc_min;
    params.acc_max = acc_max;
    auto game = std::make_shared<const GameInstance>(
        netinspect::generate_instance(params));
    *out = new ni_instance{std::move(game)};
  });
}

ni_status ni_instance_with_sensor_prefix(const ni_instance* inst, int b1,
                                         ni_instance** out) {
  return guarded([&] {
    auto game = std::make_shared<const GameInstance>(
        netinspect::with_sensor_prefix(*inst->game, b1));
    *out = new ni_instance{std::move(game)};
  });
}

int ni_instance_num_nodes(const ni_instance* inst) {
  return inst->game->num_nodes();
}
int ni_instance_num_components(const ni_instance* inst) {
  return inst->game->num_components();
}
int ni_instance_num_sensors(const ni_instance* inst) {
  return inst->game->num_sensors();
}
int ni_instance_attack_budget(const ni_instance* inst) {
  return inst->game->attack_budget();
}
int ni_instance_is_disjoint(const ni_instance* inst) {
  return inst->game->is_disjoint() ? 1 : 0;
}
void ni_instance_free(ni_instance* inst) { delete inst; }

ni_status ni_strategy_load(const ni_instance* inst, const char* path,
                           ni_strategy** out) {
  return guarded([&] {
    netinspect::ParsedStrategy parsed =
        netinspect::parse_strategy_file(path, *inst->game);
    *out = new ni_strategy{inst->game, std::move(parsed.strategy)};
  });
}

ni_status ni_strategy_parse(const ni_instance* inst, const char* json_text,
                            ni_strategy** out) {
  return guarded([&] {
    netinspect::ParsedStrategy parsed =
        netinspect::parse_strategy_text(json_text, *inst->game);
    *out = new ni_strategy{inst->game, std::move(parsed.strategy)};
  });
}

ni_status ni_strategy_to_json(const ni_strategy* strategy, char** out_json) {
  return guarded([&] {
    if (strategy->is_defender()) {
      *out_json = copy_string(netinspect::serialize_strategy(
          *strategy->game, std::get<InspectionStrategy>(strategy->strategy)));
    } else {
      *out_json = copy_string(netinspect::serialize_strategy(
          *strategy->game, std::get<AttackStrategy>(strategy->strategy)));
    }
  });
}

int ni_strategy_is_defender(const ni_strategy* strategy) {
  return strategy->is_defender() ? 1 : 0;
}

int ni_strategy_support_size(const ni_strategy* strategy) {
  if (strategy->is_defender()) {
    return static_cast<int>(
        std::get<InspectionStrategy>(strategy->strategy).support().size());
  }
  return static_cast<int>(
      std::get<AttackStrategy>(strategy->strategy).support().size());
}

void ni_strategy_free(ni_strategy* strategy) { delete strategy; }

ni_status ni_payoff(const ni_instance* inst, const ni_strategy* defender,
                    const ni_strategy* attacker, double* out_value) {
  return guarded([&] {
    check_same_instance(inst, defender);
    check_same_instance(inst, attacker);
    *out_value = netinspect::payoff(*inst->game, as_defender(defender),
                                    as_attacker(attacker));
  });
}

ni_status ni_worst_case(const ni_instance* inst, const ni_strategy* defender,
                        double* out_value, ni_strategy** out_plan) {
  return guarded([&] {
    check_same_instance(inst, defender);
    auto [value, plan] =
        netinspect::worst_case_evaluation(*inst->game, as_defender(defender));
    *out_value = value;
    if (out_plan != nullptr) {
      *out_plan =
          wrap_attacker(inst->game, AttackStrategy::pure(std::move(plan)));
    }
  });
}

ni_status ni_solve_exact(const ni_instance* inst, int64_t max_matrix_cells,
                         ni_equilibrium** out) {
  return guarded([&] {
    netinspect::EnumCaps caps;
    if (max_matrix_cells > 0) caps.max_cells = max_matrix_cells;
    *out = new ni_equilibrium{inst->game,
                              netinspect::solve_exact(*inst->game, caps)};
  });
}

ni_status ni_solve_colgen(const ni_instance* inst, int greedy_pricing,
                          int64_t max_constraints, ni_equilibrium** out) {
  return guarded([&] {
    netinspect::ColGenCaps caps;
    if (max_constraints > 0) caps.max_constraints = max_constraints;
    auto mode = greedy_pricing != 0 ? netinspect::PricingMode::kGreedy
                                    : netinspect::PricingMode::kEnumerate;
    *out = new ni_equilibrium{
        inst->game,
        netinspect::solve_column_generation(*inst->game, mode, caps)};
  });
}

double ni_equilibrium_value(const ni_equilibrium* eq) {
  return eq->result.value;
}
double ni_equilibrium_defender_gap(const ni_equilibrium* eq) {
  return eq->result.defender_gap;
}
double ni_equilibrium_attacker_gap(const ni_equilibrium* eq) {
  return eq->result.attacker_gap;
}
int ni_equilibrium_certified(const ni_equilibrium* eq) {
  return eq->result.certified ? 1 : 0;
}
int ni_equilibrium_columns_used(const ni_equilibrium* eq) {
  return eq->result.columns_used;
}

ni_status ni_equilibrium_inspection(const ni_equilibrium* eq,
                                    ni_strategy** out) {
  return guarded(
      [&] { *out = wrap_defender(eq->game, eq->result.inspection); });
}

ni_status ni_equilibrium_attack(const ni_equilibrium* eq, ni_strategy** out) {
  return guarded([&] { *out = wrap_attacker(eq->game, eq->result.attack); });
}

void ni_equilibrium_free(ni_equilibrium* eq) { delete eq; }

ni_status ni_solve_disjoint(const ni_instance* inst, ni_disjoint** out) {
  return guarded([&] {
    auto res = std::make_unique<ni_disjoint>();
    res->game = inst->game;
    res->profile = netinspect::make_disjoint_profile(*inst->game);
    res->value = netinspect::game_value_disjoint(*inst->game, res->profile);
    res->inspection =
        netinspect::build_cycling_inspection(*inst->game, res->profile);
    res->attack = netinspect::build_cycling_attack(*inst->game, res->profile);
    *out = res.release();
  });
}

double ni_disjoint_value(const ni_disjoint* res) { return res->value; }
int ni_disjoint_k_star(const ni_disjoint* res) { return res->profile.k_star; }

ni_status ni_disjoint_inspection(const ni_disjoint* res, ni_strategy** out) {
  return guarded([&] { *out = wrap_defender(res->game, res->inspection); });
}

ni_status ni_disjoint_attack(const ni_disjoint* res, ni_strategy** out) {
  return guarded([&] { *out = wrap_attacker(res->game, res->attack); });
}

void ni_disjoint_free(ni_disjoint* res) { delete res; }

ni_status ni_solve_heuristic(const ni_instance* inst, int64_t time_budget_ms,
                             ni_heuristic** out) {
  return guarded([&] {
    *out = new ni_heuristic{
        inst->game,
        netinspect::solve_heuristic(*inst->game, budget_of(time_budget_ms))};
  });
}

double ni_heuristic_worst_case(const ni_heuristic* res) {
  return res->outcome.worst_case;
}
int ni_heuristic_cover_size(const ni_heuristic* res) {
  return res->outcome.cover.size();
}
int ni_heuristic_cover_optimal(const ni_heuristic* res) {
  return res->outcome.cover.optimal ? 1 : 0;
}
int ni_heuristic_k_star(const ni_heuristic* res) {
  return res->outcome.surrogate.k_star;
}
int ni_heuristic_idle_sensors(const ni_heuristic* res) {
  return res->outcome.idle_sensors;
}

ni_status ni_heuristic_inspection(const ni_heuristic* res, ni_strategy** out) {
  return guarded(
      [&] { *out = wrap_defender(res->game, res->outcome.strategy); });
}

ni_status ni_heuristic_worst_plan(const ni_heuristic* res, ni_strategy** out) {
  return guarded([&] {
    *out = wrap_attacker(res->game,
                         AttackStrategy::pure(res->outcome.worst_plan));
  });
}

ni_status ni_heuristic_summary_json(const ni_heuristic* res, char** out_json) {
  return guarded([&] {
    const auto& outcome = res->outcome;
    nlohmann::ordered_json doc;
    nlohmann::ordered_json cover = nlohmann::ordered_json::array();
    for (netinspect::NodeIndex v : outcome.cover.nodes) {
      cover.push_back(res->game->node_id(v));
    }
    doc["cover"] = std::move(cover);
    doc["cover_optimal"] = outcome.cover.optimal;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& [v, set] : outcome.partition.ordered_blocks) {
      blocks.push_back({{"node", res->game->node_id(v)},
                        {"size", set.count()}});
    }
    doc["blocks"] = std::move(blocks);
    doc["k_star"] = outcome.surrogate.k_star;
    doc["idle_sensors"] = outcome.idle_sensors;
    doc["worst_case"] = outcome.worst_case;
    doc["timings_ms"] = {{"cover", outcome.timings.cover_ms},
                         {"partition", outcome.timings.partition_ms},
                         {"construct", outcome.timings.construct_ms},
                         {"evaluate", outcome.timings.evaluate_ms}};
    *out_json = copy_string(doc.dump(2) + "\n");
  });
}

void ni_heuristic_free(ni_heuristic* res) { delete res; }

ni_status ni_verify(const ni_instance* inst, const ni_strategy* defender,
                    const ni_strategy* attacker, double tol,
                    double* out_payoff, double* out_defender_gap,
                    double* out_attacker_gap, int* out_certified) {
  return guarded([&] {
    check_same_instance(inst, defender);
    check_same_instance(inst, attacker);
    netinspect::Certificate cert = netinspect::verify_equilibrium(
        *inst->game, as_defender(defender), as_attacker(attacker), tol);
    *out_payoff = cert.payoff;
    *out_attacker_gap = cert.attacker_gap;
    *out_defender_gap = cert.defender_gap.value_or(-1.0);
    *out_certified = cert.certified ? 1 : 0;
  });
}

ni_status ni_gap_curve(const ni_instance* inst, int b1_lo, int b1_hi,
                       int64_t max_matrix_cells, int64_t time_budget_ms,
                       char** out_csv) {
  return guarded([&] {
    netinspect::EnumCaps caps;
    if (max_matrix_cells > 0) caps.max_cells = max_matrix_cells;
    netinspect::GapCurve curve = netinspect::gap_curve(
        *inst->game, b1_lo, b1_hi, caps, budget_of(time_budget_ms));
    *out_csv = copy_string(curve.to_csv());
  });
}

}  // extern "C"
