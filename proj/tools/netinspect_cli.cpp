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

// Command-line front end for the netinspect shared library. Talks to the
// solvers exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "netinspect.h"

namespace {

bool g_json = false;

[[noreturn]] void fail(ni_status status) {
  if (g_json) {
    std::fprintf(stderr, "%s\n", ni_last_error_json());
  } else {
    std::fprintf(stderr, "error: %s\n", ni_last_error_message());
  }
  std::exit(static_cast<int>(status));
}

void check(ni_status status) {
  if (status != NI_OK) fail(status);
}

struct InstanceDeleter {
  void operator()(ni_instance* p) const { ni_instance_free(p); }
};
struct StrategyDeleter {
  void operator()(ni_strategy* p) const { ni_strategy_free(p); }
};
using InstancePtr = std::unique_ptr<ni_instance, InstanceDeleter>;
using StrategyPtr = std::unique_ptr<ni_strategy, StrategyDeleter>;

InstancePtr load_instance(const std::string& path) {
  ni_instance* inst = nullptr;
  check(ni_instance_load(path.c_str(), &inst));
  return InstancePtr(inst);
}

StrategyPtr load_strategy(const ni_instance* inst, const std::string& path) {
  ni_strategy* s = nullptr;
  check(ni_strategy_load(inst, path.c_str(), &s));
  return StrategyPtr(s);
}

std::string strategy_json(const ni_strategy* s) {
  char* text = nullptr;
  check(ni_strategy_to_json(s, &text));
  std::string out(text);
  ni_string_free(text);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(2);
  }
  out << content;
}

// Writes <prefix>.defender.json / <prefix>.attacker.json when requested.
void emit_strategies(const std::string& prefix, const ni_strategy* defender,
                     const ni_strategy* attacker) {
  if (prefix.empty()) return;
  if (defender != nullptr) {
    write_file(prefix + ".defender.json", strategy_json(defender));
  }
  if (attacker != nullptr) {
    write_file(prefix + ".attacker.json", strategy_json(attacker));
  }
}

void parse_range(const std::string& text, int* lo, int* hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      *lo = *hi = std::stoi(text);
    } else {
      *lo = std::stoi(text.substr(0, dots));
      *hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: bad range '%s' (expected LO..HI)\n",
                 text.c_str());
    std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netinspect: solvers for the network inspection game"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output and errors");

  // solve exact|disjoint|heuristic
  auto* solve = app.add_subcommand("solve", "compute inspection strategies");
  solve->require_subcommand(1);

  std::string instance_path;
  std::string out_prefix;
  int64_t cells_cap = 0;
  auto* exact = solve->add_subcommand("exact", "full-enumeration minimax LP");
  exact->add_option("instance", instance_path)->required();
  exact->add_option("--cells-cap", cells_cap, "max payoff-matrix entries");
  exact->add_option("--out-prefix", out_prefix, "write strategy files");

  auto* disjoint =
      solve->add_subcommand("disjoint", "closed form for disjoint sets");
  disjoint->add_option("instance", instance_path)->required();
  disjoint->add_option("--out-prefix", out_prefix);

  int64_t time_budget_ms = 0;
  auto* heuristic =
      solve->add_subcommand("heuristic", "set-cover cycling strategy");
  heuristic->add_option("instance", instance_path)->required();
  heuristic->add_option("--time-budget-ms", time_budget_ms,
                        "set-cover time budget (default "
                        "NETINSPECT_TIME_BUDGET_MS or 10000)");
  heuristic->add_option("--out-prefix", out_prefix);

  auto* colgen = solve->add_subcommand("colgen", "column generation");
  bool greedy_pricing = false;
  int64_t max_constraints = 0;
  colgen->add_option("instance", instance_path)->required();
  colgen->add_flag("--greedy-pricing", greedy_pricing,
                   "price sensor-by-sensor (no optimality certificate)");
  colgen->add_option("--max-constraints", max_constraints);
  colgen->add_option("--out-prefix", out_prefix);

  std::string strategy_path;
  auto* evaluate =
      app.add_subcommand("evaluate", "worst case of a defender strategy");
  evaluate->add_option("instance", instance_path)->required();
  evaluate->add_option("strategy", strategy_path)->required();

  std::string defender_path, attacker_path;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "equilibrium certificate");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("defender", defender_path)->required();
  verify->add_option("attacker", attacker_path)->required();
  verify->add_option("--tol", tol, "certification tolerance");

  std::string b1_range = "1..1";
  std::string csv_out;
  auto* gap =
      app.add_subcommand("gap-curve", "exact vs heuristic sweep over b1");
  gap->add_option("instance", instance_path)->required();
  gap->add_option("--b1", b1_range, "sensor range LO..HI")->required();
  gap->add_option("--cells-cap", cells_cap);
  gap->add_option("--time-budget-ms", time_budget_ms);
  gap->add_option("--out", csv_out, "CSV output path (default stdout)");

  uint64_t seed = 0;
  int gen_nodes = 0, gen_components = 0, gen_sensors = 1, gen_budget = 1;
  std::string mode = "random";
  double edge_prob = 0.3, acc_min = 0.2, acc_max = 1.0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--nodes", gen_nodes)->required();
  gen->add_option("--components", gen_components)->required();
  gen->add_option("--sensors", gen_sensors);
  gen->add_option("--budget", gen_budget);
  gen->add_option("--mode", mode, "disjoint|random");
  gen->add_option("--p", edge_prob, "monitoring-pair probability");
  gen->add_option("--acc-min", acc_min);
  gen->add_option("--acc-max", acc_max);
  gen->add_option("--out", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (exact->parsed() || disjoint->parsed() || heuristic->parsed() ||
      colgen->parsed()) {
    InstancePtr inst = load_instance(instance_path);

    if (exact->parsed() || colgen->parsed()) {
      ni_equilibrium* eq = nullptr;
      if (exact->parsed()) {
        check(ni_solve_exact(inst.get(), cells_cap, &eq));
      } else {
        check(ni_solve_colgen(inst.get(), greedy_pricing ? 1 : 0,
                              max_constraints, &eq));
      }
      ni_strategy* sigma1 = nullptr;
      ni_strategy* sigma2 = nullptr;
      check(ni_equilibrium_inspection(eq, &sigma1));
      check(ni_equilibrium_attack(eq, &sigma2));
      if (g_json) {
        std::printf(
            "{\"value\": %.17g, \"defender_gap\": %.3e, \"attacker_gap\": "
            "%.3e, \"certified\": %s, \"columns_used\": %d}\n",
            ni_equilibrium_value(eq), ni_equilibrium_defender_gap(eq),
            ni_equilibrium_attacker_gap(eq),
            ni_equilibrium_certified(eq) ? "true" : "false",
            ni_equilibrium_columns_used(eq));
      } else {
        std::printf("value: %.12g\n", ni_equilibrium_value(eq));
        std::printf("defender_gap: %.3e\n", ni_equilibrium_defender_gap(eq));
        std::printf("attacker_gap: %.3e\n", ni_equilibrium_attacker_gap(eq));
        std::printf("certified: %s\n",
                    ni_equilibrium_certified(eq) ? "yes" : "no");
        if (ni_equilibrium_columns_used(eq) >= 0) {
          std::printf("columns_used: %d\n", ni_equilibrium_columns_used(eq));
        }
      }
      emit_strategies(out_prefix, sigma1, sigma2);
      ni_strategy_free(sigma1);
      ni_strategy_free(sigma2);
      ni_equilibrium_free(eq);
    } else if (disjoint->parsed()) {
      ni_disjoint* res = nullptr;
      check(ni_solve_disjoint(inst.get(), &res));
      ni_strategy* sigma1 = nullptr;
      ni_strategy* sigma2 = nullptr;
      check(ni_disjoint_inspection(res, &sigma1));
      check(ni_disjoint_attack(res, &sigma2));
      if (g_json) {
        std::printf("{\"value\": %.17g, \"k_star\": %d}\n",
                    ni_disjoint_value(res), ni_disjoint_k_star(res));
      } else {
        std::printf("value: %.12g\n", ni_disjoint_value(res));
        std::printf("k_star: %d\n", ni_disjoint_k_star(res));
      }
      emit_strategies(out_prefix, sigma1, sigma2);
      ni_strategy_free(sigma1);
      ni_strategy_free(sigma2);
      ni_disjoint_free(res);
    } else {
      ni_heuristic* res = nullptr;
      check(ni_solve_heuristic(inst.get(), time_budget_ms, &res));
      ni_strategy* sigma1 = nullptr;
      check(ni_heuristic_inspection(res, &sigma1));
      if (g_json) {
        char* summary = nullptr;
        check(ni_heuristic_summary_json(res, &summary));
        std::fputs(summary, stdout);
        ni_string_free(summary);
      } else {
        std::printf("worst_case: %.12g\n", ni_heuristic_worst_case(res));
        std::printf("cover_size: %d\n", ni_heuristic_cover_size(res));
        std::printf("cover_optimal: %s\n",
                    ni_heuristic_cover_optimal(res) ? "yes" : "no");
        std::printf("k_star: %d\n", ni_heuristic_k_star(res));
        std::printf("idle_sensors: %d\n", ni_heuristic_idle_sensors(res));
      }
      emit_strategies(out_prefix, sigma1, nullptr);
      ni_strategy_free(sigma1);
      ni_heuristic_free(res);
    }
    return 0;
  }

  if (evaluate->parsed()) {
    InstancePtr inst = load_instance(instance_path);
    StrategyPtr sigma1 = load_strategy(inst.get(), strategy_path);
    double value = 0.0;
    ni_strategy* plan = nullptr;
    check(ni_worst_case(inst.get(), sigma1.get(), &value, &plan));
    if (g_json) {
      std::printf("{\"worst_case\": %.17g, \"worst_plan\": %s}",
                  value, strategy_json(plan).c_str());
    } else {
      std::printf("worst_case: %.12g\n", value);
      std::printf("worst_plan: %s", strategy_json(plan).c_str());
    }
    ni_strategy_free(plan);
    return 0;
  }

  if (verify->parsed()) {
    InstancePtr inst = load_instance(instance_path);
    StrategyPtr sigma1 = load_strategy(inst.get(), defender_path);
    StrategyPtr sigma2 = load_strategy(inst.get(), attacker_path);
    double value = 0.0, defender_gap = 0.0, attacker_gap = 0.0;
    int certified = 0;
    check(ni_verify(inst.get(), sigma1.get(), sigma2.get(), tol, &value,
                    &defender_gap, &attacker_gap, &certified));
    if (g_json) {
      std::printf(
          "{\"payoff\": %.17g, \"defender_gap\": %.17g, \"attacker_gap\": "
          "%.17g, \"defender_exact\": %s, \"certified\": %s}\n",
          value, defender_gap, attacker_gap,
          defender_gap >= 0.0 ? "true" : "false",
          certified ? "true" : "false");
    } else {
      std::printf("payoff: %.12g\n", value);
      if (defender_gap >= 0.0) {
        std::printf("defender_gap: %.3e\n", defender_gap);
      } else {
        std::printf("defender_gap: not computed (action set too large)\n");
      }
      std::printf("attacker_gap: %.3e\n", attacker_gap);
      std::printf("certified: %s\n", certified ? "yes" : "no");
    }
    return 0;
  }

  if (gap->parsed()) {
    InstancePtr inst = load_instance(instance_path);
    int lo = 1, hi = 1;
    parse_range(b1_range, &lo, &hi);
    char* csv = nullptr;
    check(ni_gap_curve(inst.get(), lo, hi, cells_cap, time_budget_ms, &csv));
    if (csv_out.empty()) {
      std::fputs(csv, stdout);
    } else {
      write_file(csv_out, csv);
    }
    ni_string_free(csv);
    return 0;
  }

  if (gen->parsed()) {
    if (mode != "disjoint" && mode != "random") {
      std::fprintf(stderr, "error: --mode must be disjoint or random\n");
      return 2;
    }
    ni_instance* inst = nullptr;
    check(ni_instance_generate(seed, gen_nodes, gen_components, gen_sensors,
                               gen_budget, mode == "disjoint" ? 1 : 0,
                               edge_prob, acc_min, acc_max, &inst));
    char* text = nullptr;
    check(ni_instance_to_json(inst, &text));
    if (gen_out.empty()) {
      std::fputs(text, stdout);
    } else {
      write_file(gen_out, text);
    }
    ni_string_free(text);
    ni_instance_free(inst);
    return 0;
  }

  return 0;
}
