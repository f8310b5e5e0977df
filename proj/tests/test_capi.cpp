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

// Exercises the shared-library surface exactly the way an external client
// would: through handles, status codes and JSON strings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "netinspect.h"

#ifndef NETINSPECT_DATA_DIR
#define NETINSPECT_DATA_DIR "data"
#endif

namespace {

std::string data_path(const std::string& name) {
  return std::string(NETINSPECT_DATA_DIR) + "/" + name;
}

ni_instance* must_load(const std::string& path) {
  ni_instance* inst = nullptr;
  REQUIRE(ni_instance_load(path.c_str(), &inst) == NI_OK);
  return inst;
}

TEST_CASE("loading and inspecting the bundled instances") {
  ni_instance* fig = must_load(data_path("figure1.json"));
  CHECK(ni_instance_num_nodes(fig) == 5);
  CHECK(ni_instance_num_components(fig) == 9);
  CHECK(ni_instance_num_sensors(fig) == 2);
  CHECK(ni_instance_attack_budget(fig) == 2);
  CHECK(ni_instance_is_disjoint(fig) == 0);

  char* text = nullptr;
  REQUIRE(ni_instance_to_json(fig, &text) == NI_OK);
  ni_instance* reparsed = nullptr;
  REQUIRE(ni_instance_parse(text, &reparsed) == NI_OK);
  CHECK(ni_instance_num_components(reparsed) == 9);
  ni_string_free(text);
  ni_instance_free(reparsed);
  ni_instance_free(fig);
}

TEST_CASE("missing files and bad documents map to validation status") {
  ni_instance* inst = nullptr;
  CHECK(ni_instance_load("/nonexistent/x.json", &inst) == NI_ERR_VALIDATION);
  CHECK(std::strlen(ni_last_error_message()) > 0);
  CHECK(std::string(ni_last_error_json()).find("\"detail\"") !=
        std::string::npos);

  CHECK(ni_instance_parse("{broken", &inst) == NI_ERR_VALIDATION);
  CHECK(std::string(ni_last_error_json()).find("parse_error") !=
        std::string::npos);
}

TEST_CASE("disjoint solve fails with NI_ERR_INFEASIBLE on overlap") {
  ni_instance* fig = must_load(data_path("figure1.json"));
  ni_disjoint* res = nullptr;
  CHECK(ni_solve_disjoint(fig, &res) == NI_ERR_INFEASIBLE);
  ni_instance_free(fig);
}

TEST_CASE("size caps surface as NI_ERR_SIZE_CAP") {
  ni_instance* ex2 = must_load(data_path("example2.json"));
  ni_equilibrium* eq = nullptr;
  CHECK(ni_solve_exact(ex2, 100, &eq) == NI_ERR_SIZE_CAP);
  ni_instance_free(ex2);
}

TEST_CASE("example-2 closed form through the C surface") {
  ni_instance* ex2 = must_load(data_path("example2.json"));
  ni_disjoint* res = nullptr;
  REQUIRE(ni_solve_disjoint(ex2, &res) == NI_OK);
  CHECK(std::abs(ni_disjoint_value(res) - 5.4) <= 1e-12);
  CHECK(ni_disjoint_k_star(res) == 3);

  ni_strategy* sigma1 = nullptr;
  ni_strategy* sigma2 = nullptr;
  REQUIRE(ni_disjoint_inspection(res, &sigma1) == NI_OK);
  REQUIRE(ni_disjoint_attack(res, &sigma2) == NI_OK);
  CHECK(ni_strategy_is_defender(sigma1) == 1);
  CHECK(ni_strategy_is_defender(sigma2) == 0);
  CHECK(ni_strategy_support_size(sigma1) == 3);
  CHECK(ni_strategy_support_size(sigma2) == 3);

  double value = 0.0;
  REQUIRE(ni_payoff(ex2, sigma1, sigma2, &value) == NI_OK);
  CHECK(std::abs(value - 5.4) <= 1e-12);

  double payoff = 0.0, dgap = 0.0, agap = 0.0;
  int certified = 0;
  REQUIRE(ni_verify(ex2, sigma1, sigma2, 1e-9, &payoff, &dgap, &agap,
                    &certified) == NI_OK);
  CHECK(certified == 1);
  CHECK(dgap >= 0.0);
  CHECK(dgap <= 1e-9);
  CHECK(agap <= 1e-9);

  // Round-trip the inspection strategy through its JSON form.
  char* text = nullptr;
  REQUIRE(ni_strategy_to_json(sigma1, &text) == NI_OK);
  ni_strategy* back = nullptr;
  REQUIRE(ni_strategy_parse(ex2, text, &back) == NI_OK);
  CHECK(ni_strategy_support_size(back) == 3);
  double worst = 0.0;
  REQUIRE(ni_worst_case(ex2, back, &worst, nullptr) == NI_OK);
  CHECK(std::abs(worst - 5.4) <= 1e-12);
  ni_string_free(text);
  ni_strategy_free(back);

  ni_strategy_free(sigma1);
  ni_strategy_free(sigma2);
  ni_disjoint_free(res);
  ni_instance_free(ex2);
}

TEST_CASE("exact, heuristic and colgen agree on the figure-1 instance") {
  ni_instance* fig = must_load(data_path("figure1.json"));

  ni_equilibrium* eq = nullptr;
  REQUIRE(ni_solve_exact(fig, 0, &eq) == NI_OK);
  CHECK(ni_equilibrium_certified(eq) == 1);
  double value = ni_equilibrium_value(eq);

  ni_equilibrium* cg = nullptr;
  REQUIRE(ni_solve_colgen(fig, 0, 0, &cg) == NI_OK);
  CHECK(std::abs(ni_equilibrium_value(cg) - value) <= 1e-9);
  CHECK(ni_equilibrium_columns_used(cg) >= 1);

  ni_equilibrium* greedy = nullptr;
  REQUIRE(ni_solve_colgen(fig, 1, 0, &greedy) == NI_OK);
  CHECK(ni_equilibrium_certified(greedy) == 0);  // greedy pricing: no proof
  CHECK(std::abs(ni_equilibrium_value(greedy) - value) <= 1e-6);
  ni_equilibrium_free(greedy);

  ni_heuristic* h = nullptr;
  REQUIRE(ni_solve_heuristic(fig, 0, &h) == NI_OK);
  CHECK(ni_heuristic_worst_case(h) >= value - 1e-9);
  CHECK(ni_heuristic_cover_size(h) == 4);
  CHECK(ni_heuristic_cover_optimal(h) == 1);

  ni_strategy* worst_plan = nullptr;
  REQUIRE(ni_heuristic_worst_plan(h, &worst_plan) == NI_OK);
  CHECK(ni_strategy_is_defender(worst_plan) == 0);
  CHECK(ni_strategy_support_size(worst_plan) == 1);
  ni_strategy_free(worst_plan);

  char* summary = nullptr;
  REQUIRE(ni_heuristic_summary_json(h, &summary) == NI_OK);
  CHECK(std::string(summary).find("\"k_star\"") != std::string::npos);
  ni_string_free(summary);

  ni_heuristic_free(h);
  ni_equilibrium_free(cg);
  ni_equilibrium_free(eq);
  ni_instance_free(fig);
}

TEST_CASE("strategies refuse to cross instances") {
  ni_instance* fig = must_load(data_path("figure1.json"));
  ni_instance* ex2 = must_load(data_path("example2.json"));
  ni_disjoint* res = nullptr;
  REQUIRE(ni_solve_disjoint(ex2, &res) == NI_OK);
  ni_strategy* sigma1 = nullptr;
  REQUIRE(ni_disjoint_inspection(res, &sigma1) == NI_OK);

  double value = 0.0;
  CHECK(ni_worst_case(fig, sigma1, &value, nullptr) == NI_ERR_VALIDATION);
  CHECK(std::string(ni_last_error_json()).find("instance_mismatch") !=
        std::string::npos);

  ni_strategy_free(sigma1);
  ni_disjoint_free(res);
  ni_instance_free(ex2);
  ni_instance_free(fig);
}

TEST_CASE("generation and gap curves through the C surface") {
  ni_instance* inst = nullptr;
  REQUIRE(ni_instance_generate(3, 6, 8, 2, 2, 0, 0.4, 0.2, 1.0, &inst) ==
          NI_OK);
  char* csv = nullptr;
  REQUIRE(ni_gap_curve(inst, 1, 2, 0, 0, &csv) == NI_OK);
  std::string text(csv);
  CHECK(text.substr(0, 3) == "b1,");
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  ni_string_free(csv);
  ni_instance_free(inst);

  // Infeasible generator parameters.
  CHECK(ni_instance_generate(1, 4, 3, 1, 1, 1, 0.3, 0.2, 1.0, &inst) ==
        NI_ERR_VALIDATION);
}

}  // namespace
