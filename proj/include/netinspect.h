/* Copyright 2026 The netinspect Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the netinspect solvers. All objects are opaque handles
 * owned by the library; every fallible call returns an ni_status and leaves
 * a thread-local error description retrievable via ni_last_error_message()
 * / ni_last_error_json(). Strings returned through char** are allocated by
 * the library and must be released with ni_string_free().
 */

#ifndef NETINSPECT_H_
#define NETINSPECT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ni_instance ni_instance;
typedef struct ni_strategy ni_strategy;
typedef struct ni_equilibrium ni_equilibrium;
typedef struct ni_disjoint ni_disjoint;
typedef struct ni_heuristic ni_heuristic;

typedef enum ni_status {
  NI_OK = 0,
  NI_ERROR = 1,            /* unexpected internal failure */
  NI_ERR_VALIDATION = 2,   /* malformed or inconsistent input */
  NI_ERR_SIZE_CAP = 3,     /* action sets exceed the configured caps */
  NI_ERR_NUMERIC = 4,      /* solver failed to converge */
  NI_ERR_INFEASIBLE = 5    /* mode not applicable (e.g. overlapping sets) */
} ni_status;

/* Human-readable message for the last error on this thread. */
const char* ni_last_error_message(void);
/* Machine-readable payload: {"code":..., "detail":..., "message":...,
 * "location":...}. */
const char* ni_last_error_json(void);

void ni_string_free(char* s);

/* ---- instances ---------------------------------------------------- */

ni_status ni_instance_load(const char* path, ni_instance** out);
ni_status ni_instance_parse(const char* json_text, ni_instance** out);
ni_status ni_instance_to_json(const ni_instance* inst, char** out_json);
ni_status ni_instance_generate(uint64_t seed, int nodes, int components,
                               int sensors, int attack_budget, int disjoint,
                               double edge_prob, double acc_min,
                               double acc_max, ni_instance** out);
/* Copy keeping only the first b1 (most accurate) sensors. */
ni_status ni_instance_with_sensor_prefix(const ni_instance* inst, int b1,
                                         ni_instance** out);
int ni_instance_num_nodes(const ni_instance* inst);
int ni_instance_num_components(const ni_instance* inst);
int ni_instance_num_sensors(const ni_instance* inst);
int ni_instance_attack_budget(const ni_instance* inst);
int ni_instance_is_disjoint(const ni_instance* inst);
void ni_instance_free(ni_instance* inst);

/* ---- strategies ---------------------------------------------------- */

ni_status ni_strategy_load(const ni_instance* inst, const char* path,
                           ni_strategy** out);
ni_status ni_strategy_parse(const ni_instance* inst, const char* json_text,
                            ni_strategy** out);
ni_status ni_strategy_to_json(const ni_strategy* strategy, char** out_json);
int ni_strategy_is_defender(const ni_strategy* strategy);
int ni_strategy_support_size(const ni_strategy* strategy);
void ni_strategy_free(ni_strategy* strategy);

/* ---- payoff and evaluation ----------------------------------------- */

ni_status ni_payoff(const ni_instance* inst, const ni_strategy* defender,
                    const ni_strategy* attacker, double* out_value);
/* Exact worst case of a defender strategy; out_plan (optional) receives the
 * attaining pure attack plan. */
ni_status ni_worst_case(const ni_instance* inst, const ni_strategy* defender,
                        double* out_value, ni_strategy** out_plan);

/* ---- exact solvers -------------------------------------------------- */

/* max_matrix_cells <= 0 selects the default cap of 2e6 payoff entries. */
ni_status ni_solve_exact(const ni_instance* inst, int64_t max_matrix_cells,
                         ni_equilibrium** out);
/* greedy_pricing != 0 prices sensor-by-sensor (no optimality certificate);
 * max_constraints <= 0 selects the default cap of 5e4 attack plans. */
ni_status ni_solve_colgen(const ni_instance* inst, int greedy_pricing,
                          int64_t max_constraints, ni_equilibrium** out);
double ni_equilibrium_value(const ni_equilibrium* eq);
double ni_equilibrium_defender_gap(const ni_equilibrium* eq);
double ni_equilibrium_attacker_gap(const ni_equilibrium* eq);
int ni_equilibrium_certified(const ni_equilibrium* eq);
int ni_equilibrium_columns_used(const ni_equilibrium* eq); /* -1 for full LP */
ni_status ni_equilibrium_inspection(const ni_equilibrium* eq,
                                    ni_strategy** out);
ni_status ni_equilibrium_attack(const ni_equilibrium* eq, ni_strategy** out);
void ni_equilibrium_free(ni_equilibrium* eq);

/* ---- closed-form solver (disjoint monitoring sets) ------------------ */

ni_status ni_solve_disjoint(const ni_instance* inst, ni_disjoint** out);
double ni_disjoint_value(const ni_disjoint* res);
int ni_disjoint_k_star(const ni_disjoint* res);
ni_status ni_disjoint_inspection(const ni_disjoint* res, ni_strategy** out);
ni_status ni_disjoint_attack(const ni_disjoint* res, ni_strategy** out);
void ni_disjoint_free(ni_disjoint* res);

/* ---- set-cover heuristic -------------------------------------------- */

/* time_budget_ms <= 0 selects NETINSPECT_TIME_BUDGET_MS or 10000. */
ni_status ni_solve_heuristic(const ni_instance* inst, int64_t time_budget_ms,
                             ni_heuristic** out);
double ni_heuristic_worst_case(const ni_heuristic* res);
int ni_heuristic_cover_size(const ni_heuristic* res);
int ni_heuristic_cover_optimal(const ni_heuristic* res);
int ni_heuristic_k_star(const ni_heuristic* res);
int ni_heuristic_idle_sensors(const ni_heuristic* res);
ni_status ni_heuristic_inspection(const ni_heuristic* res, ni_strategy** out);
ni_status ni_heuristic_worst_plan(const ni_heuristic* res, ni_strategy** out);
/* Surrogate summary: cover, ordered block sizes, k*, worst case, timings. */
ni_status ni_heuristic_summary_json(const ni_heuristic* res, char** out_json);
void ni_heuristic_free(ni_heuristic* res);

/* ---- verification ---------------------------------------------------- */

/* defender_gap is set to a negative value when the defender side could not
 * be enumerated (partial certificate: attacker side only). */
ni_status ni_verify(const ni_instance* inst, const ni_strategy* defender,
                    const ni_strategy* attacker, double tol,
                    double* out_payoff, double* out_defender_gap,
                    double* out_attacker_gap, int* out_certified);

/* ---- benchmark harness ----------------------------------------------- */

ni_status ni_gap_curve(const ni_instance* inst, int b1_lo, int b1_hi,
                       int64_t max_matrix_cells, int64_t time_budget_ms,
                       char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* NETINSPECT_H_ */
