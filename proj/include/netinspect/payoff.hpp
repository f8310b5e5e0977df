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

#ifndef NETINSPECT_PAYOFF_HPP_
#define NETINSPECT_PAYOFF_HPP_

#include <vector>

#include "netinspect/types.hpp"

namespace netinspect {

// Probability that an attack on component e goes undetected under the pure
// positioning s: product over sensors of (1 - lambda_k) restricted to sensors
// whose node monitors e. Always in (0,1].
double undetection_probability(const GameInstance& instance,
                               const SensorPositioning& s, ComponentIndex e);

// Expected number of undetected attacks for pure actions.
double payoff(const GameInstance& instance, const SensorPositioning& s,
              const AttackPlan& plan);

// Expected number of undetected attacks under mixed play; bilinear in the two
// strategies and bounded by [0, b2].
double payoff(const GameInstance& instance, const InspectionStrategy& sigma1,
              const AttackStrategy& sigma2);

// Probability that an attack inside E_v is detected under sigma1:
// sum_j lambda_j * P[sensor j sits at v].
double detection_probability(const GameInstance& instance,
                             const InspectionStrategy& sigma1, NodeIndex v);

// Probability that component e is targeted under sigma2.
double attack_probability(const GameInstance& instance,
                          const AttackStrategy& sigma2, ComponentIndex e);

// Per-component undetection probabilities u(e) = sum_s sigma1_s * undet(s, e).
// Shared by the greedy worst-case evaluation and the pricing problems.
std::vector<double> undetection_marginals(const GameInstance& instance,
                                          const InspectionStrategy& sigma1);

// Per-component target probabilities q(e) = sum_{T : e in T} sigma2_T.
std::vector<double> attack_marginals(const GameInstance& instance,
                                     const AttackStrategy& sigma2);

}  // namespace netinspect

#endif  // NETINSPECT_PAYOFF_HPP_
