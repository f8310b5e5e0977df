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

#ifndef NETINSPECT_SIMPLEX_HPP_
#define NETINSPECT_SIMPLEX_HPP_

#include <cstdint>
#include <vector>

namespace netinspect {

// Dense tableau simplex for
//
//   maximize c.x   subject to   A x <= b,  x >= 0,  with  b >= 0.
//
// The all-slack basis is feasible, so no phase-1 is needed; the game solver
// arranges its LPs to fit this form. Pivoting is Dantzig with lowest-index
// tie-breaks; Bland's rule takes over permanently after 5*(m+n) iterations
// without objective progress, which game matrices trigger routinely through
// degenerate ties.
struct SimplexResult {
  enum class Status { kOptimal, kIterationLimit, kUnbounded };

  Status status = Status::kOptimal;
  double objective = 0.0;
  std::vector<double> x;      // primal solution, length n
  std::vector<double> duals;  // one multiplier per row, length m
  int64_t iterations = 0;
  bool bland_engaged = false;
};

SimplexResult simplex_maximize(const std::vector<double>& a_rowmajor, int m,
                               int n, const std::vector<double>& b,
                               const std::vector<double>& c);

}  // namespace netinspect

#endif  // NETINSPECT_SIMPLEX_HPP_
