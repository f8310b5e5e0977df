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

#include "netinspect/simplex.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace netinspect {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-10;
constexpr double kProgressEps = 1e-13;

}  // namespace

SimplexResult simplex_maximize(const std::vector<double>& a_rowmajor, int m,
                               int n, const std::vector<double>& b,
                               const std::vector<double>& c) {
  assert(static_cast<int>(a_rowmajor.size()) == m * n);
  assert(static_cast<int>(b.size()) == m);
  assert(static_cast<int>(c.size()) == n);

  // Tableau over [structural | slack | rhs]; row m is the reduced-cost row.
  const int width = n + m + 1;
  const int rhs = n + m;
  std::vector<double> t(static_cast<size_t>(m + 1) * width, 0.0);
  auto row = [&](int i) { return t.data() + static_cast<size_t>(i) * width; };

  for (int i = 0; i < m; ++i) {
    assert(b[i] >= 0.0);
    double* r = row(i);
    for (int j = 0; j < n; ++j) r[j] = a_rowmajor[static_cast<size_t>(i) * n + j];
    r[n + i] = 1.0;
    r[rhs] = b[i];
  }
  for (int j = 0; j < n; ++j) row(m)[j] = -c[j];

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  SimplexResult result;
  const int64_t stall_limit = 5LL * (m + n);
  const int64_t iteration_limit = 200LL * (m + n) + 20000;
  int64_t stalled = 0;
  double last_objective = 0.0;

  for (;;) {
    const double* z = row(m);

    int entering = -1;
    if (!result.bland_engaged) {
      double most_negative = -kCostEps;
      for (int j = 0; j < n + m; ++j) {
        if (z[j] < most_negative) {
          most_negative = z[j];
          entering = j;
        }
      }
    } else {
      for (int j = 0; j < n + m; ++j) {
        if (z[j] < -kCostEps) {
          entering = j;
          break;
        }
      }
    }
    if (entering < 0) {
      result.status = SimplexResult::Status::kOptimal;
      break;
    }

    // Ratio test. Degenerate ties are the norm here (b is all-ones), and
    // pivoting on a near-zero element in a tied row wrecks the tableau, so
    // ties prefer the largest pivot magnitude. Under Bland's rule the
    // smallest basis index wins instead, preserving the anti-cycling order.
    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double a = row(i)[entering];
      if (a > kPivotEps && row(i)[rhs] / a < best_ratio) {
        best_ratio = row(i)[rhs] / a;
      }
    }
    if (best_ratio == std::numeric_limits<double>::infinity()) {
      result.status = SimplexResult::Status::kUnbounded;
      break;
    }
    const double tie_limit = best_ratio + 1e-9 * (1.0 + std::abs(best_ratio));
    for (int i = 0; i < m; ++i) {
      double a = row(i)[entering];
      if (a <= kPivotEps || row(i)[rhs] / a > tie_limit) continue;
      if (leaving < 0) {
        leaving = i;
      } else if (result.bland_engaged) {
        if (basis[i] < basis[leaving]) leaving = i;
      } else if (a > row(leaving)[entering] ||
                 (a == row(leaving)[entering] && basis[i] < basis[leaving])) {
        leaving = i;
      }
    }

    // Pivot.
    double* pr = row(leaving);
    const double inv = 1.0 / pr[entering];
    for (int j = 0; j < width; ++j) pr[j] *= inv;
    pr[entering] = 1.0;
    for (int i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      double* r = row(i);
      double factor = r[entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) r[j] -= factor * pr[j];
      r[entering] = 0.0;
    }
    basis[leaving] = entering;

    ++result.iterations;
    double objective = row(m)[rhs];
    if (objective > last_objective + kProgressEps) {
      last_objective = objective;
      stalled = 0;
    } else if (++stalled >= stall_limit) {
      result.bland_engaged = true;
    }
    if (result.iterations >= iteration_limit) {
      result.status = SimplexResult::Status::kIterationLimit;
      break;
    }
  }

  result.objective = row(m)[rhs];
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = row(i)[rhs];
  }
  // Duals are the reduced costs of the slack columns at optimality.
  result.duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) result.duals[i] = row(m)[n + i];
  return result;
}

}  // namespace netinspect
