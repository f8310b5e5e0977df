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

#ifndef NETINSPECT_RATIONAL_HPP_
#define NETINSPECT_RATIONAL_HPP_

#include <cassert>
#include <cstdint>
#include <numeric>

namespace netinspect {

// Exact rational with int64 numerator/denominator. The equilibrium marginal
// checks compare quantities like (b2 - tail)/k* against integer set sizes;
// doing that in floating point produces spurious 1e-12 failures.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational of(int64_t n, int64_t d) {
    assert(d != 0);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  static Rational of(int64_t n) { return Rational{n, 1}; }

  int64_t floor() const {
    int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  bool is_integer() const { return num % den == 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }
};

}  // namespace netinspect

#endif  // NETINSPECT_RATIONAL_HPP_
