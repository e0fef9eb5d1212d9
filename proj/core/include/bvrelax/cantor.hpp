// Copyright 2026 The bvrelax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BVRELAX_CANTOR_HPP_
#define BVRELAX_CANTOR_HPP_

#include <vector>

#include "bvrelax/rational.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

// Level m of the fat Cantor construction on [0,1]. Step i removes from each
// level-(i-1) interval its open middle part of length 4^-i.
struct CantorLevel {
  int m = 0;
  // The 2^m closed intervals of A_m, as (lo, hi) pairs, sorted.
  std::vector<Interval> intervals;
  // gaps[i-1] holds the 2^(i-1) open intervals of B_i, sorted.
  std::vector<std::vector<Interval>> gaps;
  Rational alpha;  // L1(A_m)
};

Rational cantor_alpha(int m);
// Length of one level-j interval, alpha_j / 2^j.
Rational cantor_interval_length(int j);
CantorLevel cantor_intervals(int m);

struct CantorMeasureValue {
  Rational value;
  Rational error_bound;
};

// L1(A intersect [0,x]) where A is the limit set, by descending the
// construction tree to the given depth. Exact at level-depth endpoints.
CantorMeasureValue cantor_measure_upto(const Rational& x, int depth);
double cantor_measure_upto(double x, int depth);

// Integral over [lo,hi] of t -> L1(A intersect [0,t]); error at most
// (hi - lo) 2^-depth-1.
double cantor_measure_integral(double lo, double hi, int depth);

// L1(A intersect [lo,hi]).
double cantor_set_length(double lo, double hi, int depth);

// u(x) = scale L1(A intersect [0,x]); scale 2 gives u(1) = 1.
class CantorFunction {
 public:
  explicit CantorFunction(double scale = 2.0, int depth = 28)
      : scale_(scale), depth_(depth) {}

  double scale() const { return scale_; }
  int depth() const { return depth_; }
  double operator()(double x) const;
  Rational exact(const Rational& x) const;
  // Integral over [lo,hi] of u dx.
  double integral(double lo, double hi) const;

 private:
  double scale_;
  int depth_;
};

// [0,1] with weight 2 on A_m and 1 on the gaps B_1..B_m.
WeightedIntervalSpace cantor_space(int m);

}  // namespace bvrelax

#endif  // BVRELAX_CANTOR_HPP_
