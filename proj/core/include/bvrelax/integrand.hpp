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

#ifndef BVRELAX_INTEGRAND_HPP_
#define BVRELAX_INTEGRAND_HPP_

#include <functional>
#include <vector>

namespace bvrelax {

struct SupportLine {
  double slope;      // d_j
  double intercept;  // e_j
};

// Convex, nondecreasing, piecewise-linear f on [0, inf).
//
// Piece k covers [b_{k-1}, b_k] with b_{-1} = 0 and b_K = inf, and has slope
// slopes[k]. The last slope is the recession slope f_inf, which is also the
// global Lipschitz constant.
class Integrand {
 public:
  static Integrand make(double f0, std::vector<double> breakpoints,
                        std::vector<double> slopes);

  // f(t) = t.
  static Integrand identity();

  // The integrand t on [0,1], 2t - 1 beyond.
  static Integrand kinked();

  double operator()(double t) const;

  double f0() const { return f0_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& slopes() const { return slopes_; }
  // Values of f at breakpoints.
  const std::vector<double>& knot_values() const { return knot_values_; }

  // Largest m with m t <= f(t) for all t >= 0.
  double m() const { return m_; }
  // Smallest M with f(t) <= M (1 + t) for all t >= 0.
  double M() const { return M_; }
  double lipschitz() const { return slopes_.back(); }
  double f_inf() const { return slopes_.back(); }

  // f = max over lines on [0, inf), one line per piece.
  std::vector<SupportLine> support_lines() const;

  // Integral over [lo, hi] of f(|alpha + beta x|), exact.
  double integral_abs_affine(double alpha, double beta, double lo,
                             double hi) const;

 private:
  Integrand() = default;

  double f0_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  std::vector<double> knot_values_;
  double m_ = 0.0;
  double M_ = 0.0;
};

struct ChordApproximation {
  Integrand integrand;
  double max_chord_error;
};

// Piecewise-linear interpolant of a convex nondecreasing f on grid points
// 0 = t_0 < t_1 < ... < t_N, continued with tail_slope beyond t_N. The chord
// error is sampled on each grid interval.
ChordApproximation chord_approximation(const std::function<double(double)>& f,
                                       const std::vector<double>& grid,
                                       double tail_slope);

}  // namespace bvrelax

#endif  // BVRELAX_INTEGRAND_HPP_
