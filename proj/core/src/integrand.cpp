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

#include "bvrelax/integrand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bvrelax {

Integrand Integrand::make(double f0, std::vector<double> breakpoints,
                          std::vector<double> slopes) {
  if (!std::isfinite(f0) || f0 < 0.0) {
    throw std::invalid_argument("integrand: f0 must be finite and >= 0");
  }
  if (slopes.size() != breakpoints.size() + 1) {
    throw std::invalid_argument(
        "integrand: need exactly one more slope than breakpoints");
  }
  for (size_t k = 0; k < breakpoints.size(); ++k) {
    if (!std::isfinite(breakpoints[k]) || breakpoints[k] <= 0.0 ||
        (k > 0 && breakpoints[k] <= breakpoints[k - 1])) {
      throw std::invalid_argument(
          "integrand: breakpoints must be positive and strictly increasing");
    }
  }
  for (size_t k = 0; k < slopes.size(); ++k) {
    if (!std::isfinite(slopes[k]) || slopes[k] < 0.0) {
      throw std::invalid_argument("integrand: slopes must be finite and >= 0");
    }
    if (k > 0 && slopes[k] < slopes[k - 1]) {
      throw std::invalid_argument("integrand: slopes must be nondecreasing");
    }
  }

  Integrand f;
  f.f0_ = f0;
  f.breakpoints_ = std::move(breakpoints);
  f.slopes_ = std::move(slopes);
  f.knot_values_.resize(f.breakpoints_.size());
  double value = f0;
  double prev = 0.0;
  for (size_t k = 0; k < f.breakpoints_.size(); ++k) {
    value += f.slopes_[k] * (f.breakpoints_[k] - prev);
    f.knot_values_[k] = value;
    prev = f.breakpoints_[k];
  }

  // f(t)/t is monotone on each piece, so its infimum sits at a knot, at
  // t -> 0 (only finite when f0 = 0) or at t -> inf.
  double m = f.slopes_.back();
  if (f0 == 0.0) m = std::min(m, f.slopes_.front());
  for (size_t k = 0; k < f.breakpoints_.size(); ++k) {
    m = std::min(m, f.knot_values_[k] / f.breakpoints_[k]);
  }
  if (!(m > 0.0)) {
    throw std::invalid_argument(
        "integrand: derived growth constant m is not positive");
  }
  f.m_ = m;

  // Same argument for f(t)/(1+t), whose endpoint values are f0 and f_inf.
  double M = std::max(f0, f.slopes_.back());
  for (size_t k = 0; k < f.breakpoints_.size(); ++k) {
    M = std::max(M, f.knot_values_[k] / (1.0 + f.breakpoints_[k]));
  }
  f.M_ = M;
  return f;
}

Integrand Integrand::identity() { return make(0.0, {}, {1.0}); }

Integrand Integrand::kinked() { return make(0.0, {1.0}, {1.0, 2.0}); }

double Integrand::operator()(double t) const {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("integrand: argument must be >= 0, got " +
                                std::to_string(t));
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  size_t k = static_cast<size_t>(it - breakpoints_.begin());
  double base_t = k == 0 ? 0.0 : breakpoints_[k - 1];
  double base_v = k == 0 ? f0_ : knot_values_[k - 1];
  return base_v + slopes_[k] * (t - base_t);
}

std::vector<SupportLine> Integrand::support_lines() const {
  std::vector<SupportLine> lines;
  lines.reserve(slopes_.size());
  for (size_t k = 0; k < slopes_.size(); ++k) {
    double base_t = k == 0 ? 0.0 : breakpoints_[k - 1];
    double base_v = k == 0 ? f0_ : knot_values_[k - 1];
    lines.push_back({slopes_[k], base_v - slopes_[k] * base_t});
  }
  return lines;
}

double Integrand::integral_abs_affine(double alpha, double beta, double lo,
                                      double hi) const {
  if (hi <= lo) return 0.0;
  // Split where |alpha + beta x| crosses 0 or a breakpoint; f(|.|) is affine
  // in between, so the midpoint rule is exact on each piece.
  std::vector<double> cuts{lo, hi};
  if (beta != 0.0) {
    auto add = [&](double level) {
      for (double s : {level, -level}) {
        double x = (s - alpha) / beta;
        if (x > lo && x < hi) cuts.push_back(x);
      }
    };
    add(0.0);
    for (double b : breakpoints_) add(b);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    double a = cuts[j];
    double b = cuts[j + 1];
    if (b <= a) continue;
    double mid = 0.5 * (a + b);
    total += (*this)(std::fabs(alpha + beta * mid)) * (b - a);
  }
  return total;
}

ChordApproximation chord_approximation(const std::function<double(double)>& f,
                                       const std::vector<double>& grid,
                                       double tail_slope) {
  if (grid.size() < 1 || grid.front() != 0.0) {
    throw std::invalid_argument("chord approximation: grid must start at 0");
  }
  std::vector<double> breakpoints(grid.begin() + 1, grid.end());
  std::vector<double> slopes;
  for (size_t k = 0; k + 1 < grid.size(); ++k) {
    slopes.push_back((f(grid[k + 1]) - f(grid[k])) / (grid[k + 1] - grid[k]));
  }
  slopes.push_back(tail_slope);
  Integrand g = Integrand::make(f(0.0), breakpoints, slopes);
  constexpr int kSamples = 64;
  double err = 0.0;
  for (size_t k = 0; k + 1 < grid.size(); ++k) {
    for (int s = 1; s < kSamples; ++s) {
      double t = grid[k] + (grid[k + 1] - grid[k]) * s / kSamples;
      err = std::max(err, std::fabs(g(t) - f(t)));
    }
  }
  return {std::move(g), err};
}

}  // namespace bvrelax
