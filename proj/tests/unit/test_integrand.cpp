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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bvrelax/corpus.hpp"
#include "bvrelax/integrand.hpp"

namespace bvrelax {
namespace {

TEST(Integrand, KinkedExample) {
  Integrand f = Integrand::make(0.0, {1.0}, {1.0, 2.0});
  EXPECT_DOUBLE_EQ(f(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f(2.0), 3.0);
  EXPECT_DOUBLE_EQ(f(0.0), 0.0);
  EXPECT_DOUBLE_EQ(f.f_inf(), 2.0);
  Integrand k = Integrand::kinked();
  for (double t : {0.0, 0.5, 1.0, 1.5, 7.0}) EXPECT_DOUBLE_EQ(k(t), f(t));
}

TEST(Integrand, IdentityAndAffine) {
  Integrand id = Integrand::identity();
  EXPECT_DOUBLE_EQ(id(2.5), 2.5);
  EXPECT_DOUBLE_EQ(id.f_inf(), 1.0);
  Integrand aff = Integrand::make(1.0, {}, {1.0});
  EXPECT_DOUBLE_EQ(aff(3.0), 4.0);
  EXPECT_DOUBLE_EQ(aff.m(), 1.0);
  EXPECT_DOUBLE_EQ(aff.M(), 1.0);
}

TEST(Integrand, SupportLines) {
  auto lines = Integrand::kinked().support_lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_DOUBLE_EQ(lines[0].slope, 1.0);
  EXPECT_DOUBLE_EQ(lines[0].intercept, 0.0);
  EXPECT_DOUBLE_EQ(lines[1].slope, 2.0);
  EXPECT_DOUBLE_EQ(lines[1].intercept, -1.0);
  ASSERT_EQ(Integrand::identity().support_lines().size(), 1u);

  Integrand three = Integrand::make(0.0, {1.0, 2.0}, {0.5, 1.0, 2.0});
  ASSERT_EQ(three.support_lines().size(), 3u);
  EXPECT_DOUBLE_EQ(three(1.5), 1.0);
}

TEST(Integrand, RejectsInvalidData) {
  EXPECT_THROW(Integrand::make(0.0, {1.0}, {2.0, 1.0}), std::invalid_argument);  // concave
  EXPECT_THROW(Integrand::make(0.0, {}, {0.0}), std::invalid_argument);         // no linear growth
  EXPECT_THROW(Integrand::make(-1.0, {}, {1.0}), std::invalid_argument);
  EXPECT_THROW(Integrand::make(0.0, {2.0, 1.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(Integrand::make(0.0, {1.0}, {1.0}), std::invalid_argument);
}

// Properties over random integrands: growth bounds, the recession estimate,
// the support-line representation and the exact affine integral.
TEST(IntegrandProperty, GrowthRecessionAndSupportLines) {
  Rng rng(7);
  std::uniform_real_distribution<double> t_dist(0.0, 20.0);
  for (int c = 0; c < 200; ++c) {
    Integrand f = random_integrand(rng);
    auto lines = f.support_lines();
    for (int s = 0; s < 50; ++s) {
      double t = t_dist(rng);
      double v = f(t);
      EXPECT_LE(f.m() * t, v + 1e-12);
      EXPECT_LE(v, f.M() * (1.0 + t) + 1e-12);
      EXPECT_LE(v, f.f0() + t * f.f_inf() + 1e-12);
      double sup = -1e300;
      for (const auto& l : lines) sup = std::max(sup, l.slope * t + l.intercept);
      EXPECT_NEAR(sup, v, 1e-12 * (1.0 + v));
      double s2 = t_dist(rng);
      EXPECT_LE(f(0.5 * (t + s2)), 0.5 * (f(t) + f(s2)) + 1e-12);
    }
  }
}

TEST(IntegrandProperty, AffineIntegralMatchesQuadrature) {
  Rng rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int c = 0; c < 50; ++c) {
    Integrand f = random_integrand(rng);
    double alpha = u(rng), beta = u(rng), lo = -0.5, hi = 1.0;
    const int n = 200000;
    double h = (hi - lo) / n, q = 0.0;
    for (int k = 0; k < n; ++k) q += f(std::fabs(alpha + beta * (lo + (k + 0.5) * h))) * h;
    EXPECT_NEAR(f.integral_abs_affine(alpha, beta, lo, hi), q, 1e-6 * (1.0 + std::fabs(q)));
  }
}

TEST(Integrand, ChordApproximationOfConvexFunction) {
  auto sq = [](double t) { return t * t; };
  std::vector<double> grid;
  for (int k = 0; k <= 16; ++k) grid.push_back(k / 8.0);
  ChordApproximation c = chord_approximation(sq, grid, 4.0);
  EXPECT_NEAR(c.max_chord_error, 1.0 / 256.0, 1e-6);  // h^2/4 with h = 1/8
  EXPECT_DOUBLE_EQ(c.integrand(1.0), 1.0);
  EXPECT_DOUBLE_EQ(c.integrand.f_inf(), 4.0);
}

}  // namespace
}  // namespace bvrelax
