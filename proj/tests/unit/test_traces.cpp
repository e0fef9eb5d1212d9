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

#include <gtest/gtest.h>

#include "bvrelax/cantor.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/traces.hpp"

namespace bvrelax {
namespace {

const WeightedIntervalSpace kUnit = WeightedIntervalSpace::uniform(0, 1);
const WeightedIntervalSpace kOneTwo(0, 1, {{0, Rational(1, 2), 1}, {Rational(1, 2), 1, 2}});
const OpenSet kX = OpenSet::interval(0, 1);
const OpenSet kLeft = OpenSet::interval(0, Rational(1, 2));
const OpenSet kMid = OpenSet::interval(Rational(1, 4), Rational(3, 4));

BVRepresentation constant(double c) { return BVRepresentation(GridFunction({0, 1}, {c, c})); }

TEST(Trace, Examples) {
  BVRepresentation id(GridFunction({0, 1}, {0.0, 1.0}));
  EXPECT_EQ(trace_at(id, kUnit, kX, Rational(1)).value, 1.0);
  BVRepresentation step(GridFunction({0, 1}, {0.0, 0.0}), {Jump{Rational(1, 2), 1.0}});
  EXPECT_EQ(trace_at(step, kUnit, kLeft, Rational(1, 2)).value, 0.0);
  EXPECT_EQ(trace_at(step, kUnit, kLeft, Rational(1, 2), TraceSide::kOutside).value, 1.0);
  EXPECT_EQ(trace_at(BVRepresentation(CantorFunction()), kUnit, kLeft, Rational(1, 2)).value, 0.5);
}

TEST(Trace, AveragedMeansConverge) {
  auto sq = std::function<double(double)>([](double x) { return x * x; });
  TraceValue t = trace_at(sq, kOneTwo, kLeft, Rational(1, 2));
  EXPECT_TRUE(t.exists);
  EXPECT_NEAR(t.value, 0.25, kTraceTol);
  auto osc = std::function<double(double)>([](double x) { return std::sin(1.0 / (1.0 - x)); });
  EXPECT_FALSE(trace_at(osc, kUnit, kX, Rational(1)).exists);
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta_at(kUnit, kLeft, Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(theta_at(kOneTwo, kLeft, Rational(1, 2)), Rational(1, 3));
  for (int c : {1, 3, 7}) {
    EXPECT_EQ(theta_at(WeightedIntervalSpace::uniform(0, 1, c), kLeft, Rational(1, 2)), Rational(1, 2));
  }
}

// Linearity, order, lattice operations, truncation and the two-sided
// identification at the boundary, on random data.
TEST(TraceProperty, AlgebraOfTraces) {
  Rng rng(43);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int c = 0; c < 30; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    BVRepresentation u = random_bv(rng, s, 6, 2);
    BVRepresentation v = random_bv(rng, s, 6, 2);
    OpenSet om = random_open_set(rng, 0, 1, 3);
    double a = coef(rng), b = coef(rng), level = 0.5 * coef(rng);
    BVRepresentation lin = linear_combination(a, u, b, v);
    BVRepresentation mx = pointwise_max(u, v);
    BVRepresentation mn = pointwise_min(u, v);
    BVRepresentation tr = truncate(u, level);
    for (const auto& x : om.boundary()) {
      double tu = trace_at(u, s, om, x).value, tv = trace_at(v, s, om, x).value;
      EXPECT_NEAR(trace_at(lin, s, om, x).value, a * tu + b * tv, 1e-12);
      EXPECT_NEAR(trace_at(mx, s, om, x).value, std::max(tu, tv), 1e-12);
      EXPECT_NEAR(trace_at(mn, s, om, x).value, std::min(tu, tv), 1e-12);
      EXPECT_NEAR(trace_at(tr, s, om, x).value, std::min(tu, level), 1e-12);
      EXPECT_LE(trace_at(mn, s, om, x).value, trace_at(mx, s, om, x).value);
      if (0 < x && x < 1) {
        double out = trace_at(u, s, om, x, TraceSide::kOutside).value;
        EXPECT_NEAR(std::min(tu, out), u.lower_value(x), 1e-12);
        EXPECT_NEAR(std::max(tu, out), u.upper_value(x), 1e-12);
      }
    }
  }
}

TEST(Glue, Examples) {
  GlueBvReport same = glue_bv_check(constant(0.4), constant(0.4), kUnit, kMid, kX);
  EXPECT_DOUBLE_EQ(same.boundary_term, 0.0);
  EXPECT_TRUE(same.ok);
  GlueBvReport g = glue_bv_check(constant(0.0), constant(1.0), kUnit, kMid, kX);
  EXPECT_DOUBLE_EQ(g.boundary_term, 2.0);
  EXPECT_DOUBLE_EQ(g.lhs, 2.0);
  EXPECT_TRUE(g.ok);
}

TEST(GlueProperty, IdentityOnRandomData) {
  Rng rng(47);
  for (int c = 0; c < 30; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    BVRepresentation u = random_bv(rng, s, 8, 1);
    BVRepresentation v = random_bv(rng, s, 8, 1);
    OpenSet om = random_open_set(rng, Rational(1, 8), Rational(7, 8), 2);
    GlueBvReport g = glue_bv_check(u, v, s, om, kX);
    EXPECT_LE(g.residual, 1e-9 * (1.0 + g.rhs)) << "case " << c;
  }
}

TEST(TraceIntegrability, Examples) {
  TraceIntegrabilityReport zero = trace_integrability(constant(0.0), kUnit, kX, {Rational(1, 2)});
  EXPECT_DOUBLE_EQ(zero.integral, 0.0);
  BVRepresentation id(GridFunction({0, 1}, {0.0, 1.0}));
  TraceIntegrabilityReport r = trace_integrability(id, kUnit, kX, {Rational(1, 2)});
  EXPECT_DOUBLE_EQ(r.integral, 2.0);
  EXPECT_NEAR(r.bv_norm, 1.5, 1e-15);
  EXPECT_NEAR(r.c_a, 2.0, 1e-12);
  EXPECT_NEAR(r.ratio, 4.0 / 3.0, 1e-12);
  EXPECT_TRUE(r.ok);
  BVRepresentation step(GridFunction({0, 1}, {0.0, 0.0}), {Jump{Rational(1, 2), 1.0}});
  TraceIntegrabilityReport j = trace_integrability(step, kUnit, kX, {Rational(1, 2)});
  EXPECT_DOUBLE_EQ(j.integral, 2.0);  // (|0| + |1|) H({1/2})
}

TEST(Penalty, Examples) {
  PenaltyResult zero = penalty_minimize(Integrand::identity(), constant(0.0), kUnit, kMid, 64);
  EXPECT_NEAR(zero.value, 0.0, 1e-14);
  for (double v : zero.minimizer.values()) EXPECT_NEAR(v, 0.0, 1e-14);

  BVRepresentation ramp(GridFunction({0, Rational(1, 4), Rational(3, 4), 1}, {0.0, 0.0, 1.0, 1.0}));
  PenaltyResult one = penalty_minimize(Integrand::identity(), ramp, kUnit, kMid, 64);
  EXPECT_NEAR(one.value, 1.0, 1e-12);
  // Boundary mismatch costs f_inf = 2 per unit, so every slope s in [1, 2]
  // gives 0.5 f(s) + (2 - s) = 1.5.
  PenaltyResult k = penalty_minimize(Integrand::kinked(), ramp, kUnit, kMid, 64);
  EXPECT_NEAR(k.value, 1.5, 1e-12);
  EXPECT_LE(k.boundary_term, 1.0 + 1e-12);
}

TEST(Equivalence, ConstantAndRampData) {
  EquivalenceReport c = equivalence_check(Integrand::identity(), constant(0.7), kUnit, kMid, kX,
                                          Schedule::standard(3));
  EXPECT_TRUE(c.ok);
  EXPECT_NEAR(c.penalty_value, 0.0, 1e-9);
  BVRepresentation ramp(GridFunction({0, Rational(1, 4), Rational(3, 4), 1}, {0.0, 0.0, 1.0, 1.0}));
  EquivalenceReport r = equivalence_check(Integrand::identity(), ramp, kUnit, kMid, kX,
                                          Schedule::standard(3));
  EXPECT_TRUE(r.ok);
  EXPECT_NEAR(r.penalty_value, 1.0, 0.02);
  EXPECT_NEAR(r.extended_value, 1.0, 0.02);
}

}  // namespace
}  // namespace bvrelax
