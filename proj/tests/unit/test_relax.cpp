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

#include "bvrelax/corpus.hpp"
#include "bvrelax/relax.hpp"

namespace bvrelax {
namespace {

const WeightedIntervalSpace kUnit = WeightedIntervalSpace::uniform(0, 1);
const WeightedIntervalSpace kOneTwo(0, 1, {{0, Rational(1, 2), 1}, {Rational(1, 2), 1, 2}});

BVRepresentation identity_target() { return BVRepresentation(GridFunction({0, 1}, {0.0, 1.0})); }
BVRepresentation unit_step() {
  return BVRepresentation(GridFunction({0, 1}, {0.0, 0.0}), {Jump{Rational(1, 2), 1.0}});
}

TEST(Schedule, StandardPoints) {
  Schedule s = Schedule::standard(3, 2);
  ASSERT_EQ(s.points.size(), 4u);
  EXPECT_EQ(s.points[0].n, 16);
  EXPECT_EQ(s.points[0].eps, Rational(1, 2));
  EXPECT_EQ(s.points[3].n, 1024);
  EXPECT_EQ(s.points[3].eps, Rational(1, 16));
  Schedule bad{{{16, Rational(1, 4)}, {8, Rational(1, 8)}}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Relax, RejectsBadArguments) {
  OpenSet X = kUnit.interior();
  EXPECT_THROW(relax_value(Integrand::identity(), identity_target(), kUnit, X, 1, Rational(1, 4)),
               std::invalid_argument);
  EXPECT_THROW(relax_value(Integrand::identity(), identity_target(), kUnit, X, 16, Rational(0)),
               std::invalid_argument);
  BVRepresentation short_target(GridFunction({0, Rational(1, 2)}, {0.0, 1.0}));
  EXPECT_THROW(relax_value(Integrand::identity(), short_target, kUnit, X, 16, Rational(1, 4)),
               std::invalid_argument);
}

TEST(Relax, IdentityHasNoGap) {
  for (const auto& p : Schedule::standard(4).points) {
    RelaxationResult r = relax_value(Integrand::identity(), identity_target(), kUnit,
                                     kUnit.interior(), p.n, p.eps);
    EXPECT_NEAR(r.value, 1.0, 1e-12);
    EXPECT_EQ(r.status, "optimal");
  }
}

TEST(Relax, StepTransitionMovesToTheCheapSide) {
  SchedulePoint tail = Schedule::standard(4).points.back();
  RelaxationResult r = relax_value(Integrand::identity(), unit_step(), kOneTwo,
                                   kOneTwo.interior(), tail.n, tail.eps);
  EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(Relax, ChainAgreesWithSimplexOracle) {
  Rng rng(29);
  for (int c = 0; c < 10; ++c) {
    WeightedIntervalSpace s = random_space(rng, 3);
    BVRepresentation u = random_bv(rng, s, 3, 1);
    Integrand f = random_integrand(rng);
    RelaxOptions lp;
    lp.use_simplex = true;
    double a = relax_value(f, u, s, s.interior(), 16, Rational(1, 4)).value;
    double b = relax_value(f, u, s, s.interior(), 16, Rational(1, 4), lp).value;
    EXPECT_NEAR(a, b, 1e-7 * (1.0 + std::fabs(b))) << "case " << c;
  }
}

// The discrete value never drops below the measure functional by more than
// the jump-window discretization can explain.
TEST(RelaxProperty, LowerBound) {
  Rng rng(31);
  for (int c = 0; c < 15; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    BVRepresentation u = random_bv(rng, s, 6, 2);
    Integrand f = random_integrand(rng);
    double lower = measure_functional(f, variation_measure_of(u, s), s, s.interior());
    RelaxationResult r = relax_value(f, u, s, s.interior(), 1024, Rational(1, 64));
    EXPECT_GE(r.value, lower - 1e-6);
    EXPECT_NEAR(r.lower_certificate, lower, 1e-12 * (1.0 + lower));
  }
}

// The interpolant of the target is admissible, so its energy bounds the value.
TEST(RelaxProperty, UpperBoundByEnergy) {
  Rng rng(37);
  for (int c = 0; c < 15; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    GridFunction u = random_grid_function(rng, 0, 1, 6, s.breaks());
    Integrand f = random_integrand(rng);
    double e = energy(f, u, s, s.interior());
    RelaxationResult r = relax_value(f, BVRepresentation(u), s, s.interior(), 256, Rational(1, 16));
    EXPECT_LE(r.value, e + 1e-9 * (1.0 + e));
  }
}

TEST(MeasureProperty, DisjointLinearCase) {
  OpenSet A = OpenSet::interval(0, Rational(1, 3));
  OpenSet B = OpenSet::interval(Rational(2, 3), 1);
  MeasurePropertyReport rep = measure_property_report(Integrand::identity(), identity_target(),
                                                      kUnit, {{A, B}}, 256, Rational(1, 24));
  ASSERT_EQ(rep.rows.size(), 1u);
  const MeasurePairRow& row = rep.rows[0];
  EXPECT_TRUE(row.disjoint);
  EXPECT_NEAR(row.f_a, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(row.f_b, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(row.f_union, 2.0 / 3.0, 1e-12);
  EXPECT_TRUE(rep.ok);
}

TEST(MeasureProperty, OverlappingRandomPairs) {
  Rng rng(41);
  for (int c = 0; c < 5; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    BVRepresentation u = random_bv(rng, s, 6, 1);
    OpenSet A = random_open_set(rng, 0, Rational(3, 4), 2);
    OpenSet B = random_open_set(rng, Rational(1, 4), 1, 2);
    MeasurePropertyReport rep =
        measure_property_report(random_integrand(rng), u, s, {{A, B}}, 512, Rational(1, 64));
    EXPECT_TRUE(rep.ok) << "case " << c;
  }
}

TEST(Extrapolation, PowerTailFit) {
  std::vector<double> eps, values;
  for (int k = 2; k < 9; ++k) {
    double e = std::ldexp(1.0, -k);
    eps.push_back(e);
    values.push_back(2.0 - 3.0 * std::sqrt(e));
  }
  PowerFit fit = fit_power_tail(eps, values);
  ASSERT_TRUE(fit.fitted);
  EXPECT_NEAR(fit.limit, 2.0, 1e-6);
  EXPECT_NEAR(fit.exponent, 0.5, 1e-6);
}

TEST(Extrapolation, ConstantWeightIsFlat) {
  ExtrapolationReport rep = relax_extrapolate(Integrand::kinked(), identity_target(), kUnit,
                                              kUnit.interior(), Schedule::standard(3));
  EXPECT_TRUE(rep.monotone);
  for (const auto& row : rep.rows) EXPECT_NEAR(row.value, 1.0, 1e-12);
  EXPECT_NEAR(rep.extrapolated, 1.0, 1e-12);
}

TEST(Sandwich, ConstantWeightSmoothTarget) {
  BVRepresentation u(GridFunction::sample(0, 1, 32, [](double x) { return x * x; }));
  SandwichReport rep = sandwich_check(Integrand::kinked(), u, kUnit, kUnit.interior(),
                                      Schedule::standard(3));
  EXPECT_TRUE(rep.ok);
  EXPECT_NEAR(rep.c_empirical, 1.0, 1e-6);
}

TEST(WeakStar, ConstantWeightIdentity) {
  std::vector<Interval> opens{{0, Rational(1, 2)}, {Rational(1, 4), 1}};
  std::vector<Interval> closeds{{Rational(1, 4), Rational(3, 4)}};
  WeakStarReport rep = weakstar_check(Integrand::identity(), identity_target(), kUnit,
                                      kUnit.interior(), opens, closeds, Schedule::standard(3));
  EXPECT_TRUE(rep.ok);
  // Closed sets are measured through a 2 eps neighbourhood.
  for (const auto& row : rep.rows) {
    double expected = to_double(row.set.length()) + (row.closed ? 4.0 / 32 : 0.0);
    EXPECT_NEAR(row.relaxed, expected, 1e-9);
  }
}

TEST(GlueLipschitz, EqualFunctionsHaveNoCrossTerm) {
  GridFunction u({0, 1}, {0.0, 1.0});
  GlueReport rep = glue_lipschitz(u, u, OpenSet::interval(0, Rational(3, 4)),
                                  OpenSet::interval(Rational(1, 16), Rational(1, 2)),
                                  OpenSet::interval(Rational(1, 4), 1),
                                  OpenSet::interval(Rational(3, 8), Rational(15, 16)), Integrand::identity(),
                                  kUnit, 4);
  EXPECT_TRUE(rep.ok);
  EXPECT_DOUBLE_EQ(rep.cross_integral, 0.0);
  EXPECT_GT(rep.slack, 0.0);
}

TEST(GlueLipschitz, ConstantOffsetOnTheOverlap) {
  GridFunction u({0, 1}, {0.0, 1.0});
  GridFunction v({0, 1}, {1.0, 2.0});
  GlueReport rep = glue_lipschitz(u, v, OpenSet::interval(0, Rational(3, 4)),
                                  OpenSet::interval(Rational(1, 16), Rational(1, 2)),
                                  OpenSet::interval(Rational(1, 4), 1),
                                  OpenSet::interval(Rational(3, 8), Rational(15, 16)), Integrand::identity(),
                                  kUnit, 10);
  EXPECT_TRUE(rep.ok);
  EXPECT_GE(rep.slack, 0.0);
  EXPECT_GT(rep.cross_integral, 0.0);
}

}  // namespace
}  // namespace bvrelax
