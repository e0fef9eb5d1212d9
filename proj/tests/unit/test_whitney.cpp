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
#include "bvrelax/whitney.hpp"

namespace bvrelax {
namespace {

const WeightedIntervalSpace kUnit = WeightedIntervalSpace::uniform(0, 1);

TEST(WhitneyCover, UnitIntervalInvariants) {
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(0, 1), 4);
  EXPECT_TRUE(check_cover(c, kUnit).ok());
  EXPECT_LE(c.overlap_measured, c.overlap_bound);
  for (const auto& b : c.balls) EXPECT_LE(b.radius, 0.25);
}

TEST(WhitneyCover, ComponentsAreCoveredSeparately) {
  OpenSet G({{Rational(1, 8), Rational(3, 8)}, {Rational(1, 2), Rational(7, 8)}});
  WhitneyCover c = build_cover(kUnit, G, 16);
  EXPECT_TRUE(check_cover(c, kUnit).ok());
  for (const auto& b : c.balls) {
    bool first = b.lo() >= 0.125 && b.hi() <= 0.375;
    bool second = b.lo() >= 0.5 && b.hi() <= 0.875;
    EXPECT_TRUE(first || second);
  }
}

TEST(WhitneyCover, CantorGapsRespectTheGapScale) {
  CantorLevel level = cantor_intervals(3);
  std::vector<Interval> gaps;
  for (const auto& gs : level.gaps) gaps.insert(gaps.end(), gs.begin(), gs.end());
  std::sort(gaps.begin(), gaps.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  OpenSet G(gaps);
  WeightedIntervalSpace cs = cantor_space(3);
  WhitneyCover c = build_cover(cs, G, 64);
  EXPECT_TRUE(check_cover(c, cs).ok());
  for (const auto& b : c.balls) {
    for (const auto& g : gaps) {
      if (to_double(g.lo) < b.center && b.center < to_double(g.hi)) {
        EXPECT_LE(b.radius, to_double(g.length()) / (4.0 * c.tau) + 1e-15);
      }
    }
  }
}

TEST(PartitionOfUnity, SumsToOne) {
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(Rational(1, 8), Rational(7, 8)), 32);
  PartitionOfUnity pou(c);
  double lo = c.balls.front().lo(), hi = c.balls.back().hi();
  for (int k = 0; k <= 10000; ++k) {
    double x = lo + (hi - lo) * k / 10000.0;
    EXPECT_NEAR(pou.sum_phi(x), 1.0, 1e-12);
  }
  EXPECT_GE(pou.multiplicity(), 1);
}

TEST(DiscreteConvolution, ReproducesConstants) {
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(0, 1), 16);
  PartitionOfUnity pou(c);
  GridFunction conv = discrete_convolution(BVRepresentation(GridFunction({0, 1}, {0.3, 0.3})), c,
                                           pou, kUnit);
  for (double v : conv.values()) EXPECT_NEAR(v, 0.3, 1e-14);
}

TEST(DiscreteConvolution, ErrorDecreasesWithScale) {
  WeightedIntervalSpace cs = cantor_space(6);
  for (const WeightedIntervalSpace* s : {&kUnit, static_cast<const WeightedIntervalSpace*>(&cs)}) {
    BVRepresentation u = s == &kUnit ? BVRepresentation(GridFunction({0, 1}, {0.0, 1.0}))
                                     : BVRepresentation(CantorFunction());
    OpenSet G = OpenSet::interval(0, 1);
    double prev = 1e300;
    for (int i : {4, 16, 64, 256}) {
      WhitneyCover c = build_cover(*s, G, i);
      PartitionOfUnity pou(c);
      double err = l1_distance(BVRepresentation(discrete_convolution(u, c, pou, *s)), u, *s, G);
      EXPECT_LT(err, prev);
      prev = err;
    }
  }
}

TEST(UpperGradients, AtomlessHasNoSingularPart) {
  BVRepresentation u(GridFunction({0, 1}, {0.0, 1.0}));
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(0, 1), 16);
  PartitionOfUnity pou(c);
  WhitneyGradients g = whitney_upper_gradients(c, pou, variation_measure_of(u, kUnit), kUnit);
  for (double v : g.g_s.values) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(g.ok);
  // |u'| = 1, so each ball contributes at most C tau and at most c_o balls overlap.
  for (double v : g.g_a.values) EXPECT_LE(v, g.constant * c.tau * c.overlap_bound + 1e-9);
  GridFunction conv = discrete_convolution(u, c, pou, kUnit);
  EXPECT_LE(gradient_domination_gap(conv, g.g, c), 1e-9);
}

TEST(UpperGradients, SingleAtomBound) {
  BVRepresentation u(GridFunction({0, 1}, {0.0, 0.0}), {Jump{Rational(1, 2), 1.0}});
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(0, 1), 64);
  PartitionOfUnity pou(c);
  WhitneyGradients g = whitney_upper_gradients(c, pou, variation_measure_of(u, kUnit), kUnit);
  EXPECT_TRUE(g.ok);
  EXPECT_LE(g.integral_g_s, c.overlap_bound * g.constant * 1.0 + 1e-12);
}

TEST(Adversarial, UniformDensity) {
  PiecewiseConstant one{{0, 1}, {1.0}};
  for (double d : {0.5, 0.1, 0.01}) EXPECT_NEAR(adversarial_integral(one, kUnit, d), d, 1e-15);
}

TEST(Equiintegrability, UniformDensity) {
  BVRepresentation u(GridFunction({0, 1}, {0.0, 1.0}));
  std::vector<double> deltas{1e-1, 1e-2, 1e-3};
  EquiintegrabilityReport rep = equiintegrability_report(
      kUnit, OpenSet::interval(0, 1), variation_measure_of(u, kUnit), {4, 16}, deltas);
  EXPECT_TRUE(rep.profile_monotone);
  WhitneyCover c = build_cover(kUnit, OpenSet::interval(0, 1), 4);
  for (size_t k = 0; k < deltas.size(); ++k) {
    EXPECT_LE(rep.profile[k], c.overlap_bound * deltas[k] + 1e-12);
  }
}

TEST(Equiintegrability, AtomIsExcluded) {
  BVRepresentation u(GridFunction({0, 1}, {0.0, 1.0}), {Jump{Rational(1, 2), 1.0}});
  EquiintegrabilityReport rep =
      equiintegrability_report(kUnit, OpenSet::interval(0, 1), variation_measure_of(u, kUnit),
                               {4, 16, 64}, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
  EXPECT_TRUE(rep.profile_monotone);
  EXPECT_TRUE(rep.profile_vanishes);
}

TEST(Newtonian, Examples) {
  BVRepresentation smooth(GridFunction::sample(0, 1, 16, [](double x) { return x + x * x; }));
  NewtonianReport s = newtonian_check(smooth, kUnit, OpenSet::interval(0, 1));
  EXPECT_NEAR(s.c_empirical, 1.0, 1e-12);
  EXPECT_TRUE(s.ok);

  WeightedIntervalSpace cs = cantor_space(8);
  NewtonianReport c = newtonian_check(BVRepresentation(CantorFunction()), cs, OpenSet::interval(0, 1));
  EXPECT_NEAR(c.c_empirical, 2.0, 1e-9);

  BVRepresentation flat(GridFunction({0, Rational(1, 2), 1}, {0.0, 0.0, 1.0}));
  NewtonianReport f = newtonian_check(flat, kUnit, OpenSet::interval(0, 1));
  EXPECT_GE(f.skipped_cells, 1u);
  EXPECT_NEAR(f.c_empirical, 1.0, 1e-12);
}

}  // namespace
}  // namespace bvrelax
