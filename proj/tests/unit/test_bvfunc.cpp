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

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/cantor.hpp"
#include "bvrelax/cantor_report.hpp"
#include "bvrelax/corpus.hpp"

namespace bvrelax {
namespace {

const WeightedIntervalSpace kUnit = WeightedIntervalSpace::uniform(0, 1);

GridFunction identity_grid() { return GridFunction({0, 1}, {0.0, 1.0}); }

TEST(GridFunction, EvaluationAndIntegral) {
  GridFunction g({0, Rational(1, 2), 1}, {0.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(g(0.25), 0.5);
  EXPECT_DOUBLE_EQ(g(Rational(3, 4)), 0.5);
  EXPECT_DOUBLE_EQ(g.integral(0.0, 1.0), 0.5);
  EXPECT_THROW(GridFunction({0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(GridFunction({1, 0}, {0.0, 1.0}), std::invalid_argument);
}

TEST(UpperGradient, IdentityConstantAndCantorApproximant) {
  PiecewiseConstant g = upper_gradient(identity_grid(), kUnit);
  for (double v : g.values) EXPECT_DOUBLE_EQ(v, 1.0);
  PiecewiseConstant z = upper_gradient(GridFunction({0, 1}, {2.0, 2.0}), kUnit);
  for (double v : z.values) EXPECT_DOUBLE_EQ(v, 0.0);

  CantorExample ex = example_functions(1);
  PiecewiseConstant g1 = upper_gradient(ex.u_i[0], ex.space);
  for (size_t k = 0; k < g1.values.size(); ++k) {
    Rational mid = (g1.nodes[k] + g1.nodes[k + 1]) / 2;
    bool in_gap = Rational(3, 8) < mid && mid < Rational(5, 8);
    EXPECT_NEAR(g1.values[k], in_gap ? 4.0 : 0.0, 1e-12);
  }
}

TEST(Energy, Examples) {
  EXPECT_DOUBLE_EQ(energy(Integrand::identity(), identity_grid(), kUnit, kUnit.interior()), 1.0);
  Integrand f = Integrand::make(0.3, {1.0}, {1.0, 2.0});
  EXPECT_DOUBLE_EQ(energy(f, GridFunction({0, 1}, {5.0, 5.0}), kUnit, kUnit.interior()), 0.3);
}

// g_u = 2 on A_2 where w = 2, so the energy is f(2) 2 L1(A_2) = 15/4.
TEST(Energy, CantorLevelTwo) {
  CantorLevel level = cantor_intervals(2);
  std::vector<Rational> nodes{0};
  std::vector<double> values{0.0};
  Rational acc = 0;
  for (const auto& iv : level.intervals) {
    if (iv.lo != nodes.back()) {
      nodes.push_back(iv.lo);
      values.push_back(to_double(2 * acc));
    }
    acc += iv.length();
    nodes.push_back(iv.hi);
    values.push_back(to_double(2 * acc));
  }
  GridFunction u(nodes, values);
  EXPECT_NEAR(energy(Integrand::kinked(), u, cantor_space(2), OpenSet::interval(0, 1)), 15.0 / 4.0,
              1e-12);
}

TEST(Perimeter, Examples) {
  OpenSet X = kUnit.interior();
  EXPECT_DOUBLE_EQ(perimeter(OpenSet::interval(0, Rational(1, 2)), kUnit, X), 1.0);
  EXPECT_DOUBLE_EQ(perimeter(OpenSet(), kUnit, X), 0.0);
  EXPECT_DOUBLE_EQ(perimeter(OpenSet::interval(Rational(1, 4), Rational(3, 4)), kUnit, X), 2.0);
}

TEST(Coarea, Examples) {
  CoareaSides s = coarea_both_sides(identity_grid(), kUnit, kUnit.interior());
  EXPECT_DOUBLE_EQ(s.lhs, 1.0);
  EXPECT_DOUBLE_EQ(s.rhs, 1.0);
  CoareaSides z = coarea_both_sides(GridFunction({0, 1}, {1.0, 1.0}), kUnit, kUnit.interior());
  EXPECT_DOUBLE_EQ(z.lhs, 0.0);
  EXPECT_DOUBLE_EQ(z.rhs, 0.0);
}

TEST(CoareaProperty, BothSidesAgreeOnRandomData) {
  Rng rng(17);
  std::uniform_int_distribution<int> extra(0, 25);
  for (int c = 0; c < 100; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    GridFunction u = random_grid_function(rng, 0, 1, extra(rng), s.breaks());
    OpenSet om = random_open_set(rng, 0, 1, 3);
    CoareaSides sides = coarea_both_sides(u, s, om);
    EXPECT_NEAR(sides.lhs, sides.rhs, 1e-9);
  }
}

TEST(VariationMeasure, Examples) {
  VariationMeasure id = variation_measure_of(BVRepresentation(identity_grid()), kUnit);
  EXPECT_TRUE(id.atoms.empty());
  EXPECT_NEAR(id.mass(kUnit, kUnit.interior()), 1.0, 1e-15);

  BVRepresentation step(GridFunction({0, 1}, {0.0, 0.0}), {Jump{Rational(1, 2), 1.0}});
  VariationMeasure st = variation_measure_of(step, kUnit);
  ASSERT_EQ(st.atoms.size(), 1u);
  EXPECT_EQ(st.atoms[0].x, Rational(1, 2));
  EXPECT_DOUBLE_EQ(st.atoms[0].mass, 1.0);

  VariationMeasure cu = variation_measure_of(BVRepresentation(CantorFunction()), cantor_space(8));
  EXPECT_NEAR(cu.mass(cantor_space(8), OpenSet::interval(0, 1)), 1.0, 1e-12);
}

TEST(MeasureFunctional, Examples) {
  OpenSet X = kUnit.interior();
  VariationMeasure zero{PiecewiseConstant{{0, 1}, {0.0}}, {}};
  Integrand f = Integrand::make(0.7, {}, {1.0});
  EXPECT_DOUBLE_EQ(measure_functional(f, zero, kUnit, X), 0.7);
  VariationMeasure mixed{PiecewiseConstant{{0, 1}, {1.0}}, {Atom{Rational(1, 3), 0.5}}};
  EXPECT_DOUBLE_EQ(measure_functional(Integrand::identity(), mixed, kUnit, X), 1.5);

  WeightedIntervalSpace cs = cantor_space(10);
  VariationMeasure cu = variation_measure_of(BVRepresentation(CantorFunction()), cs);
  EXPECT_NEAR(measure_functional(Integrand::kinked(), cu, cs, OpenSet::interval(0, 1)), 1.0, 1e-12);
}

// For f(t) = t the functional is the total variation, whatever the space.
TEST(MeasureFunctionalProperty, LinearCaseIsTotalMass) {
  Rng rng(19);
  for (int c = 0; c < 50; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    BVRepresentation u = random_bv(rng, s, 8, 2);
    VariationMeasure nu = variation_measure_of(u, s);
    OpenSet X = s.interior();
    EXPECT_NEAR(measure_functional(Integrand::identity(), nu, s, X), nu.mass(s, X), 1e-12);
  }
}

TEST(L1Distance, ExactForGrids) {
  GridFunction a({0, 1}, {0.0, 1.0});
  GridFunction b({0, 1}, {1.0, 0.0});
  EXPECT_NEAR(l1_distance(BVRepresentation(a), BVRepresentation(b), kUnit, kUnit.interior()), 0.5,
              1e-15);
}

}  // namespace
}  // namespace bvrelax
