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


#include <gtest/gtest.h>

#include "bvrelax/cantor.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {
namespace {

WeightedIntervalSpace one_two() {
  return WeightedIntervalSpace(0, 1, {{0, Rational(1, 2), 1}, {Rational(1, 2), 1, 2}});
}

TEST(Space, MeasureIsExact) {
  EXPECT_EQ(cantor_space(2).mu(0, 1), Rational(13, 8));
  EXPECT_EQ(WeightedIntervalSpace::uniform(0, 1).mu(0, 1), Rational(1));
  EXPECT_EQ(one_two().mu(Rational(1, 4), Rational(3, 4)), Rational(3, 4));
  OpenSet two({{0, Rational(1, 4)}, {Rational(3, 4), 1}});
  EXPECT_EQ(one_two().mu(two), Rational(1, 4) + Rational(1, 2));
}

TEST(Space, PointHausdorffAndJumpCost) {
  auto unit = WeightedIntervalSpace::uniform(0, 1);
  EXPECT_EQ(unit.point_hausdorff(Rational(1, 3)), Rational(2));
  EXPECT_EQ(unit.point_hausdorff(Rational(0)), Rational(1));
  EXPECT_EQ(one_two().point_hausdorff(Rational(1, 2)), Rational(3));
  EXPECT_EQ(unit.jump_cost_density(Rational(1, 2)), Rational(1));
  EXPECT_EQ(one_two().jump_cost_density(Rational(1, 2)), Rational(1));
  EXPECT_EQ(WeightedIntervalSpace::uniform(0, 1, 2).jump_cost_density(Rational(1, 2)), Rational(2));
  EXPECT_THROW(unit.jump_cost_density(Rational(0)), std::invalid_argument);
}

TEST(Space, RejectsInvalidPieces) {
  using P = std::vector<WeightPiece>;
  EXPECT_THROW(WeightedIntervalSpace(0, 1, P{{0, Rational(1, 2), 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedIntervalSpace(0, 1, P{{0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(WeightedIntervalSpace(1, 0, P{{1, 0, 1}}), std::invalid_argument);
}

TEST(Space, DoublingAndPoincare) {
  DoublingReport u = doubling_check(WeightedIntervalSpace::uniform(0, 1), 2000);
  EXPECT_LE(u.c_d_empirical, 2.0 * (1 + 1e-9));
  EXPECT_LE(u.c_p_empirical, 1.0 * (1 + 1e-9));
  EXPECT_TRUE(u.ok());
  DoublingReport c = doubling_check(cantor_space(4), 2000);
  EXPECT_LE(c.c_d_empirical, 4.0 * (1 + 1e-9));
  EXPECT_TRUE(c.ok());
}

TEST(OpenSetOps, UnionIntersectionAndBoundary) {
  OpenSet a({{0, Rational(1, 2)}});
  OpenSet b({{Rational(1, 4), Rational(3, 4)}});
  OpenSet u = a.unite(b);
  ASSERT_EQ(u.components().size(), 1u);
  EXPECT_EQ(u.components()[0].hi, Rational(3, 4));
  OpenSet i = a.intersect(b);
  ASSERT_EQ(i.components().size(), 1u);
  EXPECT_EQ(i.components()[0].lo, Rational(1, 4));
  EXPECT_TRUE(OpenSet({{0, Rational(1, 3)}}).intersect(OpenSet({{Rational(1, 3), 1}})).empty());
  EXPECT_EQ(b.boundary(), (std::vector<Rational>{Rational(1, 4), Rational(3, 4)}));
  EXPECT_TRUE(b.compactly_inside(OpenSet({{0, 1}})));
  EXPECT_FALSE(a.compactly_inside(OpenSet({{0, 1}})));
}

// For interior x: 0 < rho(x) <= H({x}) and theta = rho / H lies in (0, 1).
TEST(SpaceProperty, ThetaRange) {
  Rng rng(3);
  for (int c = 0; c < 100; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    for (int k = 0; k < 10; ++k) {
      Rational x = random_dyadic(rng, 0, 1, 8);
      Rational rho = s.jump_cost_density(x), h = s.point_hausdorff(x);
      EXPECT_GT(rho, 0);
      EXPECT_LE(rho, h);
      EXPECT_LT(rho / h, 1);
    }
  }
}

// mu is additive on adjacent intervals.
TEST(SpaceProperty, MeasureAdditivity) {
  Rng rng(5);
  for (int c = 0; c < 200; ++c) {
    WeightedIntervalSpace s = random_space(rng);
    Rational x = random_dyadic(rng, 0, 1, 10);
    EXPECT_EQ(s.mu(0, x) + s.mu(x, 1), s.mu(0, 1));
  }
}

}  // namespace
}  // namespace bvrelax
