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

#include "bvrelax/chain.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/simplex.hpp"

namespace bvrelax {
namespace {

TEST(Simplex, SmallProgram) {
  // min -x - y  s.t. x + y + s1 = 4, x + 3y + s2 = 6.
  LpResult r = solve_standard_lp({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {-1, -1, 0, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -4.0, 1e-12);
}

TEST(Simplex, DetectsInfeasibleAndUnbounded) {
  EXPECT_EQ(solve_standard_lp({{1, 1}}, {-1}, {1, 1}).status, LpStatus::kInfeasible);
  EXPECT_EQ(solve_standard_lp({{1, -1}}, {0}, {-1, 0}).status, LpStatus::kUnbounded);
}

TEST(Chain, LinearDataStaysLinear) {
  ChainProblem p;
  for (int k = 0; k < 8; ++k) p.cells.push_back(ChainCell::regular(0.125, 1.0));
  p.anchors.assign(9, std::nullopt);
  p.anchors.front() = 0.0;
  p.anchors.back() = 1.0;
  ChainSolution s = solve_chain(p, Integrand::kinked());
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(s.values[k], k / 8.0, 1e-14);
  EXPECT_NEAR(s.cost, 1.0, 1e-14);
}

TEST(Chain, RiseMigratesToTheCheapSide) {
  // Unit rise across cells of weight 1 and 2: everything goes to weight 1.
  ChainProblem p{{ChainCell::regular(0.5, 1.0), ChainCell::regular(0.5, 2.0)},
                 {0.0, std::nullopt, 1.0}};
  ChainSolution s = solve_chain(p, Integrand::identity());
  EXPECT_NEAR(s.cost, 1.0, 1e-14);
  EXPECT_NEAR(s.values[1], 1.0, 1e-14);
}

TEST(Chain, JumpCellsSplitTiesEqually) {
  ChainProblem p{{ChainCell::jump(1.0), ChainCell::jump(1.0)}, {0.0, std::nullopt, 1.0}};
  ChainSolution s = solve_chain(p, Integrand::identity());
  EXPECT_NEAR(s.values[1], 0.5, 1e-14);
  EXPECT_NEAR(s.cost, 1.0, 1e-14);
}

TEST(Chain, UnanchoredTailsCopyTheNearestAnchor) {
  ChainProblem p{{ChainCell::regular(1, 1), ChainCell::regular(1, 1), ChainCell::regular(1, 1)},
                 {std::nullopt, 2.0, 3.0, std::nullopt}};
  ChainSolution s = solve_chain(p, Integrand::identity());
  EXPECT_DOUBLE_EQ(s.values[0], 2.0);
  EXPECT_DOUBLE_EQ(s.values[3], 3.0);
  EXPECT_NEAR(s.cost, 1.0, 1e-14);
}

// The allocation solver against the independent epigraph LP.
TEST(ChainProperty, AgreesWithEpigraphLp) {
  Rng rng(23);
  std::uniform_int_distribution<int> cells(1, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.3);
  for (int c = 0; c < 150; ++c) {
    Integrand f = random_integrand(rng);
    ChainProblem p;
    int n = cells(rng);
    for (int k = 0; k < n; ++k) {
      if (coin(rng)) {
        p.cells.push_back(ChainCell::jump(0.5 + 2.0 * unit(rng)));
      } else {
        p.cells.push_back(ChainCell::regular(0.05 + unit(rng), 0.25 + 3.0 * unit(rng)));
      }
    }
    p.anchors.assign(n + 1, std::nullopt);
    for (int k = 0; k <= n; ++k) {
      if (k == 0 || k == n || coin(rng)) p.anchors[k] = 4.0 * unit(rng) - 2.0;
    }
    ChainSolution exact = solve_chain(p, f);
    ChainSolution lp = solve_chain_lp(p, f);
    ASSERT_EQ(lp.status, LpStatus::kOptimal);
    EXPECT_NEAR(exact.cost, lp.cost, 1e-8 * (1.0 + lp.cost)) << "case " << c;
    EXPECT_NEAR(chain_cost(p, f, exact.values), exact.cost, 1e-10 * (1.0 + exact.cost));
    for (int k = 0; k <= n; ++k) {
      if (p.anchors[k]) { EXPECT_DOUBLE_EQ(exact.values[k], *p.anchors[k]); }
    }
  }
}

}  // namespace
}  // namespace bvrelax
