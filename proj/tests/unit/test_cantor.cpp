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


#include <sstream>

#include <gtest/gtest.h>

#include "bvrelax/cantor.hpp"
#include "bvrelax/cantor_report.hpp"

namespace bvrelax {
namespace {

TEST(Cantor, Levels) {
  CantorLevel l0 = cantor_intervals(0);
  ASSERT_EQ(l0.intervals.size(), 1u);
  EXPECT_EQ(l0.intervals[0], (Interval{0, 1}));
  EXPECT_EQ(cantor_alpha(0), Rational(1));
  CantorLevel l1 = cantor_intervals(1);
  ASSERT_EQ(l1.intervals.size(), 2u);
  EXPECT_EQ(l1.intervals[0], (Interval{0, Rational(3, 8)}));
  EXPECT_EQ(l1.intervals[1], (Interval{Rational(5, 8), 1}));
  EXPECT_EQ(cantor_alpha(1), Rational(3, 4));
  EXPECT_EQ(cantor_alpha(2), Rational(5, 8));
  EXPECT_LT(to_double(cantor_alpha(40)) - 0.5, 1e-12);
}

// The level-m intervals have total length alpha_m, and each step removes a
// gap of relative length 2^-2i from every interval.
TEST(CantorProperty, LevelLengths) {
  for (int m = 0; m <= 10; ++m) {
    CantorLevel l = cantor_intervals(m);
    ASSERT_EQ(l.intervals.size(), size_t{1} << m);
    Rational total = 0;
    for (const auto& iv : l.intervals) {
      EXPECT_EQ(iv.length(), cantor_interval_length(m));
      total += iv.length();
    }
    EXPECT_EQ(total, cantor_alpha(m));
  }
}

TEST(Cantor, MeasureUpTo) {
  EXPECT_EQ(cantor_measure_upto(Rational(1), 30).value, Rational(1, 2));
  EXPECT_EQ(cantor_measure_upto(Rational(3, 8), 30).value, Rational(1, 4));
  EXPECT_EQ(cantor_measure_upto(Rational(0), 30).value, Rational(0));
  CantorMeasureValue mid = cantor_measure_upto(Rational(1, 3), 20);
  EXPECT_LE(mid.error_bound, dyadic(20));
}

TEST(Cantor, WeightOfTheSpace) {
  WeightedIntervalSpace s = cantor_space(2);
  EXPECT_EQ(s.mu(0, 1), Rational(13, 8));
  EXPECT_EQ(s.weight_at(Rational(1, 8)), Rational(2));
  EXPECT_EQ(s.weight_at(Rational(1, 2)), Rational(1));
}

TEST(CantorExample, ExactIntegrals) {
  for (int m : {2, 5, 8}) {
    CantorExample ex = example_functions(m);
    EXPECT_EQ(exact_integral(ex.g, ex.space), 4 * cantor_alpha(m));
    for (int i = 1; i <= m; ++i) EXPECT_EQ(exact_integral(ex.g_i[i - 1], ex.space), Rational(1));
  }
  EXPECT_EQ(4 * cantor_alpha(8), Rational(2) + dyadic(7));
}

TEST(CantorExample, ApproximantsIncreaseTowardU) {
  CantorExample ex = example_functions(6);
  for (double x : {0.1, 0.3, 0.5, 0.77}) {
    for (int i = 1; i <= 6; ++i) EXPECT_NEAR(ex.u_i[i - 1](1.0), 1.0, 1e-12);
    EXPECT_NEAR(ex.u(1.0), 1.0, 1e-12);
    EXPECT_GE(ex.u(x), 0.0);
  }
}

TEST(CounterexampleReport, SmallLevel) {
  CantorReport rep = counterexample_report(4, Schedule::standard(2));
  std::string csv = to_csv(rep);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "quantity,exact_or_estimate,target,tolerance,pass");
  bool saw_alpha = false;
  for (const auto& r : rep.rows) {
    if (r.quantity == "alpha_m") {
      saw_alpha = true;
      EXPECT_EQ(r.exact, to_string(cantor_alpha(4)));
    }
    if (r.quantity == "measure_functional") { EXPECT_EQ(r.value, 1.0); }
    if (r.quantity == "lipschitz_competitor_energy") { EXPECT_EQ(r.value, 3.0); }
    if (r.kind == "exact") { EXPECT_TRUE(r.pass) << r.quantity; }
  }
  EXPECT_TRUE(saw_alpha);
  // Falling TV sequence toward 1.
  for (size_t k = 1; k < rep.tv.rows.size(); ++k) {
    EXPECT_LE(rep.tv.rows[k].value, rep.tv.rows[k - 1].value + 1e-9);
  }
}

}  // namespace
}  // namespace bvrelax
