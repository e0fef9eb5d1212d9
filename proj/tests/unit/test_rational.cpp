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

#include "bvrelax/rational.hpp"

namespace bvrelax {
namespace {

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
}

TEST(Rational, CanonicalStringRoundTrips) {
  for (const char* s : {"0", "1", "-5", "13/8", "-1/1024", "123456789/1000"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(to_string(Rational(10, 4)), "5/2");
}

TEST(Rational, FromDoubleIsExact) {
  for (double x : {0.0, 0.1, -2.75, 1e-300, 3.141592653589793}) {
    EXPECT_EQ(to_double(from_double(x)), x);
  }
  EXPECT_EQ(from_double(0.375), Rational(3, 8));
}

TEST(Rational, Dyadic) {
  EXPECT_EQ(dyadic(0), Rational(1));
  EXPECT_EQ(dyadic(3), Rational(1, 8));
  EXPECT_EQ(dyadic(30) * Rational(1 << 30), Rational(1));
}

}  // namespace
}  // namespace bvrelax
