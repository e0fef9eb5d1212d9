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

#include "bvrelax/io.hpp"

namespace bvrelax {
namespace {

template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Io, Rationals) {
  EXPECT_EQ(rational_from_json(Json("3/8"), "/x"), Rational(3, 8));
  EXPECT_EQ(rational_from_json(Json("0.25"), "/x"), Rational(1, 4));
  EXPECT_EQ(rational_from_json(Json(5), "/x"), Rational(5));
  EXPECT_EQ(error_of([] { rational_from_json(Json(0.1), "/x"); }).rfind("/x", 0), 0u);
  EXPECT_EQ(rational_to_json(Rational(13, 8)), Json("13/8"));
}

TEST(Io, Integrands) {
  EXPECT_DOUBLE_EQ(integrand_from_json(Json{{"kind", "kinked"}}, "")(2.0), 3.0);
  EXPECT_DOUBLE_EQ(integrand_from_json(Json{{"kind", "identity"}}, "")(2.0), 2.0);
  Json pw = Json::parse(R"({"kind":"piecewise","f0":1,"breakpoints":[1],"slopes":[1,3]})");
  EXPECT_DOUBLE_EQ(integrand_from_json(pw, "")(2.0), 5.0);
  EXPECT_NE(error_of([] { integrand_from_json(Json{{"kind", "quadratic"}}, "/f"); }).find("/f/kind"),
            std::string::npos);
}

TEST(Io, Spaces) {
  Json uni = Json::parse(R"({"a":0,"b":1,"w":"2"})");
  EXPECT_EQ(space_from_json(uni, "").mu(0, 1), Rational(2));
  Json pcs = Json::parse(R"({"a":0,"b":1,"pieces":[{"lo":0,"hi":"1/2","w":1},{"lo":"1/2","hi":1,"w":2}]})");
  EXPECT_EQ(space_from_json(pcs, "").mu(Rational(1, 4), Rational(3, 4)), Rational(3, 4));
  EXPECT_EQ(space_from_json(Json{{"cantor", 2}}, "").mu(0, 1), Rational(13, 8));
  Json gap = Json::parse(R"({"a":0,"b":1,"pieces":[{"lo":0,"hi":"1/2","w":1}]})");
  EXPECT_FALSE(error_of([&] { space_from_json(gap, "/space"); }).empty());
}

TEST(Io, TargetsSetsAndSchedules) {
  Json t = Json::parse(R"({"kind":"grid","nodes":[0,1],"values":[0,1],"jumps":[{"x":"1/2","height":2}]})");
  BVRepresentation u = target_from_json(t, "/target");
  EXPECT_DOUBLE_EQ(u.right_limit(Rational(1, 2)), 2.5);
  OpenSet s = open_set_from_json(Json::parse(R"([["0","1/4"],["1/2",1]])"), "/omega");
  EXPECT_EQ(s.components().size(), 2u);
  Schedule k = schedule_from_json(Json{{"K", 2}}, "/schedule", 1);
  EXPECT_EQ(k.points.size(), 3u);
  EXPECT_FALSE(error_of([] { schedule_from_json(Json{{"K", 99}}, "/schedule", 1); }).empty());
  Json pts = Json::parse(R"({"points":[{"n":16,"eps":"1/4"},{"n":64,"eps":"1/8"}]})");
  EXPECT_EQ(schedule_from_json(pts, "/schedule", 1).points[1].eps, Rational(1, 8));
}

TEST(Io, ParseConfig) {
  ExperimentConfig c = parse_config(R"({"experiment":"relax","seed":7})");
  EXPECT_EQ(c.experiment, "relax");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"experiment":"nope"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"experiment":"relax","seed":-1})"), ConfigError);
  EXPECT_THROW(parse_config("[]"), ConfigError);
}

}  // namespace
}  // namespace bvrelax
