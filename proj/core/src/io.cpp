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


#include "bvrelax/io.hpp"

#include <array>
#include <cmath>

#include "bvrelax/cantor.hpp"

namespace bvrelax {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError((path.empty() ? "/" : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string kind_of(const Json& j, const std::string& path) {
  const Json& k = field(j, "kind", path);
  if (!k.is_string()) fail(path + "/kind", "expected a string");
  return k.get<std::string>();
}

template <typename F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    return wrap(path, [&] { return parse_rational(j.get<std::string>()); });
  }
  fail(path, "expected a rational string such as \"3/8\" or an integer");
}

Integrand integrand_from_json(const Json& j, const std::string& path) {
  std::string kind = kind_of(j, path);
  if (kind == "identity") return Integrand::identity();
  if (kind == "kinked") return Integrand::kinked();
  if (kind != "piecewise") fail(path + "/kind", "unknown integrand kind '" + kind + "'");
  double f0 = number(field(j, "f0", path), path + "/f0");
  std::vector<double> breaks;
  std::vector<double> slopes;
  const Json& b = array(field(j, "breakpoints", path), path + "/breakpoints");
  for (size_t k = 0; k < b.size(); ++k) {
    breaks.push_back(number(b[k], path + "/breakpoints/" + std::to_string(k)));
  }
  const Json& s = array(field(j, "slopes", path), path + "/slopes");
  for (size_t k = 0; k < s.size(); ++k) {
    slopes.push_back(number(s[k], path + "/slopes/" + std::to_string(k)));
  }
  return wrap(path, [&] { return Integrand::make(f0, breaks, slopes); });
}

WeightedIntervalSpace space_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("cantor")) {
    int m = integer(j.at("cantor"), path + "/cantor");
    if (m < 0 || m > 20) fail(path + "/cantor", "level must be in [0, 20]");
    return cantor_space(m);
  }
  Rational a = rational_from_json(field(j, "a", path), path + "/a");
  Rational b = rational_from_json(field(j, "b", path), path + "/b");
  if (j.contains("pieces")) {
    const Json& ps = array(j.at("pieces"), path + "/pieces");
    std::vector<WeightPiece> pieces;
    for (size_t k = 0; k < ps.size(); ++k) {
      std::string p = path + "/pieces/" + std::to_string(k);
      pieces.push_back({rational_from_json(field(ps[k], "lo", p), p + "/lo"),
                        rational_from_json(field(ps[k], "hi", p), p + "/hi"),
                        rational_from_json(field(ps[k], "w", p), p + "/w")});
    }
    return wrap(path, [&] { return WeightedIntervalSpace(a, b, pieces); });
  }
  Rational w = j.contains("w") ? rational_from_json(j.at("w"), path + "/w") : Rational(1);
  return wrap(path, [&] { return WeightedIntervalSpace::uniform(a, b, w); });
}

BVRepresentation target_from_json(const Json& j, const std::string& path) {
  std::string kind = kind_of(j, path);
  if (kind == "cantor") {
    double scale = j.contains("scale") ? number(j.at("scale"), path + "/scale") : 2.0;
    int depth = j.contains("depth") ? integer(j.at("depth"), path + "/depth") : 28;
    if (depth < 1 || depth > 60) fail(path + "/depth", "depth must be in [1, 60]");
    return BVRepresentation(CantorFunction(scale, depth), {}, "cantor");
  }
  if (kind != "grid") fail(path + "/kind", "unknown target kind '" + kind + "'");
  const Json& ns = array(field(j, "nodes", path), path + "/nodes");
  const Json& vs = array(field(j, "values", path), path + "/values");
  std::vector<Rational> nodes;
  std::vector<double> values;
  for (size_t k = 0; k < ns.size(); ++k) {
    nodes.push_back(rational_from_json(ns[k], path + "/nodes/" + std::to_string(k)));
  }
  for (size_t k = 0; k < vs.size(); ++k) {
    values.push_back(number(vs[k], path + "/values/" + std::to_string(k)));
  }
  std::vector<Jump> jumps;
  if (j.contains("jumps")) {
    const Json& js = array(j.at("jumps"), path + "/jumps");
    for (size_t k = 0; k < js.size(); ++k) {
      std::string p = path + "/jumps/" + std::to_string(k);
      jumps.push_back({rational_from_json(field(js[k], "x", p), p + "/x"),
                       number(field(js[k], "height", p), p + "/height")});
    }
  }
  std::string label = j.contains("label") && j.at("label").is_string()
                          ? j.at("label").get<std::string>()
                          : std::string();
  return wrap(path, [&] {
    return BVRepresentation(GridFunction(nodes, values), jumps, label);
  });
}

OpenSet open_set_from_json(const Json& j, const std::string& path) {
  const Json& arr = array(j, path);
  std::vector<Interval> comps;
  for (size_t k = 0; k < arr.size(); ++k) {
    std::string p = path + "/" + std::to_string(k);
    const Json& c = array(arr[k], p);
    if (c.size() != 2) fail(p, "expected [lo, hi]");
    comps.push_back({rational_from_json(c[0], p + "/0"), rational_from_json(c[1], p + "/1")});
  }
  return wrap(path, [&] { return OpenSet(comps); });
}

Schedule schedule_from_json(const Json& j, const std::string& path,
                            const Rational& length) {
  if (!j.is_object()) fail(path, "expected an object");
  Schedule s;
  if (j.contains("K")) {
    int K = integer(j.at("K"), path + "/K");
    if (K < 0 || K > 7) fail(path + "/K", "K must be in [0, 7]");
    s = Schedule::standard(K, length);
  } else {
    const Json& ps = array(field(j, "points", path), path + "/points");
    for (size_t k = 0; k < ps.size(); ++k) {
      std::string p = path + "/points/" + std::to_string(k);
      s.points.push_back({integer(field(ps[k], "n", p), p + "/n"),
                          rational_from_json(field(ps[k], "eps", p), p + "/eps")});
    }
  }
  wrap(path, [&] {
    s.validate();
    return 0;
  });
  return s;
}

ExperimentConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected an object");
  ExperimentConfig cfg;
  const Json& e = field(j, "experiment", "");
  if (!e.is_string()) fail("/experiment", "expected a string");
  cfg.experiment = e.get<std::string>();
  static const std::array<const char*, 7> kKnown = {
      "coarea", "relax", "cantor", "whitney", "traces", "minimize", "suite"};
  bool known = false;
  for (const char* k : kKnown) known = known || cfg.experiment == k;
  if (!known) fail("/experiment", "unknown experiment '" + cfg.experiment + "'");
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_unsigned()) fail("/seed", "expected a nonnegative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  cfg.body = std::move(j);
  return cfg;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

}  // namespace bvrelax
