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
#include "bvrelax/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bvrelax {

Rational cantor_alpha(int m) {
  if (m < 0) throw std::invalid_argument("cantor: level must be >= 0");
  return Rational(1, 2) + dyadic(m + 1);
}

Rational cantor_interval_length(int j) { return cantor_alpha(j) * dyadic(j); }

CantorLevel cantor_intervals(int m) {
  if (m < 0) throw std::invalid_argument("cantor: level must be >= 0");
  CantorLevel level;
  level.m = m;
  level.intervals = {Interval{Rational(0), Rational(1)}};
  for (int i = 1; i <= m; ++i) {
    Rational child = cantor_interval_length(i);
    std::vector<Interval> next;
    std::vector<Interval> removed;
    next.reserve(level.intervals.size() * 2);
    for (const auto& iv : level.intervals) {
      next.push_back({iv.lo, iv.lo + child});
      next.push_back({iv.hi - child, iv.hi});
      removed.push_back({iv.lo + child, iv.hi - child});
    }
    level.intervals = std::move(next);
    level.gaps.push_back(std::move(removed));
  }
  level.alpha = cantor_alpha(m);
  return level;
}

CantorMeasureValue cantor_measure_upto(const Rational& x, int depth) {
  if (x < 0 || x > 1) throw std::invalid_argument("cantor: x outside [0,1]");
  Rational acc = 0;
  Rational p = 0;
  Rational len = 1;
  for (int j = 0; j < depth; ++j) {
    Rational child = cantor_interval_length(j + 1);
    Rational half_mass = dyadic(j + 2);
    if (x <= p + child) {
      len = child;
    } else if (x < p + len - child) {
      return {acc + half_mass, Rational(0)};
    } else {
      acc += half_mass;
      p = p + len - child;
      len = child;
    }
    if (x == p || x == p + len) {
      return {acc + (x == p ? Rational(0) : dyadic(j + 2)), Rational(0)};
    }
  }
  // Inside a level-depth interval carrying A-measure 2^-depth-1.
  Rational mass = dyadic(depth + 1);
  return {acc + mass * (x - p) / len, mass};
}

namespace {

// Level-j interval lengths as doubles; depth rarely exceeds 60.
double interval_length_d(int j) {
  return std::ldexp(0.5 + std::ldexp(1.0, -j - 1), -j);
}

double integral_rec(double p, int j, double base, double lo, double hi,
                    int depth) {
  double len = interval_length_d(j);
  double q = p + len;
  double s = std::max(lo, p);
  double e = std::min(hi, q);
  if (!(s < e)) return 0.0;
  double mass = std::ldexp(1.0, -j - 1);
  if (s == p && e == q) {
    // The profile is antisymmetric about the midpoint.
    return base * len + 0.5 * mass * len;
  }
  if (j >= depth) {
    double fs = base + mass * (s - p) / len;
    double fe = base + mass * (e - p) / len;
    return 0.5 * (fs + fe) * (e - s);
  }
  double child = interval_length_d(j + 1);
  double half = 0.5 * mass;
  double total = integral_rec(p, j + 1, base, lo, hi, depth);
  double gs = std::max(s, p + child);
  double ge = std::min(e, q - child);
  if (gs < ge) total += (base + half) * (ge - gs);
  total += integral_rec(q - child, j + 1, base + half, lo, hi, depth);
  return total;
}

double length_rec(double p, int j, double lo, double hi, int depth) {
  double len = interval_length_d(j);
  double q = p + len;
  double s = std::max(lo, p);
  double e = std::min(hi, q);
  if (!(s < e)) return 0.0;
  double mass = std::ldexp(1.0, -j - 1);
  if (s == p && e == q) return mass;
  if (j >= depth) return mass * (e - s) / len;
  double child = interval_length_d(j + 1);
  return length_rec(p, j + 1, lo, hi, depth) +
         length_rec(q - child, j + 1, lo, hi, depth);
}

}  // namespace

double cantor_measure_upto(double x, int depth) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 0.5;
  return length_rec(0.0, 0, 0.0, x, depth);
}

double cantor_measure_integral(double lo, double hi, int depth) {
  if (hi <= lo) return 0.0;
  double total = 0.0;
  if (hi > 1.0) {
    total += 0.5 * (hi - std::max(lo, 1.0));
    hi = std::max(lo, 1.0);
  }
  lo = std::max(lo, 0.0);
  if (lo < hi) total += integral_rec(0.0, 0, 0.0, lo, hi, depth);
  return total;
}

double cantor_set_length(double lo, double hi, int depth) {
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (!(lo < hi)) return 0.0;
  return length_rec(0.0, 0, lo, hi, depth);
}

double CantorFunction::operator()(double x) const {
  return scale_ * cantor_measure_upto(x, depth_);
}

Rational CantorFunction::exact(const Rational& x) const {
  return from_double(scale_) * cantor_measure_upto(x, depth_).value;
}

double CantorFunction::integral(double lo, double hi) const {
  return scale_ * cantor_measure_integral(lo, hi, depth_);
}

WeightedIntervalSpace cantor_space(int m) {
  CantorLevel level = cantor_intervals(m);
  std::vector<WeightPiece> pieces;
  Rational cursor = 0;
  for (const auto& iv : level.intervals) {
    if (cursor < iv.lo) pieces.push_back({cursor, iv.lo, Rational(1)});
    pieces.push_back({iv.lo, iv.hi, Rational(2)});
    cursor = iv.hi;
  }
  return WeightedIntervalSpace(Rational(0), Rational(1), std::move(pieces));
}

}  // namespace bvrelax
