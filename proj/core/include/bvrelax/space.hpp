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
#ifndef BVRELAX_SPACE_HPP_
#define BVRELAX_SPACE_HPP_

#include <cstdint>
#include <vector>

#include "bvrelax/rational.hpp"

namespace bvrelax {

// Open interval (lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  bool operator==(const Interval&) const = default;
};

// Finite union of disjoint, sorted, nonempty open intervals.
class OpenSet {
 public:
  OpenSet() = default;
  // Sorts and validates; touching components such as (0,1) and (1,2) stay
  // separate because the shared endpoint is not in the set.
  explicit OpenSet(std::vector<Interval> components);
  static OpenSet interval(Rational lo, Rational hi);

  const std::vector<Interval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool contains(const Rational& x) const;
  bool contains(double x) const;
  // Endpoints of all components, sorted, without duplicates.
  std::vector<Rational> boundary() const;
  Rational lower() const { return components_.front().lo; }
  Rational upper() const { return components_.back().hi; }

  OpenSet unite(const OpenSet& other) const;
  OpenSet intersect(const OpenSet& other) const;
  bool subset_of(const OpenSet& other) const;
  // Closure of this set is inside other.
  bool compactly_inside(const OpenSet& other) const;

 private:
  std::vector<Interval> components_;
};

struct WeightPiece {
  Rational lo;
  Rational hi;
  Rational w;
};

// The compact interval [a,b] with d mu = w dx and w piecewise constant.
//
// Pieces partition [a,b] and every weight lies in [w_min, w_max] with
// w_min > 0. Set endpoints and masses are exact rationals throughout.
class WeightedIntervalSpace {
 public:
  WeightedIntervalSpace(Rational a, Rational b, std::vector<WeightPiece> pieces);
  static WeightedIntervalSpace uniform(Rational a, Rational b, Rational w = 1);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  double a_d() const { return a_d_; }
  double b_d() const { return b_d_; }
  const std::vector<WeightPiece>& pieces() const { return pieces_; }
  const Rational& w_min() const { return w_min_; }
  const Rational& w_max() const { return w_max_; }
  OpenSet interior() const { return OpenSet::interval(a_, b_); }

  // Weight breaks strictly inside (a,b) where the value changes.
  std::vector<Rational> breaks() const;
  // Piece endpoints strictly inside (lo, hi), sorted.
  std::vector<Rational> breaks_in(const Rational& lo, const Rational& hi) const;

  // mu of [lo,hi] clipped to [a,b].
  Rational mu(const Rational& lo, const Rational& hi) const;
  Rational mu(const OpenSet& set) const;
  double mu_d(double lo, double hi) const;

  // One-sided weight limits; the missing side at a domain endpoint throws.
  const Rational& weight_left(const Rational& x) const;
  const Rational& weight_right(const Rational& x) const;
  // Weight of the piece whose interior contains x; x on a break reports the
  // right piece.
  double weight_at(double x) const;
  const Rational& weight_at(const Rational& x) const;

  // H({x}) = lim mu(B(x,r))/r.
  Rational point_hausdorff(const Rational& x) const;
  // Cost per unit jump height at an interior x.
  Rational jump_cost_density(const Rational& x) const;

  // Constants of the standing assumptions, analytic for this class.
  double doubling_bound() const;
  double poincare_bound() const;
  // C in mu(B(y,r))/mu(B(x,R)) >= C (r/R) for r <= R, y in B(x,R).
  double dimension_constant() const;

 private:
  size_t piece_index(const Rational& x) const;  // piece with lo <= x < hi

  Rational a_;
  Rational b_;
  std::vector<WeightPiece> pieces_;
  Rational w_min_;
  Rational w_max_;
  double a_d_;
  double b_d_;
  std::vector<double> lo_d_;
  std::vector<double> w_d_;
};

struct DoublingReport {
  double c_d_empirical = 0.0;
  double c_d_bound = 0.0;
  double c_p_empirical = 0.0;
  double c_p_bound = 0.0;
  double dimension_c_empirical = 0.0;
  double dimension_c_bound = 0.0;
  int samples = 0;
  // Ratios of floating-point measures carry a few ulps of rounding.
  bool ok() const {
    constexpr double rel = 1e-9;
    return c_d_empirical <= c_d_bound * (1 + rel) && c_p_empirical <= c_p_bound * (1 + rel) &&
           dimension_c_empirical >= dimension_c_bound * (1 - rel);
  }
};

// Samples balls for the doubling and dimension ratios and random
// piecewise-linear test functions for the Poincare ratio.
DoublingReport doubling_check(const WeightedIntervalSpace& space, int samples,
                              std::uint64_t seed = 1);

}  // namespace bvrelax

#endif  // BVRELAX_SPACE_HPP_
