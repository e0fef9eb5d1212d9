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
#ifndef BVRELAX_BVFUNC_HPP_
#define BVRELAX_BVFUNC_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bvrelax/cantor.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/rational.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

// Piecewise-linear interpolant of values at strictly increasing nodes.
class GridFunction {
 public:
  GridFunction(std::vector<Rational> nodes, std::vector<double> values);
  // f sampled on the uniform n-cell grid of [lo,hi].
  template <typename F>
  static GridFunction sample(const Rational& lo, const Rational& hi, int n,
                             F&& f);

  const std::vector<Rational>& nodes() const { return nodes_; }
  const std::vector<double>& nodes_d() const { return nodes_d_; }
  const std::vector<double>& values() const { return values_; }
  size_t cells() const { return values_.size() - 1; }
  const Rational& lower() const { return nodes_.front(); }
  const Rational& upper() const { return nodes_.back(); }

  double slope(size_t cell) const;
  double operator()(double x) const;
  double operator()(const Rational& x) const;
  // Integral of u dx over [lo,hi] inside the node span.
  double integral(double lo, double hi) const;

 private:
  std::vector<Rational> nodes_;
  std::vector<double> nodes_d_;
  std::vector<double> values_;
};

template <typename F>
GridFunction GridFunction::sample(const Rational& lo, const Rational& hi, int n,
                                  F&& f) {
  std::vector<Rational> nodes;
  std::vector<double> values;
  nodes.reserve(n + 1);
  values.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational x = lo + (hi - lo) * k / n;
    values.push_back(f(to_double(x)));
    nodes.push_back(std::move(x));
  }
  return GridFunction(std::move(nodes), std::move(values));
}

struct Jump {
  Rational x;
  double height;  // right limit minus left limit
};

using AcPart = std::variant<GridFunction, CantorFunction>;

// u = ac + sum_j height_j H(x - x_j), H the Heaviside step vanishing at 0.
class BVRepresentation {
 public:
  BVRepresentation(AcPart ac, std::vector<Jump> jumps = {},
                   std::string label = {});

  const AcPart& ac() const { return ac_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const std::string& label() const { return label_; }
  const GridFunction* grid() const { return std::get_if<GridFunction>(&ac_); }
  bool is_cantor() const { return std::holds_alternative<CantorFunction>(ac_); }

  Rational lower() const;
  Rational upper() const;

  double ac_value(double x) const;
  double left_limit(const Rational& x) const;
  double right_limit(const Rational& x) const;
  // Value away from jumps; at a jump reports the right limit.
  double operator()(double x) const;
  // min and max of the one-sided limits.
  double lower_value(const Rational& x) const;
  double upper_value(const Rational& x) const;
  bool has_jump_at(const Rational& x) const;

  // Integral of u d mu over [lo,hi].
  double integral(const WeightedIntervalSpace& space, double lo,
                  double hi) const;

 private:
  AcPart ac_;
  std::vector<Jump> jumps_;
  std::string label_;
};

// Piecewise-constant function on strictly increasing nodes, one value per
// cell.
struct PiecewiseConstant {
  std::vector<Rational> nodes;
  std::vector<double> values;
};

// a d mu = dx_density chi_A dx on the limit Cantor set A.
struct CantorDensity {
  double dx_density;
};

using Density = std::variant<PiecewiseConstant, CantorDensity>;

struct Atom {
  Rational x;
  double mass;
};

// Level sets of a density over a set, as (value, mu-measure) pairs.
using DensityDistribution = std::vector<std::pair<double, double>>;

// d||Du|| = a d mu + sum of atoms. Density is with respect to mu.
struct VariationMeasure {
  Density density;
  std::vector<Atom> atoms;

  double density_integral(const WeightedIntervalSpace& space, double lo,
                          double hi) const;
  double density_integral(const WeightedIntervalSpace& space,
                          const OpenSet& set) const;
  double atomic_mass(const OpenSet& set) const;
  double atomic_mass(double lo, double hi) const;  // atoms in (lo,hi)
  double mass(const WeightedIntervalSpace& space, const OpenSet& set) const;
  DensityDistribution distribution(const WeightedIntervalSpace& space,
                                   const OpenSet& set) const;
};

// int_Omega f(a) d mu + f_inf nu^s(Omega).
double measure_functional(const Integrand& f, const VariationMeasure& nu,
                          const WeightedIntervalSpace& space,
                          const OpenSet& omega);

// |u'| per cell; the minimal upper gradient of a piecewise-linear u.
PiecewiseConstant upper_gradient(const GridFunction& u,
                                 const WeightedIntervalSpace& space);

double energy(const Integrand& f, const GridFunction& u,
              const WeightedIntervalSpace& space, const OpenSet& omega);

double perimeter(const OpenSet& level_set, const WeightedIntervalSpace& space,
                 const OpenSet& omega);

struct CoareaSides {
  double lhs;  // sum over cells of |u'| w times length
  double rhs;  // integral over t of P({u > t}, Omega)
};

CoareaSides coarea_both_sides(const GridFunction& u,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega);

VariationMeasure variation_measure_of(const BVRepresentation& u,
                                      const WeightedIntervalSpace& space);

// Integral of |u - v| d mu over omega. Exact for two grid functions without
// jumps; otherwise midpoint quadrature with `samples` cells per component.
double l1_distance(const BVRepresentation& u, const BVRepresentation& v,
                   const WeightedIntervalSpace& space, const OpenSet& omega,
                   int samples = 1 << 16);
double l1_norm(const BVRepresentation& u, const WeightedIntervalSpace& space,
               const OpenSet& omega, int samples = 1 << 16);

}  // namespace bvrelax

#endif  // BVRELAX_BVFUNC_HPP_
