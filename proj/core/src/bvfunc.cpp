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


#include "bvrelax/bvfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bvrelax {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Integral over [p,q] of |alpha + beta x|.
double abs_affine(double alpha, double beta, double p, double q) {
  double vp = alpha + beta * p;
  double vq = alpha + beta * q;
  if ((vp >= 0 && vq >= 0) || (vp <= 0 && vq <= 0)) {
    return 0.5 * std::fabs(vp + vq) * (q - p);
  }
  double z = -alpha / beta;
  return 0.5 * (std::fabs(vp) * (z - p) + std::fabs(vq) * (q - z));
}

std::vector<double> piece_cuts(const WeightedIntervalSpace& space, double lo,
                               double hi) {
  std::vector<double> cuts{lo};
  for (const auto& p : space.pieces()) {
    double x = to_double(p.lo);
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  return cuts;
}

}  // namespace

GridFunction::GridFunction(std::vector<Rational> nodes,
                           std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size() || nodes_.size() < 2) {
    throw std::invalid_argument("grid function: need >= 2 nodes with values");
  }
  for (size_t k = 1; k < nodes_.size(); ++k) {
    if (!(nodes_[k - 1] < nodes_[k])) {
      throw std::invalid_argument(
          "grid function: nodes must be strictly increasing");
    }
  }
  nodes_d_.reserve(nodes_.size());
  for (const auto& x : nodes_) nodes_d_.push_back(to_double(x));
}

double GridFunction::slope(size_t cell) const {
  return (values_[cell + 1] - values_[cell]) /
         (nodes_d_[cell + 1] - nodes_d_[cell]);
}

double GridFunction::operator()(double x) const {
  if (x <= nodes_d_.front()) return values_.front();
  if (x >= nodes_d_.back()) return values_.back();
  auto it = std::upper_bound(nodes_d_.begin(), nodes_d_.end(), x);
  size_t k = static_cast<size_t>(it - nodes_d_.begin());
  double t = (x - nodes_d_[k - 1]) / (nodes_d_[k] - nodes_d_[k - 1]);
  return values_[k - 1] + t * (values_[k] - values_[k - 1]);
}

double GridFunction::operator()(const Rational& x) const {
  if (x <= nodes_.front()) return values_.front();
  if (x >= nodes_.back()) return values_.back();
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  size_t k = static_cast<size_t>(it - nodes_.begin());
  if (nodes_[k - 1] == x) return values_[k - 1];
  double t = to_double((x - nodes_[k - 1]) / (nodes_[k] - nodes_[k - 1]));
  return values_[k - 1] + t * (values_[k] - values_[k - 1]);
}

double GridFunction::integral(double lo, double hi) const {
  lo = std::max(lo, nodes_d_.front());
  hi = std::min(hi, nodes_d_.back());
  if (!(lo < hi)) return 0.0;
  auto it = std::upper_bound(nodes_d_.begin(), nodes_d_.end(), lo);
  size_t k = static_cast<size_t>(it - nodes_d_.begin());
  double total = 0.0;
  double s = lo;
  while (s < hi) {
    double e = k < nodes_d_.size() ? std::min(hi, nodes_d_[k]) : hi;
    total += 0.5 * ((*this)(s) + (*this)(e)) * (e - s);
    s = e;
    ++k;
  }
  return total;
}

BVRepresentation::BVRepresentation(AcPart ac, std::vector<Jump> jumps,
                                   std::string label)
    : ac_(std::move(ac)), jumps_(std::move(jumps)), label_(std::move(label)) {
  std::sort(jumps_.begin(), jumps_.end(),
            [](const Jump& a, const Jump& b) { return a.x < b.x; });
  Rational lo = lower();
  Rational hi = upper();
  for (size_t k = 0; k < jumps_.size(); ++k) {
    if (!(lo < jumps_[k].x && jumps_[k].x < hi)) {
      throw std::invalid_argument("bv representation: jump not interior");
    }
    if (jumps_[k].height == 0.0 || !std::isfinite(jumps_[k].height)) {
      throw std::invalid_argument("bv representation: jump height must be nonzero");
    }
    if (k > 0 && jumps_[k].x == jumps_[k - 1].x) {
      throw std::invalid_argument("bv representation: duplicate jump location");
    }
  }
}

Rational BVRepresentation::lower() const {
  if (const auto* g = grid()) return g->lower();
  return Rational(0);
}

Rational BVRepresentation::upper() const {
  if (const auto* g = grid()) return g->upper();
  return Rational(1);
}

double BVRepresentation::ac_value(double x) const {
  return std::visit([x](const auto& part) { return part(x); }, ac_);
}

double BVRepresentation::left_limit(const Rational& x) const {
  double v = std::visit(
      Overloaded{[&](const GridFunction& g) { return g(x); },
                 [&](const CantorFunction& c) { return to_double(c.exact(x)); }},
      ac_);
  for (const auto& j : jumps_) {
    if (j.x < x) v += j.height;
  }
  return v;
}

double BVRepresentation::right_limit(const Rational& x) const {
  double v = left_limit(x);
  for (const auto& j : jumps_) {
    if (j.x == x) v += j.height;
  }
  return v;
}

double BVRepresentation::operator()(double x) const {
  double v = ac_value(x);
  for (const auto& j : jumps_) {
    if (to_double(j.x) <= x) v += j.height;
  }
  return v;
}

double BVRepresentation::lower_value(const Rational& x) const {
  return std::min(left_limit(x), right_limit(x));
}

double BVRepresentation::upper_value(const Rational& x) const {
  return std::max(left_limit(x), right_limit(x));
}

bool BVRepresentation::has_jump_at(const Rational& x) const {
  for (const auto& j : jumps_) {
    if (j.x == x) return true;
  }
  return false;
}

double BVRepresentation::integral(const WeightedIntervalSpace& space, double lo,
                                  double hi) const {
  lo = std::max(lo, space.a_d());
  hi = std::min(hi, space.b_d());
  if (!(lo < hi)) return 0.0;
  std::vector<double> cuts = piece_cuts(space, lo, hi);
  double total = 0.0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    double s = cuts[k];
    double e = cuts[k + 1];
    double w = space.weight_at(0.5 * (s + e));
    total += w * std::visit([&](const auto& part) { return part.integral(s, e); },
                            ac_);
  }
  for (const auto& j : jumps_) {
    double x = to_double(j.x);
    total += j.height * space.mu_d(std::max(lo, x), hi);
  }
  return total;
}

double VariationMeasure::density_integral(const WeightedIntervalSpace& space,
                                          double lo, double hi) const {
  lo = std::max(lo, space.a_d());
  hi = std::min(hi, space.b_d());
  if (!(lo < hi)) return 0.0;
  return std::visit(
      Overloaded{
          [&](const PiecewiseConstant& pc) {
            double total = 0.0;
            for (size_t c = 0; c < pc.values.size(); ++c) {
              if (pc.values[c] == 0.0) continue;
              double s = std::max(lo, to_double(pc.nodes[c]));
              double e = std::min(hi, to_double(pc.nodes[c + 1]));
              if (s < e) total += pc.values[c] * space.mu_d(s, e);
            }
            return total;
          },
          [&](const CantorDensity& cd) {
            return cd.dx_density * cantor_set_length(lo, hi, 60);
          }},
      density);
}

double VariationMeasure::density_integral(const WeightedIntervalSpace& space,
                                          const OpenSet& set) const {
  double total = 0.0;
  for (const auto& c : set.components()) {
    total += density_integral(space, to_double(c.lo), to_double(c.hi));
  }
  return total;
}

double VariationMeasure::atomic_mass(const OpenSet& set) const {
  double total = 0.0;
  for (const auto& a : atoms) {
    if (set.contains(a.x)) total += a.mass;
  }
  return total;
}

double VariationMeasure::atomic_mass(double lo, double hi) const {
  double total = 0.0;
  for (const auto& a : atoms) {
    double x = to_double(a.x);
    if (lo < x && x < hi) total += a.mass;
  }
  return total;
}

double VariationMeasure::mass(const WeightedIntervalSpace& space,
                              const OpenSet& set) const {
  return density_integral(space, set) + atomic_mass(set);
}

DensityDistribution VariationMeasure::distribution(
    const WeightedIntervalSpace& space, const OpenSet& set) const {
  DensityDistribution out;
  std::visit(
      Overloaded{
          [&](const PiecewiseConstant& pc) {
            for (const auto& comp : set.components()) {
              for (size_t c = 0; c < pc.values.size(); ++c) {
                Rational s = std::max(comp.lo, pc.nodes[c]);
                Rational e = std::min(comp.hi, pc.nodes[c + 1]);
                if (s < e) out.emplace_back(pc.values[c], to_double(space.mu(s, e)));
              }
              // Parts of the set not covered by the density's nodes carry 0.
              Rational covered_lo = std::max(comp.lo, pc.nodes.front());
              Rational covered_hi = std::min(comp.hi, pc.nodes.back());
              if (comp.lo < covered_lo) {
                out.emplace_back(0.0, to_double(space.mu(comp.lo, std::min(covered_lo, comp.hi))));
              }
              if (covered_hi < comp.hi) {
                out.emplace_back(0.0, to_double(space.mu(std::max(covered_hi, comp.lo), comp.hi)));
              }
            }
          },
          [&](const CantorDensity& cd) {
            for (const auto& comp : set.components()) {
              double lo = to_double(comp.lo);
              double hi = to_double(comp.hi);
              std::vector<double> cuts = piece_cuts(space, lo, hi);
              double total = to_double(space.mu(comp.lo, comp.hi));
              double on_a = 0.0;
              for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                double w = space.weight_at(0.5 * (cuts[k] + cuts[k + 1]));
                double len = cantor_set_length(cuts[k], cuts[k + 1], 60);
                if (len > 0.0) {
                  out.emplace_back(cd.dx_density / w, w * len);
                  on_a += w * len;
                }
              }
              out.emplace_back(0.0, total - on_a);
            }
          }},
      density);
  return out;
}

double measure_functional(const Integrand& f, const VariationMeasure& nu,
                          const WeightedIntervalSpace& space,
                          const OpenSet& omega) {
  double total = 0.0;
  for (const auto& [value, measure] : nu.distribution(space, omega)) {
    if (measure > 0.0) total += f(value) * measure;
  }
  return total + f.f_inf() * nu.atomic_mass(omega);
}

PiecewiseConstant upper_gradient(const GridFunction& u,
                                 const WeightedIntervalSpace& space) {
  if (u.lower() < space.a() || u.upper() > space.b()) {
    throw std::invalid_argument("upper gradient: grid outside the space");
  }
  PiecewiseConstant g{u.nodes(), {}};
  g.values.reserve(u.cells());
  for (size_t c = 0; c < u.cells(); ++c) g.values.push_back(std::fabs(u.slope(c)));
  return g;
}

double energy(const Integrand& f, const GridFunction& u,
              const WeightedIntervalSpace& space, const OpenSet& omega) {
  if (!omega.empty() && (omega.lower() < u.lower() || omega.upper() > u.upper())) {
    throw std::invalid_argument("energy: omega outside the grid span");
  }
  double total = 0.0;
  const auto& nodes = u.nodes();
  for (const auto& comp : omega.components()) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), comp.lo);
    size_t c = static_cast<size_t>(it - nodes.begin()) - 1;
    for (; c < u.cells() && nodes[c] < comp.hi; ++c) {
      Rational s = std::max(comp.lo, nodes[c]);
      Rational e = std::min(comp.hi, nodes[c + 1]);
      if (s < e) total += f(std::fabs(u.slope(c))) * to_double(space.mu(s, e));
    }
  }
  return total;
}

double perimeter(const OpenSet& level_set, const WeightedIntervalSpace& space,
                 const OpenSet& omega) {
  // Endpoints shared by two components are not boundary points of the
  // indicator, which agrees a.e. with that of the merged interval.
  const auto& comps = level_set.components();
  std::vector<Rational> points;
  for (size_t k = 0; k < comps.size(); ++k) {
    if (k == 0 || comps[k - 1].hi != comps[k].lo) points.push_back(comps[k].lo);
    if (k + 1 == comps.size() || comps[k + 1].lo != comps[k].hi) {
      points.push_back(comps[k].hi);
    }
  }
  double total = 0.0;
  for (const auto& x : points) {
    if (omega.contains(x)) total += to_double(space.jump_cost_density(x));
  }
  return total;
}

CoareaSides coarea_both_sides(const GridFunction& u,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega) {
  // Restrict u to omega: sub-cells split at weight pieces and omega ends.
  struct Piece {
    double p, q, up, uq, w;
  };
  std::vector<Piece> pieces;
  std::vector<double> levels;
  for (const auto& comp : omega.components()) {
    std::vector<Rational> cuts{comp.lo, comp.hi};
    for (const auto& x : u.nodes()) {
      if (comp.lo < x && x < comp.hi) cuts.push_back(x);
    }
    for (const auto& x : space.breaks_in(comp.lo, comp.hi)) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      Piece pc{to_double(cuts[k]), to_double(cuts[k + 1]), u(cuts[k]),
               u(cuts[k + 1]), to_double(space.weight_right(cuts[k]))};
      pieces.push_back(pc);
      levels.push_back(pc.up);
      levels.push_back(pc.uq);
    }
  }

  CoareaSides out{0.0, 0.0};
  for (const auto& pc : pieces) out.lhs += std::fabs(pc.uq - pc.up) * pc.w;

  // P({u > t}) is constant between consecutive critical levels; evaluate it
  // at midpoints by locating the crossings.
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (size_t k = 0; k + 1 < levels.size(); ++k) {
    double t = 0.5 * (levels[k] + levels[k + 1]);
    double per = 0.0;
    for (const auto& pc : pieces) {
      if ((pc.up - t) * (pc.uq - t) < 0.0) {
        double x = pc.p + (t - pc.up) / (pc.uq - pc.up) * (pc.q - pc.p);
        per += space.weight_at(x);
      }
    }
    out.rhs += per * (levels[k + 1] - levels[k]);
  }
  return out;
}

VariationMeasure variation_measure_of(const BVRepresentation& u,
                                      const WeightedIntervalSpace& space) {
  VariationMeasure nu;
  if (const auto* g = u.grid()) {
    nu.density = upper_gradient(*g, space);
  } else {
    // Every point of the limit set is a limit of gaps at the minimal weight,
    // which is where Lipschitz approximants place their rise.
    const auto& c = std::get<CantorFunction>(u.ac());
    nu.density = CantorDensity{std::fabs(c.scale()) * to_double(space.w_min())};
  }
  for (const auto& j : u.jumps()) {
    nu.atoms.push_back({j.x, std::fabs(j.height) * to_double(space.jump_cost_density(j.x))});
  }
  return nu;
}

double l1_distance(const BVRepresentation& u, const BVRepresentation& v,
                   const WeightedIntervalSpace& space, const OpenSet& omega,
                   int samples) {
  double total = 0.0;
  const GridFunction* gu = u.grid();
  const GridFunction* gv = v.grid();
  if (gu && gv && u.jumps().empty() && v.jumps().empty()) {
    for (const auto& comp : omega.components()) {
      std::vector<Rational> cuts{comp.lo, comp.hi};
      for (const auto* g : {gu, gv}) {
        for (const auto& x : g->nodes()) {
          if (comp.lo < x && x < comp.hi) cuts.push_back(x);
        }
      }
      for (const auto& x : space.breaks_in(comp.lo, comp.hi)) cuts.push_back(x);
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        double p = to_double(cuts[k]);
        double q = to_double(cuts[k + 1]);
        double dp = (*gu)(cuts[k]) - (*gv)(cuts[k]);
        double dq = (*gu)(cuts[k + 1]) - (*gv)(cuts[k + 1]);
        double beta = (dq - dp) / (q - p);
        total += to_double(space.weight_right(cuts[k])) *
                 abs_affine(dp - beta * p, beta, p, q);
      }
    }
    return total;
  }
  for (const auto& comp : omega.components()) {
    double lo = to_double(comp.lo);
    double hi = to_double(comp.hi);
    double h = (hi - lo) / samples;
    for (int k = 0; k < samples; ++k) {
      double x = lo + (k + 0.5) * h;
      total += std::fabs(u(x) - v(x)) * space.weight_at(x) * h;
    }
  }
  return total;
}

double l1_norm(const BVRepresentation& u, const WeightedIntervalSpace& space,
               const OpenSet& omega, int samples) {
  GridFunction zero({omega.lower(), omega.upper()}, {0.0, 0.0});
  return l1_distance(u, BVRepresentation(zero), space, omega, samples);
}

}  // namespace bvrelax
