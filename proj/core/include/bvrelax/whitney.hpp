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


#ifndef BVRELAX_WHITNEY_HPP_
#define BVRELAX_WHITNEY_HPP_

#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

struct Ball {
  double center;
  double radius;
  double lo() const { return center - radius; }
  double hi() const { return center + radius; }
};

// Balls are clipped to [a,b]. A component of the host that reaches a or b is
// relatively open there, so radii do not shrink towards that end.
struct WhitneyCover {
  std::vector<Ball> balls;  // sorted by center
  int scale = 1;
  double tau = 5.0;
  int overlap_bound = 0;     // c_o
  int overlap_measured = 0;  // max number of tau-balls meeting one tau-ball
  double radius_floor = 0.0;
  OpenSet host;
};

struct CoverInvariants {
  bool radius_bound = true;    // r_j <= 1/i
  bool dilated_inside = true;  // tau B_j inside the host
  bool overlap = true;         // overlap_measured <= c_o
  bool neighbour_ratio = true; // meeting tau-balls have r_j <= 2 r_k
  bool covers = true;          // uncovered margin below 8 tau radius_floor
  double uncovered_margin = 0.0;
  bool ok() const {
    return radius_bound && dilated_inside && overlap && neighbour_ratio && covers;
  }
};

// Greedy maximal packing of half-balls along each component, radii
// r(x) = min(dist(x, X \ G), 1/i) / (4 tau). Packing towards a boundary
// point of G stops once r drops below radius_floor.
WhitneyCover build_cover(const WeightedIntervalSpace& space, const OpenSet& G,
                         int i, double tau = 5.0);
CoverInvariants check_cover(const WhitneyCover& cover,
                            const WeightedIntervalSpace& space);

// phi_j = psi_j / sum_k psi_k with tents psi_j supported on 2 B_j. Pieces
// between consecutive tent breakpoints carry their active tents, so every
// psi_j and the sum are affine on a piece.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(const WhitneyCover& cover);

  size_t size() const { return balls_.size(); }
  double tent(size_t j, double x) const;
  double tent_slope(size_t j, double x) const;
  double phi(size_t j, double x) const;
  double sum_tents(double x) const;
  double sum_phi(double x) const;
  // Tents active on the piece containing x.
  const std::vector<size_t>& active(double x) const;
  const std::vector<double>& breakpoints() const { return breaks_; }
  // Lip(phi_j), exact: a ratio of affine functions is monotone in slope on
  // each piece, so the sup is attained at piece endpoints.
  const std::vector<double>& lipschitz() const { return lip_; }
  // max_j Lip(phi_j) r_j.
  double lipschitz_scale() const { return lip_scale_; }
  // Largest number of 2B_j containing a point.
  int multiplicity() const { return multiplicity_; }

 private:
  size_t piece_of(double x) const;

  std::vector<Ball> balls_;
  std::vector<double> breaks_;
  std::vector<std::vector<size_t>> active_;
  std::vector<double> lip_;
  double lip_scale_ = 0.0;
  int multiplicity_ = 0;
};

// Ball averages of u against mu.
std::vector<double> ball_averages(const BVRepresentation& u,
                                  const WhitneyCover& cover,
                                  const WeightedIntervalSpace& space);

// sum_j u_{B_j} phi_j sampled at every tent breakpoint, every ball edge and
// `refine` interior points per piece.
GridFunction discrete_convolution(const BVRepresentation& u,
                                  const WhitneyCover& cover,
                                  const PartitionOfUnity& pou,
                                  const WeightedIntervalSpace& space,
                                  int refine = 3);

struct WhitneyGradients {
  PiecewiseConstant g;
  PiecewiseConstant g_a;
  PiecewiseConstant g_s;
  double constant = 0.0;  // C
  double integral_g_s = 0.0;
  double singular_bound = 0.0;  // c_o C nu^s(union of tau B_j)
  bool ok = false;
};

// g = C sum_j chi_{B_j} ||Du||(tau B_j) / mu(B_j), split into the density and
// atomic parts of ||Du||. constant <= 0 selects
// C = 4 m C_phi w_max / w_min, which dominates the upper gradient of the
// discrete convolution on every ball.
WhitneyGradients whitney_upper_gradients(const WhitneyCover& cover,
                                         const PartitionOfUnity& pou,
                                         const VariationMeasure& du,
                                         const WeightedIntervalSpace& space,
                                         double constant = 0.0);

// Largest |slope| - g over the cells of the convolution's grid inside the
// union of the balls; <= 0 when g is an upper gradient there.
double gradient_domination_gap(const GridFunction& conv,
                               const PiecewiseConstant& g,
                               const WhitneyCover& cover);

// max over mu(A) <= delta of int_A g d mu, by greedy filling of the cells in
// decreasing order of g.
double adversarial_integral(const PiecewiseConstant& g,
                            const WeightedIntervalSpace& space, double delta);

struct ScaleRow {
  int scale = 0;
  size_t balls = 0;
  int overlap_measured = 0;
  double l1_error = 0.0;  // of the discrete convolution, when a target is set
  double int_g_s = 0.0;
  double singular_bound = 0.0;
  double excluded_singular = 0.0;  // nu^s(F_i)
  std::vector<double> adversarial;  // per delta
  std::vector<double> adversarial_bound;
  bool invariants_ok = false;
};

struct EquiintegrabilityReport {
  std::vector<double> deltas;
  std::vector<ScaleRow> rows;
  std::vector<double> profile;  // sup over scales, per delta
  bool profile_monotone = true;
  bool profile_vanishes = false;  // last / first <= 1e-2
  bool bound_ok = true;
  // Candidate limit on dyadic cells Q to depth 10: int_Q g at the finest
  // scale against c_o int over Q widened by that scale's leakage of a d mu.
  double limit_slack = 0.0;  // min over cells of bound - candidate
  bool limit_ok = false;
  // Largest change of int_Q g between the last two scales; reported only.
  double weak_l1_cauchy = 0.0;
  bool ok() const {
    return profile_monotone && profile_vanishes && bound_ok && limit_ok;
  }
};

// g_i uses C = 1. F_i removes open neighbourhoods of radius
// (b - a) / (16 i) around every atom, so nu^s(F_i) = 0 < 1/i.
EquiintegrabilityReport equiintegrability_report(
    const WeightedIntervalSpace& space, const OpenSet& F,
    const VariationMeasure& du, const std::vector<int>& scales,
    const std::vector<double>& deltas, double tau = 5.0);

struct NewtonianReport {
  double c_empirical = 0.0;  // ess sup of g_u / a over cells with a > 0
  double integral_g = 0.0;   // int_F g_u d mu
  double variation = 0.0;    // ||Du||(F)
  size_t skipped_cells = 0;  // a = 0 and g_u = 0
  bool ok = false;           // integral_g <= c_empirical variation
};

// u must have no jumps in F.
NewtonianReport newtonian_check(const BVRepresentation& u,
                                const WeightedIntervalSpace& space,
                                const OpenSet& F);

}  // namespace bvrelax

#endif  // BVRELAX_WHITNEY_HPP_
