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


#ifndef BVRELAX_TRACES_HPP_
#define BVRELAX_TRACES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/relax.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

enum class TraceSide { kInside, kOutside };

struct TraceValue {
  Rational point;
  TraceSide side = TraceSide::kInside;
  double value = 0.0;
  double residual = 0.0;  // Cauchy residual of the averaged means
  bool exists = false;
};

inline constexpr double kTraceTol = 1e-7;

// Exact: the mu-weighted mean of the one-sided limits of u from the sides of
// x that lie in Omega (inside) or in X minus the closure of Omega (outside).
TraceValue trace_at(const BVRepresentation& u,
                    const WeightedIntervalSpace& space, const OpenSet& omega,
                    const Rational& x, TraceSide side = TraceSide::kInside);

// Means over B(x, r_k) on the chosen side for r_k = r0 2^-k, k = 0..20, by
// Gauss-Legendre quadrature on each weight piece. r0 <= 0 picks a quarter of
// the distance to the nearest other boundary or weight break.
TraceValue trace_at(const std::function<double(double)>& u,
                    const WeightedIntervalSpace& space, const OpenSet& omega,
                    const Rational& x, TraceSide side = TraceSide::kInside,
                    double r0 = 0.0, double tol = kTraceTol);

// theta_Omega(x) = rho(x) / H({x}).
Rational theta_at(const WeightedIntervalSpace& space, const OpenSet& omega,
                  const Rational& x);

// Builds the representation that is affine between consecutive nodes, from
// right[k] at node k to left[k+1] at node k+1, with jumps right[k] - left[k].
BVRepresentation assemble_representation(const std::vector<Rational>& nodes,
                                         const std::vector<double>& left,
                                         const std::vector<double>& right,
                                         std::string label = {});

// alpha u + beta v on the intersection of the spans; grid inputs only.
BVRepresentation linear_combination(double alpha, const BVRepresentation& u,
                                    double beta, const BVRepresentation& v);
// max(u, v) and min(u, v) with crossing points added as nodes.
BVRepresentation pointwise_max(const BVRepresentation& u, const BVRepresentation& v);
BVRepresentation pointwise_min(const BVRepresentation& u, const BVRepresentation& v);
// min(u, level).
BVRepresentation truncate(const BVRepresentation& u, double level);

// Omega_star minus the closure of omega.
OpenSet outer_region(const OpenSet& omega_star, const OpenSet& omega);

// w = u on omega, v on omega_star minus the closure of omega; grid inputs.
BVRepresentation glue(const BVRepresentation& u, const BVRepresentation& v,
                      const OpenSet& omega, const OpenSet& omega_star);

struct GlueBvReport {
  double lhs = 0.0;            // ||Dw||(omega_star) by the level-set sweep
  double variation_u = 0.0;    // ||Du||(omega)
  double variation_v = 0.0;    // ||Dv||(omega_star \ closure(omega))
  double boundary_term = 0.0;  // sum |T u - T v| theta H over the boundary
  double rhs = 0.0;
  double residual = 0.0;
  bool ok = false;             // residual <= 1e-9 (1 + rhs)
};

// omega must be compactly inside omega_star with both traces existing.
GlueBvReport glue_bv_check(const BVRepresentation& u, const BVRepresentation& v,
                           const WeightedIntervalSpace& space,
                           const OpenSet& omega, const OpenSet& omega_star);

// ||Dw||(omega) as the integral over t of P({w > t}, omega), evaluated
// exactly between consecutive critical levels; grid inputs.
double coarea_variation(const BVRepresentation& w,
                        const WeightedIntervalSpace& space,
                        const OpenSet& omega);

struct TraceIntegrabilityReport {
  double c_a = 0.0;       // sup over balls of H(A n B) r / mu(B)
  double integral = 0.0;  // sum over A of (|u^| + |u_|) H
  double bv_norm = 0.0;   // int |u| d mu + ||Du|| over omega_star
  double ratio = 0.0;
  bool ok = false;        // ratio finite
};

TraceIntegrabilityReport trace_integrability(const BVRepresentation& u,
                                             const WeightedIntervalSpace& space,
                                             const OpenSet& omega_star,
                                             const std::vector<Rational>& A);

struct PenaltyResult {
  GridFunction minimizer;      // nodes of all components, in order
  double value = 0.0;
  double interior_energy = 0.0;
  double boundary_term = 0.0;  // f_inf sum |v - T h| theta H
  std::string status = "optimal";
};

// Chain over each component of omega, bracketed by jump cells of cost
// f_inf theta H whose outer nodes carry the outside traces of h.
PenaltyResult penalty_minimize(const Integrand& f, const BVRepresentation& h,
                               const WeightedIntervalSpace& space,
                               const OpenSet& omega, int n,
                               const RelaxOptions& options = {});

struct ExtendedResult {
  BVRepresentation minimizer;
  double value = 0.0;
  std::string status = "optimal";
};

// Minimizes F(u, omega_star) over u = h off omega: anchors only outside the
// closure of omega, and h is pinned at delta outside each boundary point.
ExtendedResult extended_minimize(const Integrand& f, const BVRepresentation& h,
                                 const WeightedIntervalSpace& space,
                                 const OpenSet& omega, const OpenSet& omega_star,
                                 int n, const Rational& eps,
                                 const RelaxOptions& options = {});

struct CompetitorRow {
  std::string name;
  double lhs = 0.0;  // F(u, omega_star)
  double rhs = 0.0;  // F(v, omega) + boundary term + F(h, outer region)
  double residual = 0.0;  // relative
  bool ok = false;
};

struct EquivalenceReport {
  std::vector<CompetitorRow> competitors;
  double penalty_value = 0.0;
  double extended_value = 0.0;
  double value_gap = 0.0;  // relative
  double minimizer_l1 = 0.0;
  double minimizer_scale = 0.0;
  bool ok = false;
};

// Competitors: the penalty minimizer, the linear interpolant of the outside
// traces and their mean, each glued with h. Evaluated at the schedule's last
// point; every comparison allows 2%.
EquivalenceReport equivalence_check(const Integrand& f, const BVRepresentation& h,
                                    const WeightedIntervalSpace& space,
                                    const OpenSet& omega, const OpenSet& omega_star,
                                    const Schedule& schedule,
                                    const RelaxOptions& options = {});

}  // namespace bvrelax

#endif  // BVRELAX_TRACES_HPP_
