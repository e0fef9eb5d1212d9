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


#ifndef BVRELAX_RELAX_HPP_
#define BVRELAX_RELAX_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/chain.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

// Competitors are continuous piecewise-linear functions on a grid refining
// the uniform n-cell grid of the space, the weight partition and the target's
// nodes. They agree with the target at the anchors: the lattice lo + k eps of
// each component [lo, hi], hi itself, the target's nodes, and the points
// x_j -+ delta around each jump x_j. Points closer than delta to a jump are
// never anchors. The lattice moves with lo, so the anchors of a component
// depend continuously on its endpoints.
struct RelaxOptions {
  bool use_simplex = false;  // dense LP oracle instead of the exact allocation
  double solver_tol = 1e-8;
  Rational jump_half_width = dyadic(30);  // delta, relative to b - a
  bool keep_minimizer = true;
  bool timing = false;  // fill millis; off keeps outputs reproducible
};

struct RelaxationResult {
  double value = 0.0;
  std::vector<GridFunction> minimizer;  // one per component of omega
  int n = 0;
  Rational eps;
  double solver_tol = 0.0;
  double lower_certificate = 0.0;  // G(target, omega); value may undershoot it by O(delta)
  double l1_to_target = 0.0;
  size_t anchors = 0;
  size_t cells = 0;
  std::string status = "optimal";
  int iterations = 0;
  double millis = 0.0;
};

struct SchedulePoint {
  int n;
  Rational eps;
};

struct Schedule {
  std::vector<SchedulePoint> points;
  std::string extrapolation = "power";

  // n_k = 4^(k+2), eps_k = 2^-(k+2) (b - a) for k = 0..K.
  static Schedule standard(int K, const Rational& length = 1);
  void validate() const;
};

// Nodes and anchor values of one component's competitor grid.
struct AnchoredGrid {
  std::vector<Rational> nodes;
  std::vector<std::optional<double>> anchors;
};

// Builds the grid for (lo, hi). Anchor candidates for which allow_anchor
// returns false stay as free nodes; the default anchors all.
AnchoredGrid build_anchored_grid(
    const BVRepresentation& target, const WeightedIntervalSpace& space,
    const Rational& lo, const Rational& hi, int n, const Rational& eps,
    const RelaxOptions& options,
    const std::function<bool(const Rational&)>& allow_anchor = {});

ChainProblem chain_of(const AnchoredGrid& grid,
                      const WeightedIntervalSpace& space);

ChainSolution solve(const ChainProblem& problem, const Integrand& f,
                    const RelaxOptions& options);

RelaxationResult relax_value(const Integrand& f, const BVRepresentation& target,
                             const WeightedIntervalSpace& space,
                             const OpenSet& omega, int n, const Rational& eps,
                             const RelaxOptions& options = {});

struct PowerFit {
  double limit = 0.0;
  double exponent = 0.0;
  double coefficient = 0.0;
  double residual = 0.0;
  bool fitted = false;
};

// Least-squares fit of value = limit + c eps^p on the last (up to) four
// points, p on a grid in [0.25, 4]. Falls back to the last value when fewer
// than three points exist or the tail is flat.
PowerFit fit_power_tail(const std::vector<double>& eps,
                        const std::vector<double>& values);

struct ExtrapolationReport {
  std::vector<RelaxationResult> rows;
  double last = 0.0;
  double extrapolated = 0.0;
  PowerFit fit;
  bool monotone = true;  // nondecreasing as eps decreases
};

ExtrapolationReport relax_extrapolate(const Integrand& f,
                                      const BVRepresentation& target,
                                      const WeightedIntervalSpace& space,
                                      const OpenSet& omega,
                                      const Schedule& schedule,
                                      const RelaxOptions& options = {});

struct MeasurePairRow {
  double f_a = 0.0;
  double f_b = 0.0;
  double f_union = 0.0;
  bool disjoint = false;
  double subadditivity_slack = 0.0;  // F(A) + F(B) - F(A u B)
  double additivity_residual = 0.0;  // |F(A u B) - F(A) - F(B)| if disjoint
  std::vector<double> exhaustion;    // F(B_k) for B_k increasing to A
  bool exhaustion_monotone = true;
  double exhaustion_gap = 0.0;       // relative gap of the last B_k to A
  bool ok = true;
};

struct MeasurePropertyReport {
  std::vector<MeasurePairRow> rows;
  double tolerance = 0.0;
  bool ok = true;
};

MeasurePropertyReport measure_property_report(
    const Integrand& f, const BVRepresentation& target,
    const WeightedIntervalSpace& space,
    const std::vector<std::pair<OpenSet, OpenSet>>& pairs, int n,
    const Rational& eps, const RelaxOptions& options = {});

struct GlueReport {
  std::optional<GridFunction> w;  // sampled at breakpoints of the best cutoff
  int best_index = 0;
  double eta = 0.0;
  double lhs = 0.0;            // energy of w on U' u V'
  double average_lhs = 0.0;    // mean over all k cutoffs
  double energy_u = 0.0;       // on U
  double energy_v = 0.0;       // on V
  double constant = 0.0;       // 3M/eta
  double per_index_constant = 0.0;  // 3Mk/eta
  double cross_integral = 0.0;      // int_H |u - v| d mu
  double epsilon = 0.0;             // M int_H (1 + g_u + g_v) d mu / k
  double rhs = 0.0;
  double slack = 0.0;
  bool ok = false;
};

GlueReport glue_lipschitz(const GridFunction& u, const GridFunction& v,
                          const OpenSet& U, const OpenSet& U_prime,
                          const OpenSet& V, const OpenSet& V_prime,
                          const Integrand& f,
                          const WeightedIntervalSpace& space, int k);

struct SandwichReport {
  double lower = 0.0;
  double value = 0.0;
  double last = 0.0;
  double c_empirical = 1.0;
  double upper_at_c = 0.0;
  double tolerance = 0.0;
  bool ok = false;
};

// Smallest C >= 1 with value <= int f(C a) d mu + f_inf nu^s(omega).
double smallest_upper_constant(const Integrand& f, const VariationMeasure& nu,
                               const WeightedIntervalSpace& space,
                               const OpenSet& omega, double value);

SandwichReport sandwich_check(const Integrand& f, const BVRepresentation& u,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega, const Schedule& schedule,
                              const RelaxOptions& options = {});

struct WeakStarRow {
  Interval set;
  bool closed = false;
  std::vector<double> energies;  // int over the set of f(g_{v_k}) d mu, per k
  double relaxed = 0.0;          // F(u, set) at the last schedule point
  double slack = 0.0;            // nonnegative when the inequality holds
  bool ok = false;
};

struct WeakStarReport {
  std::vector<WeakStarRow> rows;
  double tolerance = 0.0;
  bool ok = true;
};

// Open sets test F(u,U) <= the tail energy of the minimizers on U; closed
// sets [c,d] test the tail energy on [c,d] <= F(u, (c - 2 eps, d + 2 eps)).
WeakStarReport weakstar_check(const Integrand& f, const BVRepresentation& target,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega,
                              const std::vector<Interval>& open_sets,
                              const std::vector<Interval>& closed_sets,
                              const Schedule& schedule,
                              const RelaxOptions& options = {});

}  // namespace bvrelax

#endif  // BVRELAX_RELAX_HPP_
