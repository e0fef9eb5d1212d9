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


#include "bvrelax/traces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace bvrelax {
namespace {

struct Sides {
  bool left = false;
  bool right = false;
};

// Sides of x met by omega (inside) or by X minus the closure of omega.
Sides sides_of(const WeightedIntervalSpace& space, const OpenSet& omega,
               const Rational& x, TraceSide side) {
  bool in_left = false;
  bool in_right = false;
  bool on_boundary = false;
  for (const auto& c : omega.components()) {
    if (c.hi == x) in_left = on_boundary = true;
    if (c.lo == x) in_right = on_boundary = true;
  }
  if (!on_boundary) throw std::invalid_argument("trace: point is not on the boundary");
  if (side == TraceSide::kInside) return {in_left, in_right};
  return {!in_left && x > space.a(), !in_right && x < space.b()};
}

const GridFunction& grid_of(const BVRepresentation& u, const char* what) {
  const GridFunction* g = u.grid();
  if (!g) throw std::invalid_argument(std::string(what) + ": grid representation required");
  return *g;
}

// Nodes and jump points of u inside [lo,hi], with lo and hi.
std::vector<Rational> breakpoints_of(const BVRepresentation& u, const Rational& lo,
                                     const Rational& hi) {
  std::vector<Rational> xs{lo, hi};
  for (const auto& x : grid_of(u, "breakpoints").nodes()) {
    if (lo < x && x < hi) xs.push_back(x);
  }
  for (const auto& j : u.jumps()) {
    if (lo < j.x && j.x < hi) xs.push_back(j.x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Rational common_lower(const BVRepresentation& u, const BVRepresentation& v) {
  return std::max(u.lower(), v.lower());
}
Rational common_upper(const BVRepresentation& u, const BVRepresentation& v) {
  return std::min(u.upper(), v.upper());
}

std::vector<Rational> merged_breakpoints(const BVRepresentation& u,
                                         const BVRepresentation& v) {
  Rational lo = common_lower(u, v);
  Rational hi = common_upper(u, v);
  if (!(lo < hi)) throw std::invalid_argument("combination: disjoint spans");
  std::vector<Rational> xs = breakpoints_of(u, lo, hi);
  std::vector<Rational> ys = breakpoints_of(v, lo, hi);
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <typename Op>
BVRepresentation pointwise(const BVRepresentation& u, const BVRepresentation& v,
                           Op op, bool add_crossings) {
  std::vector<Rational> xs = merged_breakpoints(u, v);
  std::vector<Rational> nodes;
  std::vector<double> left;
  std::vector<double> right;
  for (size_t k = 0; k < xs.size(); ++k) {
    const Rational& x = xs[k];
    double ul = u.left_limit(x), ur = u.right_limit(x);
    double vl = v.left_limit(x), vr = v.right_limit(x);
    nodes.push_back(x);
    left.push_back(op(ul, vl));
    right.push_back(op(ur, vr));
    if (add_crossings && k + 1 < xs.size()) {
      double d0 = ur - vr;
      double d1 = u.left_limit(xs[k + 1]) - v.left_limit(xs[k + 1]);
      if (d0 * d1 < 0.0) {
        double x0 = to_double(x);
        double x1 = to_double(xs[k + 1]);
        Rational c = from_double(x0 + (x1 - x0) * d0 / (d0 - d1));
        if (x < c && c < xs[k + 1]) {
          double val = op(u.left_limit(c), v.left_limit(c));
          nodes.push_back(c);
          left.push_back(val);
          right.push_back(val);
        }
      }
    }
  }
  return assemble_representation(nodes, left, right);
}

std::vector<Rational> uniform_nodes(const WeightedIntervalSpace& space,
                                    const Rational& lo, const Rational& hi, int n) {
  const Rational len = space.b() - space.a();
  std::vector<Rational> xs{lo, hi};
  for (int k = 1; k < n; ++k) {
    Rational x = space.a() + len * k / n;
    if (lo < x && x < hi) xs.push_back(x);
  }
  for (const auto& x : space.breaks_in(lo, hi)) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool in_closure(const OpenSet& omega, const Rational& x) {
  for (const auto& c : omega.components()) {
    if (c.lo <= x && x <= c.hi) return true;
  }
  return false;
}

}  // namespace

TraceValue trace_at(const BVRepresentation& u,
                    const WeightedIntervalSpace& space, const OpenSet& omega,
                    const Rational& x, TraceSide side) {
  Sides s = sides_of(space, omega, x, side);
  TraceValue tv;
  tv.point = x;
  tv.side = side;
  if (!s.left && !s.right) return tv;
  double num = 0.0;
  double den = 0.0;
  if (s.left) {
    double w = to_double(space.weight_left(x));
    num += w * u.left_limit(x);
    den += w;
  }
  if (s.right) {
    double w = to_double(space.weight_right(x));
    num += w * u.right_limit(x);
    den += w;
  }
  tv.value = num / den;
  tv.exists = true;
  return tv;
}

TraceValue trace_at(const std::function<double(double)>& u,
                    const WeightedIntervalSpace& space, const OpenSet& omega,
                    const Rational& x, TraceSide side, double r0, double tol) {
  Sides s = sides_of(space, omega, x, side);
  TraceValue tv;
  tv.point = x;
  tv.side = side;
  if (!s.left && !s.right) return tv;
  const double xd = to_double(x);
  if (r0 <= 0.0) {
    double d = std::min(xd - space.a_d(), space.b_d() - xd);
    if (d <= 0.0) d = space.b_d() - space.a_d();
    for (const auto& y : omega.boundary()) {
      if (y != x) d = std::min(d, std::fabs(to_double(y) - xd));
    }
    for (const auto& y : space.breaks()) {
      if (y != x) d = std::min(d, std::fabs(to_double(y) - xd));
    }
    r0 = 0.25 * d;
  }
  using Gauss = boost::math::quadrature::gauss<double, 15>;
  auto mean = [&](double r) {
    double num = 0.0;
    double den = 0.0;
    if (s.left) {
      double w = to_double(space.weight_left(x));
      num += w * Gauss::integrate(u, xd - r, xd);
      den += w * r;
    }
    if (s.right) {
      double w = to_double(space.weight_right(x));
      num += w * Gauss::integrate(u, xd, xd + r);
      den += w * r;
    }
    return num / den;
  };
  constexpr int kSteps = 20;
  std::vector<double> m(kSteps + 1);
  for (int k = 0; k <= kSteps; ++k) m[k] = mean(std::ldexp(r0, -k));
  // Richardson step for the O(r) error of one-sided means.
  double prev = 2.0 * m[kSteps - 1] - m[kSteps - 2];
  double last = 2.0 * m[kSteps] - m[kSteps - 1];
  tv.value = last;
  tv.residual = std::fabs(last - prev);
  tv.exists = tv.residual <= tol;
  return tv;
}

Rational theta_at(const WeightedIntervalSpace& space, const OpenSet& omega,
                  const Rational& x) {
  sides_of(space, omega, x, TraceSide::kInside);
  return space.jump_cost_density(x) / space.point_hausdorff(x);
}

BVRepresentation assemble_representation(const std::vector<Rational>& nodes,
                                         const std::vector<double>& left,
                                         const std::vector<double>& right,
                                         std::string label) {
  if (nodes.size() < 2 || left.size() != nodes.size() || right.size() != nodes.size()) {
    throw std::invalid_argument("assemble: need matching nodes and limits");
  }
  std::vector<double> ac(nodes.size());
  std::vector<Jump> jumps;
  double cum = 0.0;
  ac[0] = right[0];
  for (size_t k = 1; k < nodes.size(); ++k) {
    ac[k] = left[k] - cum;
    if (k + 1 < nodes.size() && right[k] != left[k]) {
      jumps.push_back({nodes[k], right[k] - left[k]});
      cum += right[k] - left[k];
    }
  }
  return BVRepresentation(GridFunction(nodes, std::move(ac)), std::move(jumps),
                          std::move(label));
}

BVRepresentation linear_combination(double alpha, const BVRepresentation& u,
                                    double beta, const BVRepresentation& v) {
  return pointwise(u, v, [&](double a, double b) { return alpha * a + beta * b; }, false);
}

BVRepresentation pointwise_max(const BVRepresentation& u, const BVRepresentation& v) {
  return pointwise(u, v, [](double a, double b) { return std::max(a, b); }, true);
}

BVRepresentation pointwise_min(const BVRepresentation& u, const BVRepresentation& v) {
  return pointwise(u, v, [](double a, double b) { return std::min(a, b); }, true);
}

BVRepresentation truncate(const BVRepresentation& u, double level) {
  BVRepresentation c(GridFunction({u.lower(), u.upper()}, {level, level}));
  return pointwise_min(u, c);
}

OpenSet outer_region(const OpenSet& omega_star, const OpenSet& omega) {
  std::vector<Interval> out;
  for (const auto& s : omega_star.components()) {
    Rational cursor = s.lo;
    for (const auto& c : omega.components()) {
      if (c.hi <= s.lo || c.lo >= s.hi) continue;
      if (c.lo > cursor) out.push_back({cursor, c.lo});
      cursor = std::max(cursor, c.hi);
    }
    if (cursor < s.hi) out.push_back({cursor, s.hi});
  }
  return OpenSet(std::move(out));
}

BVRepresentation glue(const BVRepresentation& u, const BVRepresentation& v,
                      const OpenSet& omega, const OpenSet& omega_star) {
  if (!omega.subset_of(omega_star)) throw std::invalid_argument("glue: omega outside omega_star");
  std::vector<Rational> nodes;
  std::vector<double> left;
  std::vector<double> right;
  for (const auto& s : omega_star.components()) {
    std::vector<Rational> cuts{s.lo, s.hi};
    for (const auto& x : omega.boundary()) {
      if (s.lo < x && x < s.hi) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Rational& p = cuts[k];
      const Rational& q = cuts[k + 1];
      Rational mid = (p + q) / 2;
      const BVRepresentation& src = omega.contains(mid) ? u : v;
      if (p < src.lower() || q > src.upper()) {
        throw std::invalid_argument("glue: input does not cover its region");
      }
      std::vector<Rational> xs = breakpoints_of(src, p, q);
      for (size_t i = 0; i < xs.size(); ++i) {
        const Rational& x = xs[i];
        double l = i == 0 ? src.right_limit(x) : src.left_limit(x);
        double r = i + 1 == xs.size() ? src.left_limit(x) : src.right_limit(x);
        if (!nodes.empty() && nodes.back() == x) {
          right.back() = r;
          continue;
        }
        nodes.push_back(x);
        left.push_back(l);
        right.push_back(r);
      }
    }
  }
  return assemble_representation(nodes, left, right, "glued");
}

double coarea_variation(const BVRepresentation& w,
                        const WeightedIntervalSpace& space,
                        const OpenSet& omega) {
  double total = 0.0;
  for (const auto& comp : omega.components()) {
    std::vector<Rational> xs = breakpoints_of(w, comp.lo, comp.hi);
    for (const auto& b : space.breaks_in(comp.lo, comp.hi)) xs.push_back(b);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const size_t n = xs.size();
    std::vector<double> L(n), R(n), cell_w(n - 1), rho(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
      L[k] = k == 0 ? w.right_limit(xs[k]) : w.left_limit(xs[k]);
      R[k] = k + 1 == n ? w.left_limit(xs[k]) : w.right_limit(xs[k]);
      if (k + 1 < n) cell_w[k] = to_double(space.weight_right(xs[k]));
      if (k > 0 && k + 1 < n) rho[k] = to_double(space.jump_cost_density(xs[k]));
    }
    std::vector<double> levels(L);
    levels.insert(levels.end(), R.begin(), R.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (size_t l = 0; l + 1 < levels.size(); ++l) {
      double t = 0.5 * (levels[l] + levels[l + 1]);
      double per = 0.0;
      for (size_t k = 0; k + 1 < n; ++k) {
        if ((R[k] - t) * (L[k + 1] - t) < 0.0) per += cell_w[k];
      }
      for (size_t k = 1; k + 1 < n; ++k) {
        if ((L[k] - t) * (R[k] - t) < 0.0) per += rho[k];
      }
      total += per * (levels[l + 1] - levels[l]);
    }
  }
  return total;
}

GlueBvReport glue_bv_check(const BVRepresentation& u, const BVRepresentation& v,
                           const WeightedIntervalSpace& space,
                           const OpenSet& omega, const OpenSet& omega_star) {
  if (!omega.compactly_inside(omega_star)) {
    throw std::invalid_argument("glue check: omega must be compactly inside omega_star");
  }
  OpenSet outer = outer_region(omega_star, omega);
  GlueBvReport rep;
  for (const auto& x : omega.boundary()) {
    TraceValue tu = trace_at(u, space, omega, x, TraceSide::kInside);
    TraceValue tv = trace_at(v, space, outer, x, TraceSide::kInside);
    if (!tu.exists || !tv.exists) throw std::invalid_argument("glue check: trace does not exist");
    Rational theta = theta_at(space, omega, x);
    rep.boundary_term +=
        std::fabs(tu.value - tv.value) * to_double(theta * space.point_hausdorff(x));
  }
  rep.variation_u = variation_measure_of(u, space).mass(space, omega);
  rep.variation_v = variation_measure_of(v, space).mass(space, outer);
  rep.rhs = rep.variation_u + rep.variation_v + rep.boundary_term;
  rep.lhs = coarea_variation(glue(u, v, omega, omega_star), space, omega_star);
  rep.residual = std::fabs(rep.lhs - rep.rhs);
  rep.ok = rep.residual <= 1e-9 * (1.0 + std::fabs(rep.rhs));
  return rep;
}

TraceIntegrabilityReport trace_integrability(const BVRepresentation& u,
                                             const WeightedIntervalSpace& space,
                                             const OpenSet& omega_star,
                                             const std::vector<Rational>& A) {
  for (const auto& x : A) {
    if (!omega_star.contains(x)) {
      throw std::invalid_argument("trace integrability: A must lie inside omega_star");
    }
  }
  TraceIntegrabilityReport rep;
  std::vector<Rational> pts(A);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<double> hs;
  for (const auto& x : pts) hs.push_back(to_double(space.point_hausdorff(x)));

  // mu(B(y,r))/r is affine-over-linear in r between critical radii, so r/mu
  // is monotone there and the sup sits at critical radii.
  std::vector<Rational> centers(pts);
  centers.push_back(space.a());
  centers.push_back(space.b());
  for (const auto& b : space.breaks()) centers.push_back(b);
  for (size_t k = 0; k + 1 < pts.size(); ++k) centers.push_back((pts[k] + pts[k + 1]) / 2);
  std::vector<Rational> marks(pts);
  for (const auto& b : space.breaks()) marks.push_back(b);
  marks.push_back(space.a());
  marks.push_back(space.b());
  for (const auto& y : centers) {
    std::vector<Rational> radii;
    for (const auto& m : marks) {
      Rational d = m > y ? Rational(m - y) : Rational(y - m);
      if (d > 0) radii.push_back(d);
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (size_t k = 0; k < pts.size(); ++k) {
      if (pts[k] == y) rep.c_a = std::max(rep.c_a, 1.0);  // r -> 0 at a point of A
    }
    for (const auto& r : radii) {
      double ratio_r = to_double(r / space.mu(y - r, y + r));
      // r decreasing to a critical radius: points at distance r included.
      double h_closed = 0.0;
      double h_open = 0.0;
      for (size_t k = 0; k < pts.size(); ++k) {
        Rational d = pts[k] > y ? Rational(pts[k] - y) : Rational(y - pts[k]);
        if (d <= r) h_closed += hs[k];
        if (d < r) h_open += hs[k];
      }
      rep.c_a = std::max({rep.c_a, h_closed * ratio_r, h_open * ratio_r});
    }
  }
  for (size_t k = 0; k < pts.size(); ++k) {
    rep.integral += (std::fabs(u.upper_value(pts[k])) + std::fabs(u.lower_value(pts[k]))) * hs[k];
  }
  rep.bv_norm = l1_norm(u, space, omega_star) +
                variation_measure_of(u, space).mass(space, omega_star);
  rep.ratio = rep.bv_norm > 0.0 ? rep.integral / rep.bv_norm
                                : (rep.integral == 0.0 ? 0.0
                                                       : std::numeric_limits<double>::infinity());
  rep.ok = std::isfinite(rep.ratio) && std::isfinite(rep.c_a);
  return rep;
}

PenaltyResult penalty_minimize(const Integrand& f, const BVRepresentation& h,
                               const WeightedIntervalSpace& space,
                               const OpenSet& omega, int n,
                               const RelaxOptions& options) {
  if (omega.empty()) throw std::invalid_argument("penalty: empty omega");
  std::vector<Rational> all_nodes;
  std::vector<double> all_values;
  PenaltyResult res{GridFunction({0, 1}, {0.0, 0.0})};
  for (const auto& comp : omega.components()) {
    if (!(comp.lo > space.a() && comp.hi < space.b())) {
      throw std::invalid_argument("penalty: omega must be interior to the space");
    }
    TraceValue t_lo = trace_at(h, space, omega, comp.lo, TraceSide::kOutside);
    TraceValue t_hi = trace_at(h, space, omega, comp.hi, TraceSide::kOutside);
    if (!t_lo.exists || !t_hi.exists) throw std::invalid_argument("penalty: outside trace missing");
    // theta and H are kept apart; their product is rho.
    double beta_lo = f.f_inf() * to_double(theta_at(space, omega, comp.lo) *
                                            space.point_hausdorff(comp.lo));
    double beta_hi = f.f_inf() * to_double(theta_at(space, omega, comp.hi) *
                                            space.point_hausdorff(comp.hi));
    std::vector<Rational> xs = uniform_nodes(space, comp.lo, comp.hi, n);
    ChainProblem chain;
    chain.cells.push_back(ChainCell::jump(beta_lo));
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
      chain.cells.push_back(ChainCell::regular(to_double(xs[k + 1] - xs[k]),
                                               to_double(space.weight_right(xs[k]))));
    }
    chain.cells.push_back(ChainCell::jump(beta_hi));
    chain.anchors.assign(chain.cells.size() + 1, std::nullopt);
    chain.anchors.front() = t_lo.value;
    chain.anchors.back() = t_hi.value;
    ChainSolution sol = solve(chain, f, options);
    if (sol.status != LpStatus::kOptimal) res.status = "solver_failure";
    double boundary = beta_lo * std::fabs(sol.values[1] - t_lo.value) +
                      beta_hi * std::fabs(sol.values[sol.values.size() - 2] - t_hi.value);
    res.value += sol.cost;
    res.boundary_term += boundary;
    res.interior_energy += sol.cost - boundary;
    for (size_t k = 0; k < xs.size(); ++k) {
      if (!all_nodes.empty() && !(all_nodes.back() < xs[k])) continue;
      all_nodes.push_back(xs[k]);
      all_values.push_back(sol.values[k + 1]);
    }
  }
  res.minimizer = GridFunction(std::move(all_nodes), std::move(all_values));
  return res;
}

ExtendedResult extended_minimize(const Integrand& f, const BVRepresentation& h,
                                 const WeightedIntervalSpace& space,
                                 const OpenSet& omega, const OpenSet& omega_star,
                                 int n, const Rational& eps,
                                 const RelaxOptions& options) {
  if (!omega.compactly_inside(omega_star)) {
    throw std::invalid_argument("extended: omega must be compactly inside omega_star");
  }
  const Rational delta = options.jump_half_width * (space.b() - space.a());
  // h with extra nodes at each boundary point and delta outside it.
  std::vector<Rational> extra;
  for (const auto& x : omega.boundary()) {
    extra.push_back(x);
    for (Rational y : {Rational(x - delta), Rational(x + delta)}) {
      if (!in_closure(omega, y)) extra.push_back(y);
    }
  }
  std::vector<Rational> xs = breakpoints_of(h, h.lower(), h.upper());
  for (const auto& y : extra) {
    if (h.lower() < y && y < h.upper()) xs.push_back(y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> left, right;
  for (size_t k = 0; k < xs.size(); ++k) {
    left.push_back(k == 0 ? h.right_limit(xs[k]) : h.left_limit(xs[k]));
    right.push_back(k + 1 == xs.size() ? h.left_limit(xs[k]) : h.right_limit(xs[k]));
  }
  BVRepresentation pinned = assemble_representation(xs, left, right);

  std::vector<Rational> nodes;
  std::vector<double> values;
  ExtendedResult res{BVRepresentation(GridFunction({0, 1}, {0.0, 0.0}))};
  auto allow = [&](const Rational& x) { return !in_closure(omega, x); };
  for (const auto& comp : omega_star.components()) {
    AnchoredGrid grid = build_anchored_grid(pinned, space, comp.lo, comp.hi, n, eps, options, allow);
    ChainProblem chain = chain_of(grid, space);
    ChainSolution sol = solve(chain, f, options);
    if (sol.status != LpStatus::kOptimal) res.status = "solver_failure";
    res.value += sol.cost;
    for (size_t k = 0; k < grid.nodes.size(); ++k) {
      if (!nodes.empty() && !(nodes.back() < grid.nodes[k])) continue;
      nodes.push_back(grid.nodes[k]);
      values.push_back(sol.values[k]);
    }
  }
  res.minimizer = BVRepresentation(GridFunction(std::move(nodes), std::move(values)));
  return res;
}

EquivalenceReport equivalence_check(const Integrand& f, const BVRepresentation& h,
                                    const WeightedIntervalSpace& space,
                                    const OpenSet& omega, const OpenSet& omega_star,
                                    const Schedule& schedule,
                                    const RelaxOptions& options) {
  schedule.validate();
  const auto& pt = schedule.points.back();
  RelaxOptions lean = options;
  lean.keep_minimizer = false;
  OpenSet outer = outer_region(omega_star, omega);
  EquivalenceReport rep;
  auto F = [&](const BVRepresentation& u, const OpenSet& set) {
    return relax_value(f, u, space, set, pt.n, pt.eps, lean).value;
  };
  const double outer_energy = F(h, outer);

  PenaltyResult pen = penalty_minimize(f, h, space, omega, pt.n, options);
  ExtendedResult ext = extended_minimize(f, h, space, omega, omega_star, pt.n, pt.eps, options);
  rep.penalty_value = pen.value + outer_energy;
  rep.extended_value = ext.value;
  double vscale = std::max(std::fabs(rep.penalty_value), std::fabs(rep.extended_value));
  rep.value_gap = vscale > 0.0 ? std::fabs(rep.penalty_value - rep.extended_value) / vscale : 0.0;
  BVRepresentation pen_rep(pen.minimizer);
  rep.minimizer_l1 = l1_distance(pen_rep, ext.minimizer, space, omega);
  rep.minimizer_scale = l1_norm(pen_rep, space, omega);

  // Competitors built from the outside traces on each component.
  std::vector<Rational> lin_nodes;
  std::vector<double> lin_values;
  std::vector<double> mean_values;
  for (const auto& comp : omega.components()) {
    double a = trace_at(h, space, omega, comp.lo, TraceSide::kOutside).value;
    double b = trace_at(h, space, omega, comp.hi, TraceSide::kOutside).value;
    if (!lin_nodes.empty() && !(lin_nodes.back() < comp.lo)) {
      lin_nodes.pop_back();
      lin_values.pop_back();
      mean_values.pop_back();
    }
    lin_nodes.push_back(comp.lo);
    lin_values.push_back(a);
    mean_values.push_back(0.5 * (a + b));
    lin_nodes.push_back(comp.hi);
    lin_values.push_back(b);
    mean_values.push_back(0.5 * (a + b));
  }
  std::vector<std::pair<std::string, BVRepresentation>> corpus;
  corpus.emplace_back("penalty_minimizer", pen_rep);
  corpus.emplace_back("trace_interpolant",
                      BVRepresentation(GridFunction(lin_nodes, lin_values)));
  corpus.emplace_back("trace_mean", BVRepresentation(GridFunction(lin_nodes, mean_values)));
  rep.ok = true;
  for (const auto& [name, v] : corpus) {
    CompetitorRow row;
    row.name = name;
    row.lhs = F(glue(v, h, omega, omega_star), omega_star);
    double boundary = 0.0;
    for (const auto& x : omega.boundary()) {
      double tv = trace_at(v, space, omega, x, TraceSide::kInside).value;
      double th = trace_at(h, space, omega, x, TraceSide::kOutside).value;
      boundary += f.f_inf() * std::fabs(tv - th) *
                  to_double(theta_at(space, omega, x) * space.point_hausdorff(x));
    }
    row.rhs = F(v, omega) + boundary + outer_energy;
    double s = std::max(std::fabs(row.lhs), std::fabs(row.rhs));
    row.residual = s > 0.0 ? std::fabs(row.lhs - row.rhs) / s : 0.0;
    row.ok = row.residual <= 0.02;
    rep.ok = rep.ok && row.ok;
    rep.competitors.push_back(std::move(row));
  }
  rep.ok = rep.ok && rep.value_gap <= 0.02 &&
           rep.minimizer_l1 <= 0.02 * rep.minimizer_scale + 1e-9;
  return rep;
}

}  // namespace bvrelax
