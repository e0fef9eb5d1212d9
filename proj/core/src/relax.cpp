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


#include "bvrelax/relax.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "bvrelax/parallel.hpp"

namespace bvrelax {
namespace {

using boost::multiprecision::cpp_int;

cpp_int floor_div(const Rational& q) {
  cpp_int num = numerator(q);
  cpp_int den = denominator(q);
  cpp_int f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

cpp_int ceil_div(const Rational& q) { return -floor_div(Rational(-q)); }

const char* status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

}  // namespace

Schedule Schedule::standard(int K, const Rational& length) {
  if (K < 0) throw std::invalid_argument("schedule: K must be >= 0");
  Schedule s;
  for (int k = 0; k <= K; ++k) {
    int n = 1 << (2 * (k + 2));
    s.points.push_back({n, length * dyadic(k + 2)});
  }
  return s;
}

void Schedule::validate() const {
  if (points.empty()) throw std::invalid_argument("schedule: no points");
  for (size_t k = 0; k < points.size(); ++k) {
    if (points[k].n < 2) throw std::invalid_argument("schedule: n must be >= 2");
    if (!(points[k].eps > 0)) throw std::invalid_argument("schedule: eps must be > 0");
    if (k > 0 && (points[k].n < points[k - 1].n || !(points[k].eps < points[k - 1].eps))) {
      throw std::invalid_argument(
          "schedule: n must be nondecreasing and eps strictly decreasing");
    }
  }
}

AnchoredGrid build_anchored_grid(
    const BVRepresentation& target, const WeightedIntervalSpace& space,
    const Rational& lo, const Rational& hi, int n, const Rational& eps,
    const RelaxOptions& options,
    const std::function<bool(const Rational&)>& allow_anchor) {
  if (n < 2) throw std::invalid_argument("relax: n must be >= 2");
  if (!(eps > 0)) throw std::invalid_argument("relax: eps must be > 0");
  if (!(lo < hi) || lo < space.a() || hi > space.b()) {
    throw std::invalid_argument("relax: component outside the space");
  }
  if (lo < target.lower() || hi > target.upper()) {
    throw std::invalid_argument("relax: target does not cover omega");
  }
  const Rational& a = space.a();
  const Rational len = space.b() - a;
  const Rational delta = options.jump_half_width * len;
  const auto& jumps = target.jumps();
  auto near_jump = [&](const Rational& x) {
    for (const auto& j : jumps) {
      Rational d = x - j.x;
      if (d < 0) d = -d;
      if (d < delta) return true;
    }
    return false;
  };

  std::vector<Rational> candidates;
  for (cpp_int k = 0, k_end = floor_div((hi - lo) / eps); k <= k_end; ++k) {
    candidates.push_back(lo + Rational(k) * eps);
  }
  candidates.push_back(hi);
  if (const auto* g = target.grid()) {
    for (const auto& x : g->nodes()) {
      if (lo <= x && x <= hi) candidates.push_back(x);
    }
  }
  for (const auto& j : jumps) {
    for (Rational x : {Rational(j.x - delta), Rational(j.x + delta)}) {
      if (lo <= x && x <= hi) candidates.push_back(x);
    }
  }

  std::vector<std::pair<Rational, std::optional<double>>> entries;
  for (auto& x : candidates) {
    if (near_jump(x)) continue;
    if (allow_anchor && !allow_anchor(x)) {
      entries.emplace_back(std::move(x), std::nullopt);
      continue;
    }
    double value = target.left_limit(x);
    entries.emplace_back(std::move(x), value);
  }
  entries.emplace_back(lo, std::nullopt);
  entries.emplace_back(hi, std::nullopt);
  for (const auto& x : space.breaks_in(lo, hi)) entries.emplace_back(x, std::nullopt);
  for (cpp_int k = floor_div((lo - a) * n / len) + 1,
               k_end = ceil_div((hi - a) * n / len) - 1;
       k <= k_end; ++k) {
    entries.emplace_back(a + len * Rational(k) / n, std::nullopt);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.has_value() && !y.second.has_value();
  });

  AnchoredGrid grid;
  grid.nodes.reserve(entries.size());
  grid.anchors.reserve(entries.size());
  for (auto& e : entries) {
    if (!grid.nodes.empty() && grid.nodes.back() == e.first) continue;
    grid.nodes.push_back(std::move(e.first));
    grid.anchors.push_back(e.second);
  }
  return grid;
}

ChainProblem chain_of(const AnchoredGrid& grid,
                      const WeightedIntervalSpace& space) {
  ChainProblem p;
  p.anchors = grid.anchors;
  p.cells.reserve(grid.nodes.size() - 1);
  for (size_t k = 0; k + 1 < grid.nodes.size(); ++k) {
    p.cells.push_back(ChainCell::regular(to_double(grid.nodes[k + 1] - grid.nodes[k]),
                                        to_double(space.weight_right(grid.nodes[k]))));
  }
  return p;
}

ChainSolution solve(const ChainProblem& problem, const Integrand& f,
                    const RelaxOptions& options) {
  return options.use_simplex ? solve_chain_lp(problem, f) : solve_chain(problem, f);
}

RelaxationResult relax_value(const Integrand& f, const BVRepresentation& target,
                             const WeightedIntervalSpace& space,
                             const OpenSet& omega, int n, const Rational& eps,
                             const RelaxOptions& options) {
  auto start = std::chrono::steady_clock::now();
  RelaxationResult res;
  res.n = n;
  res.eps = eps;
  res.solver_tol = options.solver_tol;
  std::vector<GridFunction> minimizers;
  for (const auto& comp : omega.components()) {
    AnchoredGrid grid = build_anchored_grid(target, space, comp.lo, comp.hi, n, eps, options);
    ChainProblem chain = chain_of(grid, space);
    ChainSolution sol = solve(chain, f, options);
    res.iterations += sol.iterations;
    if (sol.status != LpStatus::kOptimal) res.status = status_name(sol.status);
    res.value += sol.cost;
    res.cells += chain.cells.size();
    for (const auto& an : grid.anchors) res.anchors += an.has_value() ? 1 : 0;
    minimizers.emplace_back(std::move(grid.nodes), std::move(sol.values));
  }
  res.lower_certificate =
      measure_functional(f, variation_measure_of(target, space), space, omega);
  for (size_t c = 0; c < minimizers.size(); ++c) {
    OpenSet part({omega.components()[c]});
    int samples = static_cast<int>(std::min<size_t>(1 << 16, 4 * minimizers[c].cells()));
    res.l1_to_target +=
        l1_distance(BVRepresentation(minimizers[c]), target, space, part, samples);
  }
  if (options.keep_minimizer) res.minimizer = std::move(minimizers);
  if (options.timing) {
    res.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  }
  return res;
}

PowerFit fit_power_tail(const std::vector<double>& eps,
                        const std::vector<double>& values) {
  PowerFit fit;
  if (values.empty()) return fit;
  fit.limit = values.back();
  size_t m = std::min<size_t>(4, values.size());
  if (m < 3) return fit;
  size_t off = values.size() - m;
  double lo = values[off];
  double hi = values[off];
  for (size_t i = off; i < values.size(); ++i) {
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  if (hi - lo <= 1e-12 * (1.0 + std::fabs(hi))) return fit;
  double best = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= 375; ++step) {
    double p = 0.25 + 0.01 * step;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs(m);
    for (size_t i = 0; i < m; ++i) {
      xs[i] = std::pow(eps[off + i], p);
      sx += xs[i];
      sy += values[off + i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * values[off + i];
    }
    double det = m * sxx - sx * sx;
    if (std::fabs(det) < 1e-300) continue;
    double c = (m * sxy - sx * sy) / det;
    double limit = (sy - c * sx) / m;
    double sse = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double r = values[off + i] - limit - c * xs[i];
      sse += r * r;
    }
    if (sse < best) {
      best = sse;
      fit = {limit, p, c, std::sqrt(sse / m), true};
    }
  }
  return fit;
}

ExtrapolationReport relax_extrapolate(const Integrand& f,
                                      const BVRepresentation& target,
                                      const WeightedIntervalSpace& space,
                                      const OpenSet& omega,
                                      const Schedule& schedule,
                                      const RelaxOptions& options) {
  schedule.validate();
  ExtrapolationReport rep;
  rep.rows.resize(schedule.points.size());
  parallel_for(schedule.points.size(), [&](size_t k) {
    const auto& pt = schedule.points[k];
    try {
      rep.rows[k] = relax_value(f, target, space, omega, pt.n, pt.eps, options);
    } catch (const std::exception& e) {
      rep.rows[k].n = pt.n;
      rep.rows[k].eps = pt.eps;
      rep.rows[k].status = std::string("error: ") + e.what();
    }
  });
  std::vector<double> eps;
  std::vector<double> values;
  for (const auto& r : rep.rows) {
    if (r.status != "optimal") continue;
    eps.push_back(to_double(r.eps));
    values.push_back(r.value);
  }
  for (size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[k - 1] - options.solver_tol * (1.0 + std::fabs(values[k]))) {
      rep.monotone = false;
    }
  }
  rep.fit = fit_power_tail(eps, values);
  rep.last = values.empty() ? std::numeric_limits<double>::quiet_NaN() : values.back();
  rep.extrapolated = values.empty() ? rep.last : rep.fit.limit;
  return rep;
}

MeasurePropertyReport measure_property_report(
    const Integrand& f, const BVRepresentation& target,
    const WeightedIntervalSpace& space,
    const std::vector<std::pair<OpenSet, OpenSet>>& pairs, int n,
    const Rational& eps, const RelaxOptions& options) {
  MeasurePropertyReport rep;
  RelaxOptions opts = options;
  opts.keep_minimizer = false;
  rep.tolerance = 3.0 * options.solver_tol;
  rep.rows.resize(pairs.size());
  constexpr int kExhaustionSteps = 12;
  parallel_for(pairs.size(), [&](size_t i) {
    const auto& [A, B] = pairs[i];
    auto F = [&](const OpenSet& s) {
      return s.empty() ? 0.0 : relax_value(f, target, space, s, n, eps, opts).value;
    };
    MeasurePairRow row;
    row.f_a = F(A);
    row.f_b = F(B);
    row.f_union = F(A.unite(B));
    row.disjoint = A.intersect(B).empty();
    double scale = 1.0 + std::fabs(row.f_union);
    row.subadditivity_slack = row.f_a + row.f_b - row.f_union;
    bool ok = row.subadditivity_slack >= -rep.tolerance * scale;
    if (row.disjoint) {
      row.additivity_residual = std::fabs(row.f_union - row.f_a - row.f_b);
      ok = ok && row.additivity_residual <= rep.tolerance * scale;
    }
    for (int k = 0; k < kExhaustionSteps; ++k) {
      std::vector<Interval> comps;
      for (const auto& c : A.components()) {
        Rational d = c.length() * dyadic(k + 2);
        comps.push_back({c.lo + d, c.hi - d});
      }
      row.exhaustion.push_back(F(OpenSet(std::move(comps))));
      if (k > 0 && row.exhaustion[k] < row.exhaustion[k - 1] - rep.tolerance * scale) {
        row.exhaustion_monotone = false;
      }
    }
    double denom = std::max(std::fabs(row.f_a), 1e-12);
    row.exhaustion_gap = std::fabs(row.f_a - row.exhaustion.back()) / denom;
    for (double v : row.exhaustion) {
      if (v > row.f_a + rep.tolerance * scale) row.exhaustion_monotone = false;
    }
    row.ok = ok && row.exhaustion_monotone && row.exhaustion_gap <= 0.01;
    rep.rows[i] = std::move(row);
  });
  for (const auto& r : rep.rows) rep.ok = rep.ok && r.ok;
  return rep;
}

namespace {

double dist_to(const OpenSet& set, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : set.components()) {
    double lo = to_double(c.lo);
    double hi = to_double(c.hi);
    best = std::min(best, std::max({0.0, lo - x, x - hi}));
  }
  return best;
}

double abs_affine_integral(double alpha, double beta, double p, double q) {
  double vp = alpha + beta * p;
  double vq = alpha + beta * q;
  if ((vp >= 0 && vq >= 0) || (vp <= 0 && vq <= 0)) {
    return 0.5 * std::fabs(vp + vq) * (q - p);
  }
  double z = -alpha / beta;
  return 0.5 * (std::fabs(vp) * (z - p) + std::fabs(vq) * (q - z));
}

double slope_at(const GridFunction& g, double x) {
  const auto& nodes = g.nodes_d();
  if (x <= nodes.front() || x >= nodes.back()) return 0.0;
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  return g.slope(static_cast<size_t>(it - nodes.begin()) - 1);
}

}  // namespace

GlueReport glue_lipschitz(const GridFunction& u, const GridFunction& v,
                          const OpenSet& U, const OpenSet& U_prime,
                          const OpenSet& V, const OpenSet& V_prime,
                          const Integrand& f,
                          const WeightedIntervalSpace& space, int k) {
  if (k < 1) throw std::invalid_argument("glue: k must be >= 1");
  if (!U_prime.compactly_inside(U) && !U_prime.subset_of(U)) {
    throw std::invalid_argument("glue: U' must lie inside U");
  }
  if (!V_prime.subset_of(V)) throw std::invalid_argument("glue: V' must lie inside V");
  GlueReport rep;
  // eta = dist(U', X \ U); the complement includes the endpoints of U.
  double eta = std::numeric_limits<double>::infinity();
  for (const auto& c : U_prime.components()) {
    bool found = false;
    for (const auto& d : U.components()) {
      if (d.lo <= c.lo && c.hi <= d.hi) {
        eta = std::min({eta, to_double(c.lo - d.lo), to_double(d.hi - c.hi)});
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("glue: U' component outside U");
  }
  if (!(eta > 0.0)) throw std::invalid_argument("glue: U' touches the boundary of U");
  rep.eta = eta;
  const double M = f.M();
  rep.constant = 3.0 * M / eta;
  rep.per_index_constant = 3.0 * M * k / eta;

  OpenSet W = U_prime.unite(V_prime);
  std::vector<double> levels;
  for (int j = k; j <= 2 * k; ++j) levels.push_back(j * eta / (3.0 * k));

  struct Piece {
    double p, q, w;
  };
  std::vector<Piece> pieces;
  for (const auto& comp : W.components()) {
    double lo = to_double(comp.lo);
    double hi = to_double(comp.hi);
    std::vector<double> cuts{lo, hi};
    auto add = [&](double x) {
      if (x > lo && x < hi) cuts.push_back(x);
    };
    for (double x : u.nodes_d()) add(x);
    for (double x : v.nodes_d()) add(x);
    for (const auto& x : space.breaks_in(comp.lo, comp.hi)) add(to_double(x));
    for (const auto& set : {&U, &V, &U_prime, &V_prime}) {
      for (const auto& x : set->boundary()) add(to_double(x));
    }
    const auto& uc = U_prime.components();
    for (size_t i = 0; i + 1 < uc.size(); ++i) add(0.5 * to_double(uc[i].hi + uc[i + 1].lo));
    for (const auto& c : uc) {
      for (double l : levels) {
        add(to_double(c.lo) - l);
        add(to_double(c.hi) + l);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      pieces.push_back({cuts[i], cuts[i + 1], space.weight_at(mid)});
    }
  }

  // The gluing region H and its integrals.
  double h_measure = 0.0;
  double h_gradients = 0.0;
  for (const auto& pc : pieces) {
    double mid = 0.5 * (pc.p + pc.q);
    double d = dist_to(U_prime, mid);
    if (!(U.contains(mid) && V_prime.contains(mid) && d > eta / 3 && d < 2 * eta / 3)) continue;
    double len = pc.q - pc.p;
    double gu = std::fabs(slope_at(u, mid));
    double gv = std::fabs(slope_at(v, mid));
    h_measure += pc.w * len;
    h_gradients += pc.w * len * (1.0 + gu + gv);
    double dp = u(pc.p) - v(pc.p);
    double dq = u(pc.q) - v(pc.q);
    double beta = (dq - dp) / len;
    rep.cross_integral += pc.w * abs_affine_integral(dp - beta * pc.p, beta, pc.p, pc.q);
  }
  if (!(h_measure > 0.0)) throw std::invalid_argument("glue: empty gluing region");
  rep.epsilon = M * h_gradients / k;
  rep.energy_u = energy(f, u, space, U);
  rep.energy_v = energy(f, v, space, V);
  rep.rhs = rep.energy_u + rep.energy_v + rep.constant * rep.cross_integral + rep.epsilon;

  auto phi = [&](int i, double x) {
    double d = dist_to(U_prime, x);
    double val = ((k + i) * eta - 3.0 * k * d) / eta;
    return std::clamp(val, 0.0, 1.0);
  };
  double best = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int i = 1; i <= k; ++i) {
    double total = 0.0;
    for (const auto& pc : pieces) {
      double len = pc.q - pc.p;
      double mid = 0.5 * (pc.p + pc.q);
      double php = phi(i, pc.p);
      double phq = phi(i, pc.q);
      double dphi = (phq - php) / len;
      double du = slope_at(u, mid);
      double dv = slope_at(v, mid);
      // w' = phi' (u - v) + phi (u' - v') + v', affine on the piece.
      auto wprime = [&](double x, double ph) {
        return dphi * (u(x) - v(x)) + ph * (du - dv) + dv;
      };
      double wp = wprime(pc.p, php);
      double wq = wprime(pc.q, phq);
      double beta = (wq - wp) / len;
      total += pc.w * f.integral_abs_affine(wp - beta * pc.p, beta, pc.p, pc.q);
    }
    sum += total;
    if (total < best) {
      best = total;
      rep.best_index = i;
    }
  }
  rep.lhs = best;
  rep.average_lhs = sum / k;

  std::vector<double> xs;
  for (const auto& pc : pieces) {
    if (xs.empty() || xs.back() != pc.p) xs.push_back(pc.p);
    xs.push_back(pc.q);
  }
  std::vector<Rational> nodes;
  std::vector<double> values;
  for (double x : xs) {
    double ph = phi(rep.best_index, x);
    double val = ph * u(x) + (1.0 - ph) * v(x);
    Rational xr = from_double(x);
    if (!nodes.empty() && !(nodes.back() < xr)) continue;
    nodes.push_back(xr);
    values.push_back(val);
  }
  rep.w = GridFunction(std::move(nodes), std::move(values));
  rep.slack = rep.rhs - rep.lhs;
  rep.ok = rep.slack >= 0.0 && rep.average_lhs <= rep.rhs + 1e-12 * (1.0 + rep.rhs);
  return rep;
}

double smallest_upper_constant(const Integrand& f, const VariationMeasure& nu,
                               const WeightedIntervalSpace& space,
                               const OpenSet& omega, double value) {
  DensityDistribution dist = nu.distribution(space, omega);
  double atoms = f.f_inf() * nu.atomic_mass(omega);
  auto upper = [&](double c) {
    double total = atoms;
    for (const auto& [a, m] : dist) {
      if (m > 0.0) total += f(c * a) * m;
    }
    return total;
  };
  if (upper(1.0) >= value) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (upper(hi) < value) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) return std::numeric_limits<double>::infinity();
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (upper(mid) >= value ? hi : lo) = mid;
  }
  return hi;
}

SandwichReport sandwich_check(const Integrand& f, const BVRepresentation& u,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega, const Schedule& schedule,
                              const RelaxOptions& options) {
  RelaxOptions opts = options;
  opts.keep_minimizer = false;
  ExtrapolationReport ext = relax_extrapolate(f, u, space, omega, schedule, opts);
  SandwichReport rep;
  VariationMeasure nu = variation_measure_of(u, space);
  rep.lower = measure_functional(f, nu, space, omega);
  rep.value = ext.extrapolated;
  rep.last = ext.last;
  rep.tolerance = 1e-6 + options.solver_tol;
  rep.c_empirical = smallest_upper_constant(f, nu, space, omega, rep.value);
  DensityDistribution dist = nu.distribution(space, omega);
  rep.upper_at_c = f.f_inf() * nu.atomic_mass(omega);
  for (const auto& [a, m] : dist) {
    if (m > 0.0 && std::isfinite(rep.c_empirical)) rep.upper_at_c += f(rep.c_empirical * a) * m;
  }
  rep.ok = rep.lower <= rep.value + rep.tolerance && rep.lower <= rep.last + rep.tolerance;
  return rep;
}

WeakStarReport weakstar_check(const Integrand& f, const BVRepresentation& target,
                              const WeightedIntervalSpace& space,
                              const OpenSet& omega,
                              const std::vector<Interval>& open_sets,
                              const std::vector<Interval>& closed_sets,
                              const Schedule& schedule,
                              const RelaxOptions& options) {
  schedule.validate();
  RelaxOptions opts = options;
  opts.keep_minimizer = true;
  std::vector<RelaxationResult> runs(schedule.points.size());
  parallel_for(runs.size(), [&](size_t k) {
    runs[k] = relax_value(f, target, space, omega, schedule.points[k].n,
                          schedule.points[k].eps, opts);
  });
  const auto& last = schedule.points.back();
  WeakStarReport rep;
  double scale = 1.0 + std::fabs(runs.back().value);
  rep.tolerance = 3.0 * options.solver_tol * scale;

  auto component_of = [&](const Interval& s) -> size_t {
    const auto& comps = omega.components();
    for (size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].lo <= s.lo && s.hi <= comps[c].hi) return c;
    }
    throw std::invalid_argument("weak* check: set not inside one component of omega");
  };
  auto energies = [&](const Interval& s, size_t comp) {
    std::vector<double> out;
    for (const auto& r : runs) out.push_back(energy(f, r.minimizer[comp], space, OpenSet({s})));
    return out;
  };
  RelaxOptions lean = options;
  lean.keep_minimizer = false;
  for (const auto& s : open_sets) {
    size_t comp = component_of(s);
    WeakStarRow row{s, false, energies(s, comp), 0.0, 0.0, false};
    row.relaxed = relax_value(f, target, space, OpenSet({s}), last.n, last.eps, lean).value;
    row.slack = row.energies.back() - row.relaxed;
    row.ok = row.slack >= -rep.tolerance;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  for (const auto& s : closed_sets) {
    size_t comp = component_of(s);
    const auto& host = omega.components()[comp];
    WeakStarRow row{s, true, energies(s, comp), 0.0, 0.0, false};
    Interval nbhd{std::max(host.lo, Rational(s.lo - 2 * last.eps)),
                  std::min(host.hi, Rational(s.hi + 2 * last.eps))};
    row.relaxed = relax_value(f, target, space, OpenSet({nbhd}), last.n, last.eps, lean).value;
    row.slack = row.relaxed - row.energies.back();
    row.ok = row.slack >= -rep.tolerance;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace bvrelax
