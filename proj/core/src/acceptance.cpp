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


#include "bvrelax/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bvrelax/cantor.hpp"
#include "bvrelax/cantor_report.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/relax.hpp"
#include "bvrelax/traces.hpp"
#include "bvrelax/whitney.hpp"

namespace bvrelax {
namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Each criterion body fills correct and detail.
using Body = std::function<void(Rng&, CriterionResult&)>;

void coarea(Rng& rng, CriterionResult& r) {
  double worst = 0.0;
  std::uniform_int_distribution<int> extra(0, 30);
  for (int c = 0; c < 200; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    GridFunction u = random_grid_function(rng, 0, 1, extra(rng), space.breaks());
    OpenSet omega = c % 2 == 0 ? space.interior() : random_open_set(rng, 0, 1, 3);
    CoareaSides s = coarea_both_sides(u, space, omega);
    worst = std::max(worst, std::fabs(s.lhs - s.rhs));
  }
  r.correct = worst <= 1e-9;
  r.detail = fmt("200 cases, max |lhs - rhs| = %.3g", worst);
}

void lower_bound(Rng& rng, CriterionResult& r) {
  RelaxOptions options;
  options.keep_minimizer = false;
  std::uniform_int_distribution<int> extra(1, 10);
  std::uniform_int_distribution<int> jumps(0, 3);
  double min_slack = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 50; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation u = random_bv(rng, space, extra(rng), jumps(rng));
    Integrand f = random_integrand(rng);
    OpenSet omega = space.interior();
    double lower = measure_functional(f, variation_measure_of(u, space), space, omega);
    RelaxationResult res = relax_value(f, u, space, omega, 4096, Rational(1, 1000), options);
    min_slack = std::min(min_slack, res.value - lower + 1e-6 + options.solver_tol);
  }
  r.correct = min_slack >= 0.0;
  r.detail = fmt("50 cases, min(value - lower + tol) = %.3g", min_slack);
}

void perimeter_oracle(Rng& rng, CriterionResult& r) {
  RelaxOptions options;
  options.keep_minimizer = false;
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  SchedulePoint tail = Schedule::standard(5).points.back();
  double worst = 0.0;
  for (int c = 0; c < 30; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    std::vector<Rational> breaks = space.breaks();
    std::vector<Rational> interior_breaks;
    for (const auto& x : breaks) {
      if (space.a() < x && x < space.b()) interior_breaks.push_back(x);
    }
    int k = count(rng);
    std::vector<Jump> js;
    while (static_cast<int>(js.size()) < k) {
      Rational x;
      if (js.size() % 3 == 0 && !interior_breaks.empty()) {
        std::uniform_int_distribution<size_t> pick(0, interior_breaks.size() - 1);
        size_t i = pick(rng);
        x = interior_breaks[i];
        interior_breaks.erase(interior_breaks.begin() + i);
      } else {
        x = random_dyadic(rng, 0, 1, 8);
      }
      bool dup = false;
      for (const auto& j : js) dup = dup || j.x == x;
      if (!dup) js.push_back({x, (c + js.size()) % 2 ? mag(rng) : -mag(rng)});
    }
    double oracle = 0.0;
    for (const auto& j : js) oracle += to_double(space.jump_cost_density(j.x)) * std::fabs(j.height);
    BVRepresentation u(GridFunction({0, 1}, {0.0, 0.0}), js, "steps");
    RelaxationResult res = relax_value(Integrand::identity(), u, space, space.interior(),
                                       tail.n, tail.eps, options);
    worst = std::max(worst, std::fabs(res.value - oracle) / oracle);
  }
  r.correct = worst <= 0.02;
  r.detail = fmt("30 cases at n=%g, max relative error %.3g", tail.n, worst);
}

void constant_weight(Rng& rng, CriterionResult& r) {
  RelaxOptions options;
  options.keep_minimizer = false;
  std::uniform_int_distribution<int> weight(1, 16);
  std::uniform_int_distribution<int> extra(0, 18);
  Schedule schedule = Schedule::standard(4);
  double worst = 0.0;
  for (int c = 0; c < 20; ++c) {
    WeightedIntervalSpace space = WeightedIntervalSpace::uniform(0, 1, Rational(weight(rng), 4));
    GridFunction u = random_grid_function(rng, 0, 1, extra(rng));
    Integrand f = random_integrand(rng);
    double e = energy(f, u, space, space.interior());
    for (const auto& p : schedule.points) {
      RelaxationResult res = relax_value(f, BVRepresentation(u), space, space.interior(),
                                         p.n, p.eps, options);
      worst = std::max(worst, std::fabs(res.value - e));
    }
  }
  r.correct = worst <= 1e-6;
  r.detail = fmt("20 cases x 5 schedule points, max |value - energy| = %.3g", worst);
}

void cantor(Rng&, CriterionResult& r) {
  CantorReport rep = counterexample_report(8, Schedule::standard(6));
  r.correct = rep.pass;
  std::ostringstream out;
  for (const auto& row : rep.rows) {
    if (row.checked && !row.pass) out << row.quantity << " failed (" << row.value << "); ";
  }
  out << "TV " << rep.tv.extrapolated << ", kinked f " << rep.kinked.extrapolated
      << " (last " << rep.kinked.last << ")";
  r.detail = out.str();
}

void measure_property(Rng& rng, CriterionResult& r) {
  RelaxOptions options;
  options.keep_minimizer = false;
  std::uniform_int_distribution<int> extra(1, 8);
  std::uniform_int_distribution<int> jumps(0, 2);
  double worst_add = 0.0;
  double worst_sub = 0.0;
  double worst_gap = 0.0;
  bool ok = true;
  for (int c = 0; c < 20; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation u = random_bv(rng, space, extra(rng), jumps(rng));
    Integrand f = random_integrand(rng);
    OpenSet A = random_open_set(rng, 0, Rational(1, 2), 2);
    OpenSet B = c % 2 == 0 ? random_open_set(rng, Rational(1, 2), 1, 2)
                           : random_open_set(rng, Rational(1, 4), 1, 2);
    MeasurePropertyReport rep =
        measure_property_report(f, u, space, {{A, B}}, 1024, Rational(1, 128), options);
    ok = ok && rep.ok;
    for (const auto& row : rep.rows) {
      worst_sub = std::min(worst_sub, row.subadditivity_slack);
      if (row.disjoint) worst_add = std::max(worst_add, row.additivity_residual);
      worst_gap = std::max(worst_gap, row.exhaustion_gap);
    }
  }
  r.correct = ok;
  r.detail = fmt("min subadditivity slack %.3g, max additivity residual %.3g, max exhaustion gap %.3g",
                 worst_sub, worst_add, worst_gap);
}

struct WhitneyCase {
  std::string name;
  WeightedIntervalSpace space;
  BVRepresentation u;
  OpenSet G;
  bool absolutely_continuous;
};

void whitney(Rng& rng, CriterionResult& r) {
  std::vector<WhitneyCase> cases;
  auto uniform = WeightedIntervalSpace::uniform(0, 1);
  cases.push_back({"x^2 uniform", uniform,
                   BVRepresentation(GridFunction::sample(0, 1, 64, [](double x) { return x * x; })),
                   OpenSet::interval(0, 1), true});
  cases.push_back({"cantor", cantor_space(8), BVRepresentation(CantorFunction(2.0)),
                   OpenSet::interval(0, 1), true});
  WeightedIntervalSpace rs = random_space(rng);
  cases.push_back({"random", rs, random_bv(rng, rs, 12, 0), random_open_set(rng, 0, 1, 2), true});
  cases.push_back({"step", uniform,
                   BVRepresentation(GridFunction({0, 1}, {0.0, 1.0}), {Jump{Rational(1, 2), 1.0}}),
                   OpenSet::interval(0, 1), false});

  const std::vector<int> scales{4, 16, 64, 256};
  const std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  bool ok = true;
  std::ostringstream out;
  for (const auto& c : cases) {
    VariationMeasure du = variation_measure_of(c.u, c.space);
    double prev_err = std::numeric_limits<double>::infinity();
    double worst_gap = -std::numeric_limits<double>::infinity();
    double worst_sum = 0.0;
    bool inv_ok = true;
    bool decreasing = true;
    bool singular_ok = true;
    for (int i : scales) {
      WhitneyCover cover = build_cover(c.space, c.G, i);
      inv_ok = inv_ok && check_cover(cover, c.space).ok();
      PartitionOfUnity pou(cover);
      for (const auto& ball : cover.balls) {
        for (double t : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
          worst_sum = std::max(worst_sum, std::fabs(pou.sum_phi(ball.center + t * ball.radius) - 1.0));
        }
      }
      GridFunction conv = discrete_convolution(c.u, cover, pou, c.space);
      WhitneyGradients grads = whitney_upper_gradients(cover, pou, du, c.space);
      singular_ok = singular_ok && grads.ok;
      worst_gap = std::max(worst_gap, gradient_domination_gap(conv, grads.g, cover));
      double err = l1_distance(BVRepresentation(conv), c.u, c.space, c.G);
      decreasing = decreasing && err < prev_err;
      prev_err = err;
    }
    bool case_ok = inv_ok && decreasing && singular_ok && worst_gap <= 1e-9 && worst_sum <= 1e-12;
    out << c.name << ": invariants " << inv_ok << ", l1 decreasing " << decreasing
        << ", int g_s bound " << singular_ok << ", domination gap " << worst_gap;
    if (c.absolutely_continuous) {
      EquiintegrabilityReport rep =
          equiintegrability_report(c.space, c.G, du, scales, deltas);
      case_ok = case_ok && rep.ok();
      out << ", profile " << rep.profile.front() << " -> " << rep.profile.back()
          << ", limit slack " << rep.limit_slack;
    }
    out << "; ";
    ok = ok && case_ok;
  }
  r.correct = ok;
  r.detail = out.str();
}

void gluing(Rng& rng, CriterionResult& r) {
  std::uniform_int_distribution<int> kdist(1, 6);
  std::uniform_int_distribution<int> extra(2, 12);
  double min_slack = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 20; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    Rational u_lo = random_dyadic(rng, Rational(1, 32), Rational(1, 8), 8);
    Rational u_hi = random_dyadic(rng, Rational(5, 8), Rational(3, 4), 8);
    Rational up_lo = random_dyadic(rng, u_lo, Rational(3, 16), 8);
    Rational up_hi = random_dyadic(rng, Rational(1, 2), u_hi - Rational(1, 16), 8);
    Rational v_lo = random_dyadic(rng, Rational(3, 8), Rational(7, 16), 8);
    Rational vp_lo = random_dyadic(rng, v_lo, Rational(15, 32), 8);
    Rational v_hi = random_dyadic(rng, Rational(7, 8), Rational(31, 32), 8);
    Rational vp_hi = random_dyadic(rng, Rational(13, 16), v_hi, 8);
    OpenSet U = OpenSet::interval(u_lo, u_hi);
    OpenSet Up = OpenSet::interval(up_lo, up_hi);
    OpenSet V = OpenSet::interval(v_lo, v_hi);
    OpenSet Vp = OpenSet::interval(vp_lo, vp_hi);
    GridFunction u = random_grid_function(rng, u_lo, u_hi, extra(rng), space.breaks());
    GridFunction v = random_grid_function(rng, v_lo, v_hi, extra(rng), space.breaks());
    GlueReport rep = glue_lipschitz(u, v, U, Up, V, Vp, random_integrand(rng), space, kdist(rng));
    min_slack = std::min(min_slack, rep.ok ? rep.slack : -std::fabs(rep.slack) - 1.0);
  }
  r.correct = min_slack >= 0.0;
  r.detail = fmt("20 pairs, min slack %.3g", min_slack);
}

bool same(double x, double y) { return std::fabs(x - y) <= 1e-12 * (1.0 + std::fabs(y)); }

void traces(Rng& rng, CriterionResult& r) {
  std::ostringstream out;
  bool ok = true;
  auto inside = [](const BVRepresentation& u, const WeightedIntervalSpace& s,
                   const OpenSet& om, const Rational& x) {
    return trace_at(u, s, om, x, TraceSide::kInside).value;
  };

  int prop_fail = 0;
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> level(-1.0, 1.0);
  for (int c = 0; c < 20; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation u = random_bv(rng, space, 6, 2);
    BVRepresentation v = random_bv(rng, space, 6, 2);
    OpenSet om = random_open_set(rng, 0, 1, 3);
    double alpha = coef(rng), beta = coef(rng), ell = level(rng);
    BVRepresentation lin = linear_combination(alpha, u, beta, v);
    BVRepresentation mx = pointwise_max(u, v);
    BVRepresentation mn = pointwise_min(u, v);
    BVRepresentation tr = truncate(u, ell);
    // u - max(u, v) <= u pointwise, so traces must be ordered.
    BVRepresentation below = linear_combination(1.0, u, -1.0, pointwise_max(v, u));
    for (const auto& x : om.boundary()) {
      double tu = inside(u, space, om, x), tv = inside(v, space, om, x);
      bool good = same(inside(lin, space, om, x), alpha * tu + beta * tv) &&
                  inside(below, space, om, x) <= 0.0 + 1e-15 &&
                  same(inside(mx, space, om, x), std::max(tu, tv)) &&
                  same(inside(mn, space, om, x), std::min(tu, tv)) &&
                  same(inside(tr, space, om, x), std::min(tu, ell));
      if (0 < x && x < 1) {
        double out_t = trace_at(u, space, om, x, TraceSide::kOutside).value;
        double lo = std::min(tu, out_t), hi = std::max(tu, out_t);
        good = good && same(lo, u.lower_value(x)) && same(hi, u.upper_value(x));
      }
      if (!good) ++prop_fail;
    }
  }
  ok = ok && prop_fail == 0;
  out << "property failures " << prop_fail;

  auto uniform = WeightedIntervalSpace::uniform(0, 1);
  auto two = WeightedIntervalSpace(0, 1, {{0, Rational(1, 2), 1}, {Rational(1, 2), 1, 2}});
  OpenSet left = OpenSet::interval(0, Rational(1, 2));
  bool designed =
      theta_at(uniform, left, Rational(1, 2)) == Rational(1, 2) &&
      theta_at(two, left, Rational(1, 2)) == Rational(1, 3) &&
      inside(BVRepresentation(GridFunction({0, 1}, {0.0, 1.0})), uniform,
             OpenSet::interval(0, 1), Rational(1)) == 1.0 &&
      inside(BVRepresentation(CantorFunction()), uniform, left, Rational(1, 2)) == 0.5;
  TraceValue smooth = trace_at(std::function<double(double)>([](double x) { return x * x; }),
                               uniform, OpenSet::interval(0, 1), Rational(1));
  designed = designed && smooth.exists && std::fabs(smooth.value - 1.0) <= kTraceTol;
  ok = ok && designed;
  out << ", designed cases " << designed;

  double worst_glue = 0.0;
  for (int c = 0; c < 30; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation u = random_bv(rng, space, 8, 1);
    BVRepresentation v = random_bv(rng, space, 8, 1);
    OpenSet om = random_open_set(rng, Rational(1, 8), Rational(7, 8), 2);
    GlueBvReport g = glue_bv_check(u, v, space, om, OpenSet::interval(0, 1));
    worst_glue = std::max(worst_glue, g.residual / (1.0 + g.rhs));
  }
  ok = ok && worst_glue <= 1e-9;
  out << ", max glue residual " << worst_glue;

  double worst_ratio = 0.0;
  bool finite = true;
  for (int c = 0; c < 10; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation u = random_bv(rng, space, 8, 2);
    std::vector<Rational> A;
    for (int k = 0; k < 3; ++k) A.push_back(random_dyadic(rng, 0, 1, 8));
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    TraceIntegrabilityReport t = trace_integrability(u, space, OpenSet::interval(0, 1), A);
    finite = finite && t.ok && std::isfinite(t.ratio);
    worst_ratio = std::max(worst_ratio, t.ratio);
  }
  ok = ok && finite;
  out << ", max trace-integrability ratio " << worst_ratio;
  r.correct = ok;
  r.detail = out.str();
}

void equivalence(Rng& rng, CriterionResult& r) {
  struct Case {
    Integrand f;
    BVRepresentation h;
    WeightedIntervalSpace space;
    OpenSet omega;
    OpenSet omega_star;
  };
  auto uniform = WeightedIntervalSpace::uniform(0, 1);
  OpenSet unit = OpenSet::interval(0, 1);
  OpenSet mid = OpenSet::interval(Rational(1, 4), Rational(3, 4));
  BVRepresentation ramp(GridFunction({0, Rational(1, 4), Rational(3, 4), 1}, {0.0, 0.0, 1.0, 1.0}));
  std::vector<Case> cases;
  cases.push_back({Integrand::identity(), BVRepresentation(GridFunction({0, 1}, {0.7, 0.7})),
                   uniform, mid, unit});
  cases.push_back({Integrand::identity(), ramp, uniform, mid, unit});
  cases.push_back({Integrand::kinked(), ramp, uniform, mid, unit});
  for (int c = 0; c < 6; ++c) {
    WeightedIntervalSpace space = random_space(rng);
    BVRepresentation h = random_bv(rng, space, 8, c % 2);
    OpenSet omega = random_open_set(rng, Rational(1, 16), Rational(15, 16), 1 + c % 2);
    cases.push_back({random_integrand(rng), h, space, omega, unit});
  }
  cases.push_back({Integrand::kinked(), ramp, cantor_space(6),
                   OpenSet::interval(Rational(1, 8), Rational(7, 8)), unit});

  Schedule schedule = Schedule::standard(4);
  int failed = 0;
  double worst_gap = 0.0, worst_l1 = 0.0, worst_res = 0.0;
  for (const auto& c : cases) {
    EquivalenceReport rep = equivalence_check(c.f, c.h, c.space, c.omega, c.omega_star, schedule);
    if (!rep.ok) ++failed;
    worst_gap = std::max(worst_gap, rep.value_gap);
    worst_l1 = std::max(worst_l1, rep.minimizer_l1 / std::max(rep.minimizer_scale, 1e-300));
    for (const auto& row : rep.competitors) worst_res = std::max(worst_res, row.residual);
  }
  r.correct = failed == 0;
  r.detail = fmt("10 cases, max value gap %.3g, max minimizer l1/scale %.3g, max competitor residual %.3g",
                 worst_gap, worst_l1, worst_res) +
             ", failed " + std::to_string(failed);
}

struct Entry {
  std::string id;
  std::string title;
  double limit_seconds;
  Body body;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {"A1", "coarea identity", 10, coarea},
      {"A2", "lower bound", 300, lower_bound},
      {"A3", "perimeter oracle", 120, perimeter_oracle},
      {"A4", "constant-weight exactness", 60, constant_weight},
      {"A5", "Cantor reproduction", 900, cantor},
      {"A6", "measure property", 300, measure_property},
      {"A7", "Whitney machinery", 300, whitney},
      {"A8", "gluing", 60, gluing},
      {"A9", "trace suite", 60, traces},
      {"A10", "penalty equivalence", 600, equivalence},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

CriterionResult run_criterion(const std::string& id, std::uint64_t seed) {
  const auto& all = entries();
  for (size_t k = 0; k < all.size(); ++k) {
    if (all[k].id != id) continue;
    CriterionResult r;
    r.id = all[k].id;
    r.title = all[k].title;
    r.limit_seconds = all[k].limit_seconds;
    Rng rng(seed + k);
    auto start = std::chrono::steady_clock::now();
    try {
      all[k].body(rng, r);
    } catch (const std::exception& e) {
      r.correct = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown criterion " + id);
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& ids,
                                            std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& id : ids.empty() ? criterion_ids() : ids) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%-4s %s  %-26s %7.2fs / %.0fs  ", r.id.c_str(),
                r.pass() ? "PASS" : "FAIL", r.title.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace bvrelax
