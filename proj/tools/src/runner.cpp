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


#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "bvrelax/acceptance.hpp"
#include "bvrelax/cantor_report.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/relax.hpp"
#include "bvrelax/traces.hpp"
#include "bvrelax/whitney.hpp"
#include "svg.hpp"

namespace bvrelax::tools {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* boolean(bool b) { return b ? "true" : "false"; }

bool has(const Json& body, const char* key) { return body.contains(key) && !body.at(key).is_null(); }

WeightedIntervalSpace space_or_unit(const Json& body) {
  if (!has(body, "space")) return WeightedIntervalSpace::uniform(0, 1);
  return space_from_json(body.at("space"), "/space");
}

Integrand integrand_or_identity(const Json& body) {
  if (!has(body, "integrand")) return Integrand::identity();
  return integrand_from_json(body.at("integrand"), "/integrand");
}

BVRepresentation required_target(const Json& body, const char* key) {
  if (!has(body, key)) fail(std::string("/") + key, "required");
  return target_from_json(body.at(key), std::string("/") + key);
}

OpenSet set_or(const Json& body, const char* key, const OpenSet& fallback) {
  if (!has(body, key)) return fallback;
  return open_set_from_json(body.at(key), std::string("/") + key);
}

Schedule schedule_or(const Json& body, int K, const Rational& length) {
  if (!has(body, "schedule")) return Schedule::standard(K, length);
  return schedule_from_json(body.at("schedule"), "/schedule", length);
}

int int_or(const Json& body, const char* key, int fallback, int lo, int hi) {
  if (!has(body, key)) return fallback;
  const Json& v = body.at(key);
  if (!v.is_number_integer()) fail(std::string("/") + key, "expected an integer");
  int x = v.get<int>();
  if (x < lo || x > hi) {
    fail(std::string("/") + key, "expected a value in [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
  }
  return x;
}

double double_or(const Json& body, const char* key, double fallback) {
  if (!has(body, key)) return fallback;
  const Json& v = body.at(key);
  if (!v.is_number()) fail(std::string("/") + key, "expected a number");
  return v.get<double>();
}

template <typename T>
std::vector<T> list_or(const Json& body, const char* key, std::vector<T> fallback) {
  if (!has(body, key)) return fallback;
  const Json& v = body.at(key);
  std::string path = std::string("/") + key;
  if (!v.is_array() || v.empty()) fail(path, "expected a nonempty array");
  std::vector<T> out;
  for (size_t k = 0; k < v.size(); ++k) {
    bool ok = std::is_integral_v<T> ? v[k].is_number_integer() : v[k].is_number();
    if (!ok) fail(path + "/" + std::to_string(k), "expected a number");
    out.push_back(v[k].get<T>());
  }
  return out;
}

RelaxOptions relax_options(const Json& body) {
  RelaxOptions o;
  if (has(body, "solver")) {
    const Json& s = body.at("solver");
    if (!s.is_string() || (s != "chain" && s != "simplex")) {
      fail("/solver", "expected \"chain\" or \"simplex\"");
    }
    o.use_simplex = s == "simplex";
  }
  o.solver_tol = double_or(body, "solver_tol", o.solver_tol);
  if (!(o.solver_tol > 0)) fail("/solver_tol", "expected a positive number");
  if (has(body, "timing")) {
    if (!body.at("timing").is_boolean()) fail("/timing", "expected a boolean");
    o.timing = body.at("timing").get<bool>();
  }
  o.keep_minimizer = false;
  return o;
}

Json summary_head(const ExperimentConfig& config) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["experiment"] = config.experiment;
  j["seed"] = config.seed;
  return j;
}

Artifact summary_file(const Json& j) { return {"summary.json", j.dump(2) + "\n"}; }

std::string relax_csv(const std::vector<RelaxationResult>& rows) {
  std::ostringstream o;
  o << "n,eps,value,lower,status,millis\n";
  for (const auto& r : rows) {
    o << r.n << ',' << to_string(r.eps) << ',' << num(r.value) << ',' << num(r.lower_certificate)
      << ',' << r.status << ',' << num(r.millis) << '\n';
  }
  return o.str();
}

Series value_series(const std::string& name, const std::vector<RelaxationResult>& rows,
                    bool by_n) {
  Series s{name, {}, {}};
  for (const auto& r : rows) {
    s.x.push_back(by_n ? r.n : to_double(r.eps));
    s.y.push_back(r.value);
  }
  return s;
}

RunOutcome coarea(const ExperimentConfig& config) {
  const Json& b = config.body;
  struct Case {
    WeightedIntervalSpace space;
    GridFunction u;
    OpenSet omega;
  };
  std::vector<Case> cases;
  if (has(b, "random_cases")) {
    int count = int_or(b, "random_cases", 0, 0, 100000);
    Rng rng(config.seed);
    std::uniform_int_distribution<int> extra(0, 30);
    for (int c = 0; c < count; ++c) {
      WeightedIntervalSpace space = random_space(rng);
      GridFunction u = random_grid_function(rng, 0, 1, extra(rng), space.breaks());
      cases.push_back({space, u, space.interior()});
    }
  } else {
    WeightedIntervalSpace space = space_or_unit(b);
    BVRepresentation t = required_target(b, "target");
    if (!t.grid() || !t.jumps().empty()) fail("/target", "coarea needs a grid target without jumps");
    cases.push_back({space, *t.grid(), set_or(b, "omega", space.interior())});
  }
  RunOutcome out;
  std::ostringstream csv;
  csv << "case_id,lhs,rhs,residual\n";
  double worst = 0.0;
  for (size_t k = 0; k < cases.size(); ++k) {
    CoareaSides s = coarea_both_sides(cases[k].u, cases[k].space, cases[k].omega);
    double res = std::fabs(s.lhs - s.rhs);
    worst = std::max(worst, res);
    csv << k << ',' << num(s.lhs) << ',' << num(s.rhs) << ',' << num(res) << '\n';
  }
  out.passed = worst <= 1e-9;
  Json j = summary_head(config);
  j["cases"] = cases.size();
  j["max_residual"] = worst;
  j["pass"] = out.passed;
  out.files = {{"coarea.csv", csv.str()}, summary_file(j)};
  out.log.push_back("coarea: " + std::to_string(cases.size()) + " cases, max residual " + num(worst));
  return out;
}

RunOutcome relax(const ExperimentConfig& config) {
  const Json& b = config.body;
  WeightedIntervalSpace space = space_or_unit(b);
  Integrand f = integrand_or_identity(b);
  BVRepresentation u = required_target(b, "target");
  OpenSet omega = set_or(b, "omega", space.interior());
  Schedule schedule = schedule_or(b, 4, space.b() - space.a());
  RelaxOptions options = relax_options(b);

  ExtrapolationReport rep = relax_extrapolate(f, u, space, omega, schedule, options);
  RunOutcome out;
  bool solved = std::all_of(rep.rows.begin(), rep.rows.end(),
                            [](const RelaxationResult& r) { return r.status == "optimal"; });
  out.passed = solved;
  Json j = summary_head(config);
  j["last"] = rep.last;
  j["extrapolated"] = rep.extrapolated;
  j["fit"] = {{"limit", rep.fit.limit}, {"exponent", rep.fit.exponent},
              {"residual", rep.fit.residual}, {"fitted", rep.fit.fitted}};
  j["monotone"] = rep.monotone;
  j["lower_certificate"] = rep.rows.empty() ? 0.0 : rep.rows.back().lower_certificate;
  j["pass"] = out.passed;
  PlotSpec by_eps{"relaxed value", "eps", "value", true, false};
  PlotSpec by_n{"relaxed value", "n", "value", true, false};
  out.files = {{"relax.csv", relax_csv(rep.rows)},
               {"relax_value_vs_eps.svg", line_plot(by_eps, {value_series("F", rep.rows, false)})},
               {"relax_value_vs_n.svg", line_plot(by_n, {value_series("F", rep.rows, true)})},
               summary_file(j)};
  out.log.push_back("relax: last " + num(rep.last) + ", extrapolated " + num(rep.extrapolated));
  return out;
}

RunOutcome cantor(const ExperimentConfig& config) {
  const Json& b = config.body;
  int m = int_or(b, "m", 8, 1, 20);
  int K = has(b, "schedule") ? 0 : int_or(b, "K", 6, 0, 7);
  Schedule schedule = schedule_or(b, K, 1);
  RelaxOptions options = relax_options(b);

  CantorReport rep = counterexample_report(m, schedule, options);
  RunOutcome out;
  out.passed = rep.pass;
  std::ostringstream curves;
  curves << "integrand,n,eps,value,lower,status\n";
  for (const auto* e : {&rep.tv, &rep.kinked}) {
    const char* name = e == &rep.tv ? "tv" : "kinked";
    for (const auto& r : e->rows) {
      curves << name << ',' << r.n << ',' << to_string(r.eps) << ',' << num(r.value) << ','
             << num(r.lower_certificate) << ',' << r.status << '\n';
    }
  }
  Json j = summary_head(config);
  j["m"] = m;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"quantity", r.quantity}, {"kind", r.kind}, {"value", r.value},
                    {"exact", r.exact}, {"target", r.target}, {"tolerance", r.tolerance},
                    {"pass", r.checked ? Json(r.pass) : Json("reported")}});
  }
  j["rows"] = rows;
  j["pass"] = rep.pass;
  PlotSpec spec{"Cantor example: relaxed value", "eps", "value", true, false};
  out.files = {{"cantor_report.csv", to_csv(rep)},
               {"cantor_curves.csv", curves.str()},
               {"cantor_convergence.svg",
                line_plot(spec, {value_series("f(t) = t", rep.tv.rows, false),
                                 value_series("kinked f", rep.kinked.rows, false)})},
               summary_file(j)};
  for (const auto& r : rep.rows) {
    out.log.push_back(r.quantity + " = " + (r.exact.empty() ? num(r.value) : r.exact) + "  " +
                      (r.checked ? (r.pass ? "ok" : "FAILED") : "reported"));
  }
  return out;
}

RunOutcome whitney(const ExperimentConfig& config) {
  const Json& b = config.body;
  WeightedIntervalSpace space = space_or_unit(b);
  BVRepresentation u = required_target(b, "target");
  OpenSet G = set_or(b, "G", space.interior());
  std::vector<int> scales = list_or<int>(b, "scales", {4, 16, 64, 256});
  std::vector<double> deltas = list_or<double>(b, "deltas", {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
  double tau = double_or(b, "tau", 5.0);
  for (size_t k = 0; k < scales.size(); ++k) {
    if (scales[k] < 1) fail("/scales/" + std::to_string(k), "expected a positive integer");
  }
  for (size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0)) fail("/deltas/" + std::to_string(k), "expected a positive number");
  }
  if (tau < 5.0) fail("/tau", "expected tau >= 5");
  if (!G.subset_of(space.interior())) fail("/G", "must lie inside the space");

  VariationMeasure du = variation_measure_of(u, space);
  std::ostringstream csv;
  csv << "scale,balls,overlap_measured,overlap_bound,invariants_ok,l1_error,int_g_s,"
         "singular_bound,domination_gap\n";
  Series err{"L1 error", {}, {}};
  bool ok = true;
  for (int i : scales) {
    WhitneyCover cover = build_cover(space, G, i, tau);
    CoverInvariants inv = check_cover(cover, space);
    PartitionOfUnity pou(cover);
    GridFunction conv = discrete_convolution(u, cover, pou, space);
    WhitneyGradients grads = whitney_upper_gradients(cover, pou, du, space);
    double gap = gradient_domination_gap(conv, grads.g, cover);
    double l1 = l1_distance(BVRepresentation(conv), u, space, G);
    ok = ok && inv.ok() && grads.ok && gap <= 1e-9;
    err.x.push_back(i);
    err.y.push_back(l1);
    csv << i << ',' << cover.balls.size() << ',' << cover.overlap_measured << ','
        << cover.overlap_bound << ',' << boolean(inv.ok()) << ',' << num(l1) << ','
        << num(grads.integral_g_s) << ',' << num(grads.singular_bound) << ',' << num(gap) << '\n';
  }
  EquiintegrabilityReport rep = equiintegrability_report(space, G, du, scales, deltas, tau);
  std::ostringstream prof;
  prof << "delta,profile\n";
  for (size_t k = 0; k < rep.deltas.size(); ++k) {
    prof << num(rep.deltas[k]) << ',' << num(rep.profile[k]) << '\n';
  }
  RunOutcome out;
  out.passed = ok && rep.ok();
  Json j = summary_head(config);
  j["cover_ok"] = ok;
  j["profile_monotone"] = rep.profile_monotone;
  j["profile_vanishes"] = rep.profile_vanishes;
  j["bound_ok"] = rep.bound_ok;
  j["limit_ok"] = rep.limit_ok;
  j["limit_slack"] = rep.limit_slack;
  j["weak_l1_cauchy"] = rep.weak_l1_cauchy;
  j["pass"] = out.passed;
  PlotSpec e_spec{"discrete convolution error", "scale i", "L1 error", true, true};
  PlotSpec p_spec{"adversarial equi-integrability profile", "delta", "sup int_A g", true, true};
  out.files = {{"whitney.csv", csv.str()},
               {"whitney_profile.csv", prof.str()},
               {"whitney_l1_error.svg", line_plot(e_spec, {err})},
               {"whitney_profile.svg", line_plot(p_spec, {{"profile", rep.deltas, rep.profile}})},
               summary_file(j)};
  out.log.push_back(std::string("whitney: ") + (out.passed ? "all checks hold" : "checks FAILED"));
  return out;
}

RunOutcome traces(const ExperimentConfig& config) {
  const Json& b = config.body;
  struct Case {
    WeightedIntervalSpace space;
    BVRepresentation u;
    BVRepresentation v;
    OpenSet omega;
    OpenSet omega_star;
  };
  std::vector<Case> cases;
  if (has(b, "random_cases")) {
    int count = int_or(b, "random_cases", 0, 0, 100000);
    Rng rng(config.seed);
    for (int c = 0; c < count; ++c) {
      WeightedIntervalSpace space = random_space(rng);
      BVRepresentation u = random_bv(rng, space, 8, 1);
      BVRepresentation v = random_bv(rng, space, 8, 1);
      OpenSet om = random_open_set(rng, Rational(1, 8), Rational(7, 8), 2);
      cases.push_back({space, u, v, om, space.interior()});
    }
  } else {
    if (!has(b, "cases") || !b.at("cases").is_array()) fail("/cases", "expected an array");
    const Json& cs = b.at("cases");
    for (size_t k = 0; k < cs.size(); ++k) {
      std::string p = "/cases/" + std::to_string(k);
      const Json& c = cs[k];
      if (!c.is_object()) fail(p, "expected an object");
      WeightedIntervalSpace space =
          has(c, "space") ? space_from_json(c.at("space"), p + "/space") : space_or_unit(b);
      auto target = [&](const char* key) {
        if (!has(c, key)) fail(p + "/" + key, "required");
        BVRepresentation t = target_from_json(c.at(key), p + "/" + key);
        if (!t.grid()) fail(p + "/" + key, "expected a grid target");
        return t;
      };
      BVRepresentation u = target("u");
      BVRepresentation v = target("v");
      if (!has(c, "omega")) fail(p + "/omega", "required");
      OpenSet om = open_set_from_json(c.at("omega"), p + "/omega");
      OpenSet oms = has(c, "omega_star") ? open_set_from_json(c.at("omega_star"), p + "/omega_star")
                                         : space.interior();
      if (!om.compactly_inside(oms)) fail(p + "/omega", "must be compactly inside omega_star");
      cases.push_back({space, u, v, om, oms});
    }
  }
  std::ostringstream csv, tv;
  csv << "case_id,lhs,rhs,residual\n";
  tv << "case_id,point,side,value\n";
  double worst = 0.0;
  for (size_t k = 0; k < cases.size(); ++k) {
    const Case& c = cases[k];
    GlueBvReport g = glue_bv_check(c.u, c.v, c.space, c.omega, c.omega_star);
    worst = std::max(worst, g.residual / (1.0 + g.rhs));
    csv << k << ',' << num(g.lhs) << ',' << num(g.rhs) << ',' << num(g.residual) << '\n';
    for (const auto& x : c.omega.boundary()) {
      tv << k << ',' << to_string(x) << ",inside,"
         << num(trace_at(c.u, c.space, c.omega, x, TraceSide::kInside).value) << '\n';
      tv << k << ',' << to_string(x) << ",outside,"
         << num(trace_at(c.v, c.space, c.omega, x, TraceSide::kOutside).value) << '\n';
    }
  }
  RunOutcome out;
  out.passed = worst <= 1e-9;
  Json j = summary_head(config);
  j["cases"] = cases.size();
  j["max_relative_residual"] = worst;
  j["pass"] = out.passed;
  out.files = {{"traces.csv", csv.str()}, {"trace_values.csv", tv.str()}, summary_file(j)};
  out.log.push_back("traces: " + std::to_string(cases.size()) + " cases, max residual " + num(worst));
  return out;
}

RunOutcome minimize(const ExperimentConfig& config) {
  const Json& b = config.body;
  WeightedIntervalSpace space = space_or_unit(b);
  Integrand f = integrand_or_identity(b);
  BVRepresentation h = required_target(b, "h");
  if (!has(b, "omega")) fail("/omega", "required");
  OpenSet omega = open_set_from_json(b.at("omega"), "/omega");
  OpenSet omega_star = set_or(b, "omega_star", space.interior());
  if (!omega.compactly_inside(omega_star)) fail("/omega", "must be compactly inside omega_star");
  Schedule schedule = schedule_or(b, 4, space.b() - space.a());
  RelaxOptions options = relax_options(b);

  EquivalenceReport rep = equivalence_check(f, h, space, omega, omega_star, schedule, options);
  PenaltyResult pen = penalty_minimize(f, h, space, omega, schedule.points.back().n, options);
  std::ostringstream csv, mz;
  csv << "competitor,lhs,rhs,residual,ok\n";
  for (const auto& r : rep.competitors) {
    csv << r.name << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.residual) << ','
        << boolean(r.ok) << '\n';
  }
  mz << "x,value\n";
  for (size_t k = 0; k < pen.minimizer.nodes().size(); ++k) {
    mz << to_string(pen.minimizer.nodes()[k]) << ',' << num(pen.minimizer.values()[k]) << '\n';
  }
  RunOutcome out;
  out.passed = rep.ok;
  Json j = summary_head(config);
  j["penalty_value"] = rep.penalty_value;
  j["extended_value"] = rep.extended_value;
  j["value_gap"] = rep.value_gap;
  j["minimizer_l1"] = rep.minimizer_l1;
  j["minimizer_scale"] = rep.minimizer_scale;
  j["pass"] = rep.ok;
  out.files = {{"minimize.csv", csv.str()}, {"penalty_minimizer.csv", mz.str()}, summary_file(j)};
  out.log.push_back("minimize: penalty " + num(rep.penalty_value) + ", extended " +
                    num(rep.extended_value));
  return out;
}

RunOutcome suite(const ExperimentConfig& config) {
  const Json& b = config.body;
  std::vector<std::string> ids;
  if (has(b, "criteria")) {
    const Json& c = b.at("criteria");
    if (!c.is_array()) fail("/criteria", "expected an array");
    const auto& known = criterion_ids();
    for (size_t k = 0; k < c.size(); ++k) {
      std::string p = "/criteria/" + std::to_string(k);
      if (!c[k].is_string()) fail(p, "expected a string");
      std::string id = c[k].get<std::string>();
      if (std::find(known.begin(), known.end(), id) == known.end()) fail(p, "unknown criterion " + id);
      ids.push_back(id);
    }
  }
  RunOutcome out;
  std::ostringstream csv;
  csv << "id,title,pass,detail\n";
  Json j = summary_head(config);
  Json items = Json::array();
  int passed = 0, failed = 0;
  for (const auto& id : ids.empty() ? criterion_ids() : ids) {
    // Run one at a time so progress reaches the log as it happens.
    CriterionResult r = run_criterion(id, config.seed);
    std::string line = format_line(r);
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    (r.pass() ? passed : failed) += 1;
    csv << r.id << ',' << csv_field(r.title) << ',' << boolean(r.pass()) << ',' << csv_field(r.detail) << '\n';
    items.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()},
                     {"correct", r.correct}, {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
  }
  out.passed = failed == 0;
  j["passed"] = passed;
  j["failed"] = failed;
  j["criteria"] = items;
  out.files = {{"suite.csv", csv.str()}, summary_file(j)};
  return out;
}

}  // namespace

RunOutcome run_experiment(const ExperimentConfig& config) {
  const std::string& e = config.experiment;
  if (e == "coarea") return coarea(config);
  if (e == "relax") return relax(config);
  if (e == "cantor") return cantor(config);
  if (e == "whitney") return whitney(config);
  if (e == "traces") return traces(config);
  if (e == "minimize") return minimize(config);
  if (e == "suite") return suite(config);
  fail("/experiment", "unknown experiment '" + e + "'");
}

}  // namespace bvrelax::tools
