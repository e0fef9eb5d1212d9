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


#include "bvrelax/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace bvrelax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Component {
  double lo, hi;
  bool left_open, right_open;  // the endpoint belongs to X \ G
};

std::vector<Component> components_of(const WeightedIntervalSpace& space,
                                     const OpenSet& G) {
  std::vector<Component> out;
  for (const auto& c : G.components()) {
    out.push_back({to_double(c.lo), to_double(c.hi), c.lo > space.a(), c.hi < space.b()});
  }
  return out;
}

// Greatest lower bound of the overlap count for 1/(4 tau)-Lipschitz radii:
// meeting tau-balls have radius ratio in (3/5, 5/3) and disjoint half-balls.
int overlap_bound_for(double tau) {
  return static_cast<int>(std::floor((16.0 * tau + 5.0) / 1.8));
}

double clip_lo(const WeightedIntervalSpace& s, double x) { return std::max(x, s.a_d()); }
double clip_hi(const WeightedIntervalSpace& s, double x) { return std::min(x, s.b_d()); }

}  // namespace

WhitneyCover build_cover(const WeightedIntervalSpace& space, const OpenSet& G,
                         int i, double tau) {
  if (G.empty()) throw std::invalid_argument("whitney: empty open set");
  if (i < 1) throw std::invalid_argument("whitney: scale must be >= 1");
  if (tau < 1.0) throw std::invalid_argument("whitney: tau must be >= 1");
  WhitneyCover cover;
  cover.scale = i;
  cover.tau = tau;
  cover.host = G;
  cover.overlap_bound = overlap_bound_for(tau);
  auto comps = components_of(space, G);
  double min_len = kInf;
  for (const auto& c : comps) min_len = std::min(min_len, c.hi - c.lo);
  cover.radius_floor = 1e-9 * min_len;

  for (const auto& c : comps) {
    auto radius = [&](double x) {
      double d = kInf;
      if (c.left_open) d = std::min(d, x - c.lo);
      if (c.right_open) d = std::min(d, c.hi - x);
      return std::max(0.0, std::min(d, 1.0 / i)) / (4.0 * tau);
    };
    std::vector<Ball> right;
    std::vector<Ball> left;
    double x0 = 0.5 * (c.lo + c.hi);
    right.push_back({x0, radius(x0)});
    // Next center y solves y - r(y)/2 = x + r/2; y - r(y)/2 is increasing.
    for (;;) {
      const Ball& prev = right.back();
      if (!c.right_open && prev.hi() >= c.hi) break;
      double target = prev.center + 0.5 * prev.radius;
      double lo = target;
      double hi = c.hi;
      double y = hi;
      if (hi - 0.5 * radius(hi) > target) {
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
          double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          (mid - 0.5 * radius(mid) < target ? lo : hi) = mid;
        }
        y = hi;
      }
      double r = radius(y);
      if (r < cover.radius_floor || y <= prev.center) break;
      right.push_back({y, r});
    }
    left.push_back(right.front());
    for (;;) {
      const Ball& prev = left.back();
      if (!c.left_open && prev.lo() <= c.lo) break;
      double target = prev.center - 0.5 * prev.radius;
      double lo = c.lo;
      double hi = target;
      double y = lo;
      if (lo + 0.5 * radius(lo) < target) {
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
          double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          (mid + 0.5 * radius(mid) > target ? hi : lo) = mid;
        }
        y = lo;
      }
      double r = radius(y);
      if (r < cover.radius_floor || y >= prev.center) break;
      left.push_back({y, r});
    }
    for (size_t k = left.size(); k-- > 1;) cover.balls.push_back(left[k]);
    cover.balls.insert(cover.balls.end(), right.begin(), right.end());
  }

  double r_max = 0.0;
  for (const auto& b : cover.balls) r_max = std::max(r_max, b.radius);
  const auto& balls = cover.balls;
  for (size_t k = 0; k < balls.size(); ++k) {
    int count = 1;
    double reach = tau * (balls[k].radius + r_max);
    for (size_t j = k + 1; j < balls.size() && balls[j].center - balls[k].center < reach; ++j) {
      if (balls[j].center - balls[k].center < tau * (balls[j].radius + balls[k].radius)) ++count;
    }
    for (size_t j = k; j-- > 0 && balls[k].center - balls[j].center < reach;) {
      if (balls[k].center - balls[j].center < tau * (balls[j].radius + balls[k].radius)) ++count;
    }
    cover.overlap_measured = std::max(cover.overlap_measured, count);
  }
  return cover;
}

CoverInvariants check_cover(const WhitneyCover& cover,
                            const WeightedIntervalSpace& space) {
  CoverInvariants inv;
  const double tau = cover.tau;
  const auto& balls = cover.balls;
  auto comps = components_of(space, cover.host);
  double r_max = 0.0;
  for (const auto& b : balls) r_max = std::max(r_max, b.radius);
  size_t next = 0;
  for (const auto& c : comps) {
    size_t first = next;
    while (next < balls.size() && balls[next].center < c.hi) ++next;
    if (first == next) {
      inv.covers = false;
      continue;
    }
    for (size_t k = first; k < next; ++k) {
      const Ball& b = balls[k];
      if (b.radius > 1.0 / cover.scale) inv.radius_bound = false;
      if (b.center <= c.lo) inv.dilated_inside = false;
      if (c.left_open && b.center - tau * b.radius < c.lo) inv.dilated_inside = false;
      if (c.right_open && b.center + tau * b.radius > c.hi) inv.dilated_inside = false;
      if (k + 1 < next && !(b.hi() > balls[k + 1].lo())) inv.covers = false;
    }
    double left_gap = c.left_open ? balls[first].lo() - c.lo
                                  : std::max(0.0, balls[first].lo() - c.lo);
    double right_gap = c.right_open ? c.hi - balls[next - 1].hi()
                                    : std::max(0.0, c.hi - balls[next - 1].hi());
    inv.uncovered_margin = std::max({inv.uncovered_margin, left_gap, right_gap});
  }
  if (next != balls.size()) inv.dilated_inside = false;
  if (inv.uncovered_margin > 8.0 * tau * cover.radius_floor) inv.covers = false;
  inv.overlap = cover.overlap_measured <= cover.overlap_bound;
  for (size_t k = 0; k < balls.size(); ++k) {
    double reach = tau * (balls[k].radius + r_max);
    for (size_t j = k + 1; j < balls.size() && balls[j].center - balls[k].center < reach; ++j) {
      if (balls[j].center - balls[k].center < tau * (balls[j].radius + balls[k].radius)) {
        if (balls[j].radius > 2.0 * balls[k].radius || balls[k].radius > 2.0 * balls[j].radius) {
          inv.neighbour_ratio = false;
        }
      }
    }
  }
  return inv;
}

PartitionOfUnity::PartitionOfUnity(const WhitneyCover& cover)
    : balls_(cover.balls) {
  if (balls_.empty()) throw std::invalid_argument("partition of unity: empty cover");
  for (const auto& b : balls_) {
    breaks_.push_back(b.center - 2.0 * b.radius);
    breaks_.push_back(b.center);
    breaks_.push_back(b.center + 2.0 * b.radius);
  }
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
  active_.resize(breaks_.size());  // one past the last piece stays empty
  for (size_t j = 0; j < balls_.size(); ++j) {
    const Ball& b = balls_[j];
    auto first = std::lower_bound(breaks_.begin(), breaks_.end(), b.center - 2.0 * b.radius);
    auto last = std::lower_bound(breaks_.begin(), breaks_.end(), b.center + 2.0 * b.radius);
    for (auto it = first; it != last; ++it) active_[it - breaks_.begin()].push_back(j);
  }
  lip_.assign(balls_.size(), 0.0);
  for (size_t p = 0; p + 1 < breaks_.size(); ++p) {
    const auto& act = active_[p];
    multiplicity_ = std::max(multiplicity_, static_cast<int>(act.size()));
    if (act.empty()) continue;
    double mid = 0.5 * (breaks_[p] + breaks_[p + 1]);
    std::vector<double> slopes(act.size());
    double dsum = 0.0;
    for (size_t a = 0; a < act.size(); ++a) {
      const Ball& b = balls_[act[a]];
      slopes[a] = (mid < b.center ? 1.0 : -1.0) / (2.0 * b.radius);
      dsum += slopes[a];
    }
    for (double x : {breaks_[p], breaks_[p + 1]}) {
      double s = 0.0;
      std::vector<double> psi(act.size());
      for (size_t a = 0; a < act.size(); ++a) {
        const Ball& b = balls_[act[a]];
        psi[a] = std::max(0.0, 1.0 - std::fabs(x - b.center) / (2.0 * b.radius));
        s += psi[a];
      }
      if (!(s > 1e-300)) continue;
      for (size_t a = 0; a < act.size(); ++a) {
        double d = (slopes[a] * s - psi[a] * dsum) / (s * s);
        lip_[act[a]] = std::max(lip_[act[a]], std::fabs(d));
      }
    }
  }
  for (size_t j = 0; j < balls_.size(); ++j) {
    lip_scale_ = std::max(lip_scale_, lip_[j] * balls_[j].radius);
  }
}

size_t PartitionOfUnity::piece_of(double x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  if (it == breaks_.begin()) return breaks_.size() - 1;
  return static_cast<size_t>(it - breaks_.begin()) - 1;
}

const std::vector<size_t>& PartitionOfUnity::active(double x) const {
  return active_[piece_of(x)];
}

double PartitionOfUnity::tent(size_t j, double x) const {
  const Ball& b = balls_.at(j);
  return std::max(0.0, 1.0 - std::fabs(x - b.center) / (2.0 * b.radius));
}

double PartitionOfUnity::tent_slope(size_t j, double x) const {
  const Ball& b = balls_.at(j);
  if (std::fabs(x - b.center) >= 2.0 * b.radius) return 0.0;
  return (x < b.center ? 1.0 : -1.0) / (2.0 * b.radius);
}

double PartitionOfUnity::sum_tents(double x) const {
  double s = 0.0;
  for (size_t j : active(x)) s += tent(j, x);
  return s;
}

double PartitionOfUnity::phi(size_t j, double x) const {
  double s = sum_tents(x);
  return s > 0.0 ? tent(j, x) / s : 0.0;
}

double PartitionOfUnity::sum_phi(double x) const {
  double s = sum_tents(x);
  if (!(s > 0.0)) return 0.0;
  double total = 0.0;
  for (size_t j : active(x)) total += tent(j, x) / s;
  return total;
}

std::vector<double> ball_averages(const BVRepresentation& u,
                                  const WhitneyCover& cover,
                                  const WeightedIntervalSpace& space) {
  std::vector<double> out;
  out.reserve(cover.balls.size());
  for (const auto& b : cover.balls) {
    double lo = clip_lo(space, b.lo());
    double hi = clip_hi(space, b.hi());
    out.push_back(u.integral(space, lo, hi) / space.mu_d(lo, hi));
  }
  return out;
}

GridFunction discrete_convolution(const BVRepresentation& u,
                                  const WhitneyCover& cover,
                                  const PartitionOfUnity& pou,
                                  const WeightedIntervalSpace& space,
                                  int refine) {
  std::vector<double> avg = ball_averages(u, cover, space);
  std::vector<double> xs(pou.breakpoints());
  for (const auto& b : cover.balls) {
    xs.push_back(b.lo());
    xs.push_back(b.hi());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> pts;
  for (size_t k = 0; k < xs.size(); ++k) {
    pts.push_back(xs[k]);
    if (k + 1 < xs.size()) {
      for (int s = 1; s <= refine; ++s) {
        pts.push_back(xs[k] + (xs[k + 1] - xs[k]) * s / (refine + 1));
      }
    }
  }
  std::vector<Rational> nodes;
  std::vector<double> values;
  for (double x : pts) {
    if (x < space.a_d() || x > space.b_d()) continue;
    double s = pou.sum_tents(x);
    if (!(s > 0.0)) continue;
    if (!nodes.empty() && !(nodes.back() < from_double(x))) continue;
    double v = 0.0;
    for (size_t j : pou.active(x)) v += avg[j] * pou.tent(j, x) / s;
    nodes.push_back(from_double(x));
    values.push_back(v);
  }
  return GridFunction(std::move(nodes), std::move(values));
}

namespace {

// Cells of the union of a family of intervals, with a value per cell equal to
// the sum of coefficients of the intervals containing it.
PiecewiseConstant sum_of_indicators(const std::vector<std::pair<double, double>>& ivs,
                                    const std::vector<double>& coef) {
  std::vector<double> xs;
  for (const auto& [lo, hi] : ivs) {
    xs.push_back(lo);
    xs.push_back(hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> vals(xs.size() > 0 ? xs.size() - 1 : 0, 0.0);
  for (size_t j = 0; j < ivs.size(); ++j) {
    auto first = std::lower_bound(xs.begin(), xs.end(), ivs[j].first) - xs.begin();
    auto last = std::lower_bound(xs.begin(), xs.end(), ivs[j].second) - xs.begin();
    for (auto c = first; c < last; ++c) vals[c] += coef[j];
  }
  PiecewiseConstant pc;
  for (double x : xs) pc.nodes.push_back(from_double(x));
  pc.values = std::move(vals);
  return pc;
}

std::vector<std::pair<double, double>> merge_intervals(
    std::vector<std::pair<double, double>> ivs) {
  std::sort(ivs.begin(), ivs.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && iv.first <= out.back().second) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<double> nodes_of(const PiecewiseConstant& g) {
  std::vector<double> xs;
  xs.reserve(g.nodes.size());
  for (const auto& x : g.nodes) xs.push_back(to_double(x));
  return xs;
}

double pc_integral(const PiecewiseConstant& g, const std::vector<double>& xs,
                   const WeightedIntervalSpace& space, double lo, double hi) {
  if (xs.empty() || hi <= xs.front() || lo >= xs.back()) return 0.0;
  size_t c = std::upper_bound(xs.begin(), xs.end(), lo) - xs.begin();
  c = c == 0 ? 0 : c - 1;
  double total = 0.0;
  for (; c + 1 < xs.size() && xs[c] < hi; ++c) {
    double l = std::max(lo, xs[c]);
    double h = std::min(hi, xs[c + 1]);
    if (h > l && g.values[c] != 0.0) total += g.values[c] * space.mu_d(l, h);
  }
  return total;
}

}  // namespace

WhitneyGradients whitney_upper_gradients(const WhitneyCover& cover,
                                         const PartitionOfUnity& pou,
                                         const VariationMeasure& du,
                                         const WeightedIntervalSpace& space,
                                         double constant) {
  WhitneyGradients out;
  out.constant = constant > 0.0
                     ? constant
                     : 4.0 * pou.multiplicity() * pou.lipschitz_scale() *
                           to_double(space.w_max()) / to_double(space.w_min());
  std::vector<std::pair<double, double>> ivs;
  std::vector<std::pair<double, double>> dilated;
  std::vector<double> ca;
  std::vector<double> cs;
  std::vector<double> ct;
  double sum_singular = 0.0;
  for (const auto& b : cover.balls) {
    double lo = clip_lo(space, b.lo());
    double hi = clip_hi(space, b.hi());
    double tlo = clip_lo(space, b.center - cover.tau * b.radius);
    double thi = clip_hi(space, b.center + cover.tau * b.radius);
    double m = space.mu_d(lo, hi);
    double dens = du.density_integral(space, tlo, thi);
    double atoms = du.atomic_mass(tlo, thi);
    ivs.emplace_back(lo, hi);
    dilated.emplace_back(tlo, thi);
    ca.push_back(out.constant * dens / m);
    cs.push_back(out.constant * atoms / m);
    ct.push_back(out.constant * (dens + atoms) / m);
    sum_singular += atoms;
  }
  out.g = sum_of_indicators(ivs, ct);
  out.g_a = sum_of_indicators(ivs, ca);
  out.g_s = sum_of_indicators(ivs, cs);
  out.integral_g_s = out.constant * sum_singular;
  double singular_union = 0.0;
  for (const auto& [lo, hi] : merge_intervals(dilated)) singular_union += du.atomic_mass(lo, hi);
  out.singular_bound = cover.overlap_bound * out.constant * singular_union;
  out.ok = out.integral_g_s <= out.singular_bound * (1.0 + 1e-12) + 1e-300;
  return out;
}

double gradient_domination_gap(const GridFunction& conv,
                               const PiecewiseConstant& g,
                               const WhitneyCover& cover) {
  std::vector<double> xs = nodes_of(g);
  const auto& nodes = conv.nodes_d();
  const auto& balls = cover.balls;
  double gap = -kInf;
  for (size_t c = 0; c + 1 < nodes.size(); ++c) {
    double mid = 0.5 * (nodes[c] + nodes[c + 1]);
    auto it = std::upper_bound(balls.begin(), balls.end(), mid,
                               [](double x, const Ball& b) { return x < b.center; });
    bool inside = (it != balls.end() && it->lo() < mid) ||
                  (it != balls.begin() && std::prev(it)->hi() > mid);
    if (!inside) continue;
    double gv = 0.0;
    if (!xs.empty() && mid > xs.front() && mid < xs.back()) {
      gv = g.values[std::upper_bound(xs.begin(), xs.end(), mid) - xs.begin() - 1];
    }
    gap = std::max(gap, std::fabs(conv.slope(c)) - gv);
  }
  return gap;
}

namespace {

struct GreedyFill {
  double value = 0.0;
  std::vector<size_t> cells;  // selected cells, the last possibly partial
};

GreedyFill greedy_fill(const PiecewiseConstant& g, const std::vector<double>& xs,
                       const WeightedIntervalSpace& space, double delta) {
  std::vector<size_t> order(g.values.size());
  for (size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return g.values[x] > g.values[y]; });
  GreedyFill fill;
  double left = delta;
  for (size_t c : order) {
    if (left <= 0.0 || g.values[c] <= 0.0) break;
    double m = space.mu_d(xs[c], xs[c + 1]);
    double take = std::min(m, left);
    fill.value += g.values[c] * take;
    fill.cells.push_back(c);
    left -= take;
  }
  return fill;
}

}  // namespace

double adversarial_integral(const PiecewiseConstant& g,
                            const WeightedIntervalSpace& space, double delta) {
  return greedy_fill(g, nodes_of(g), space, delta).value;
}

EquiintegrabilityReport equiintegrability_report(
    const WeightedIntervalSpace& space, const OpenSet& F,
    const VariationMeasure& du, const std::vector<int>& scales,
    const std::vector<double>& deltas, double tau) {
  if (scales.empty()) throw std::invalid_argument("equiintegrability: no scales");
  EquiintegrabilityReport rep;
  rep.deltas = deltas;
  rep.profile.assign(deltas.size(), 0.0);
  const Rational len = space.b() - space.a();
  PiecewiseConstant last_g;
  PiecewiseConstant prev_g;
  double last_reach = 0.0;
  int last_c_o = 0;
  OpenSet last_F;
  for (int i : scales) {
    Rational rho = len / (16 * i);
    std::vector<Interval> keep;
    Rational cursor = space.a();
    std::vector<Rational> xs;
    for (const auto& atom : du.atoms) xs.push_back(atom.x);
    std::sort(xs.begin(), xs.end());
    for (const auto& x : xs) {
      if (x - rho > cursor) keep.push_back({cursor, x - rho});
      cursor = std::max(cursor, Rational(x + rho));
    }
    if (cursor < space.b()) keep.push_back({cursor, space.b()});
    OpenSet Fi = F.intersect(OpenSet(std::move(keep)));
    if (Fi.empty()) throw std::invalid_argument("equiintegrability: F_i is empty");

    WhitneyCover cover = build_cover(space, Fi, i, tau);
    CoverInvariants inv = check_cover(cover, space);
    PartitionOfUnity pou(cover);
    WhitneyGradients grads = whitney_upper_gradients(cover, pou, du, space, 1.0);
    ScaleRow row;
    row.scale = i;
    row.balls = cover.balls.size();
    row.overlap_measured = cover.overlap_measured;
    row.int_g_s = grads.integral_g_s;
    row.singular_bound = grads.singular_bound;
    row.excluded_singular = du.atomic_mass(Fi);
    row.invariants_ok = inv.ok();
    std::vector<double> gx = nodes_of(grads.g_a);
    double r_max = 0.0;
    for (const auto& b : cover.balls) r_max = std::max(r_max, b.radius);
    for (size_t d = 0; d < deltas.size(); ++d) {
      GreedyFill fill = greedy_fill(grads.g_a, gx, space, deltas[d]);
      std::vector<std::pair<double, double>> hit;
      for (size_t c : fill.cells) {
        // Balls meeting the cell have centers within r_max of it.
        auto first = std::lower_bound(cover.balls.begin(), cover.balls.end(), gx[c] - r_max,
                                      [](const Ball& b, double x) { return b.center < x; });
        for (auto jt = first; jt != cover.balls.end() && jt->center <= gx[c + 1] + r_max; ++jt) {
          if (jt->lo() < gx[c + 1] && jt->hi() > gx[c]) {
            hit.emplace_back(clip_lo(space, jt->center - tau * jt->radius),
                             clip_hi(space, jt->center + tau * jt->radius));
          }
        }
      }
      double bound = 0.0;
      for (const auto& [lo, hi] : merge_intervals(hit)) bound += du.density_integral(space, lo, hi);
      bound *= cover.overlap_bound;
      row.adversarial.push_back(fill.value);
      row.adversarial_bound.push_back(bound);
      if (fill.value > bound * (1.0 + 1e-9) + 1e-15) rep.bound_ok = false;
      rep.profile[d] = std::max(rep.profile[d], fill.value);
    }
    rep.rows.push_back(std::move(row));
    prev_g = std::move(last_g);
    last_g = grads.g_a;
    last_reach = (1.0 + tau) * r_max;
    last_c_o = cover.overlap_bound;
    last_F = Fi;
  }
  for (size_t d = 1; d < rep.profile.size(); ++d) {
    if (rep.profile[d] > rep.profile[d - 1] + 1e-15) rep.profile_monotone = false;
  }
  rep.profile_vanishes = rep.profile.empty() || rep.profile.front() == 0.0 ||
                         rep.profile.back() <= 1e-2 * rep.profile.front();

  std::vector<double> lx = nodes_of(last_g);
  std::vector<double> px = nodes_of(prev_g);
  rep.limit_slack = kInf;
  const double a = space.a_d();
  const double b = space.b_d();
  for (int depth = 0; depth <= 10; ++depth) {
    int cells = 1 << depth;
    for (int q = 0; q < cells; ++q) {
      double lo = a + (b - a) * q / cells;
      double hi = a + (b - a) * (q + 1) / cells;
      double cand = pc_integral(last_g, lx, space, lo, hi);
      double bound = last_c_o * du.density_integral(space, std::max(a, lo - last_reach),
                                                    std::min(b, hi + last_reach));
      rep.limit_slack = std::min(rep.limit_slack, bound - cand);
      if (!prev_g.values.empty()) {
        rep.weak_l1_cauchy = std::max(
            rep.weak_l1_cauchy, std::fabs(cand - pc_integral(prev_g, px, space, lo, hi)));
      }
    }
  }
  rep.limit_ok = rep.limit_slack >= -1e-6;
  return rep;
}

NewtonianReport newtonian_check(const BVRepresentation& u,
                                const WeightedIntervalSpace& space,
                                const OpenSet& F) {
  for (const auto& j : u.jumps()) {
    if (F.contains(j.x)) throw std::invalid_argument("newtonian check: atoms in F");
  }
  NewtonianReport rep;
  VariationMeasure du = variation_measure_of(u, space);
  rep.variation = du.density_integral(space, F);
  if (const auto* g = u.grid()) {
    const auto& nodes = g->nodes();
    for (const auto& comp : F.components()) {
      for (size_t c = 0; c + 1 < nodes.size(); ++c) {
        Rational lo = std::max(nodes[c], comp.lo);
        Rational hi = std::min(nodes[c + 1], comp.hi);
        if (!(lo < hi)) continue;
        double s = std::fabs(g->slope(c));
        if (s == 0.0) {
          ++rep.skipped_cells;
          continue;
        }
        // g_u = |u'| = a on this cell.
        rep.c_empirical = std::max(rep.c_empirical, 1.0);
        rep.integral_g += s * to_double(space.mu(lo, hi));
      }
    }
  } else {
    const auto& cf = std::get<CantorFunction>(u.ac());
    const double dx_density = std::get<CantorDensity>(du.density).dx_density;
    for (const auto& comp : F.components()) {
      for (const auto& p : space.pieces()) {
        Rational lo = std::max(p.lo, comp.lo);
        Rational hi = std::min(p.hi, comp.hi);
        if (!(lo < hi)) continue;
        double len = cantor_set_length(to_double(lo), to_double(hi), 60);
        double w = to_double(p.w);
        if (len <= 0.0) {
          ++rep.skipped_cells;
          continue;
        }
        rep.c_empirical = std::max(rep.c_empirical, std::fabs(cf.scale()) * w / dx_density);
        rep.integral_g += std::fabs(cf.scale()) * w * len;
      }
    }
  }
  rep.ok = rep.integral_g <= rep.c_empirical * rep.variation * (1.0 + 1e-12) + 1e-15;
  return rep;
}

}  // namespace bvrelax
