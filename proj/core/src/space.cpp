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
#include "bvrelax/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bvrelax {

OpenSet::OpenSet(std::vector<Interval> components)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (size_t k = 0; k < components_.size(); ++k) {
    if (!(components_[k].lo < components_[k].hi)) {
      throw std::invalid_argument("open set: empty component");
    }
    if (k > 0 && components_[k].lo < components_[k - 1].hi) {
      throw std::invalid_argument("open set: components overlap");
    }
  }
}

OpenSet OpenSet::interval(Rational lo, Rational hi) {
  return OpenSet({Interval{std::move(lo), std::move(hi)}});
}

bool OpenSet::contains(const Rational& x) const {
  for (const auto& c : components_) {
    if (c.contains(x)) return true;
  }
  return false;
}

bool OpenSet::contains(double x) const {
  for (const auto& c : components_) {
    if (to_double(c.lo) < x && x < to_double(c.hi)) return true;
  }
  return false;
}

std::vector<Rational> OpenSet::boundary() const {
  std::vector<Rational> out;
  for (const auto& c : components_) {
    if (out.empty() || out.back() != c.lo) out.push_back(c.lo);
    out.push_back(c.hi);
  }
  return out;
}

OpenSet OpenSet::unite(const OpenSet& other) const {
  std::vector<Interval> all = components_;
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  std::sort(all.begin(), all.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> merged;
  for (auto& c : all) {
    if (!merged.empty() && c.lo < merged.back().hi) {
      if (merged.back().hi < c.hi) merged.back().hi = c.hi;
    } else {
      merged.push_back(c);
    }
  }
  return OpenSet(std::move(merged));
}

OpenSet OpenSet::intersect(const OpenSet& other) const {
  std::vector<Interval> out;
  for (const auto& c : components_) {
    for (const auto& d : other.components_) {
      Rational lo = std::max(c.lo, d.lo);
      Rational hi = std::min(c.hi, d.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  }
  return OpenSet(std::move(out));
}

bool OpenSet::subset_of(const OpenSet& other) const {
  for (const auto& c : components_) {
    bool inside = false;
    for (const auto& d : other.components_) {
      if (d.lo <= c.lo && c.hi <= d.hi) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

bool OpenSet::compactly_inside(const OpenSet& other) const {
  for (const auto& c : components_) {
    bool inside = false;
    for (const auto& d : other.components_) {
      if (d.lo < c.lo && c.hi < d.hi) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

WeightedIntervalSpace::WeightedIntervalSpace(Rational a, Rational b,
                                             std::vector<WeightPiece> pieces)
    : a_(std::move(a)), b_(std::move(b)), pieces_(std::move(pieces)) {
  if (!(a_ < b_)) throw std::invalid_argument("space: need a < b");
  if (pieces_.empty()) throw std::invalid_argument("space: no weight pieces");
  std::sort(pieces_.begin(), pieces_.end(),
            [](const WeightPiece& x, const WeightPiece& y) { return x.lo < y.lo; });
  if (pieces_.front().lo != a_ || pieces_.back().hi != b_) {
    throw std::invalid_argument("space: pieces must cover [a,b]");
  }
  for (size_t k = 0; k < pieces_.size(); ++k) {
    const auto& p = pieces_[k];
    if (!(p.lo < p.hi)) throw std::invalid_argument("space: empty weight piece");
    if (k > 0 && p.lo != pieces_[k - 1].hi) {
      throw std::invalid_argument("space: weight pieces must be contiguous");
    }
    if (!(p.w > 0)) throw std::invalid_argument("space: weights must be > 0");
  }
  w_min_ = pieces_.front().w;
  w_max_ = pieces_.front().w;
  for (const auto& p : pieces_) {
    w_min_ = std::min(w_min_, p.w);
    w_max_ = std::max(w_max_, p.w);
  }
  a_d_ = to_double(a_);
  b_d_ = to_double(b_);
  for (const auto& p : pieces_) {
    lo_d_.push_back(to_double(p.lo));
    w_d_.push_back(to_double(p.w));
  }
}

WeightedIntervalSpace WeightedIntervalSpace::uniform(Rational a, Rational b,
                                                     Rational w) {
  WeightPiece p{a, b, std::move(w)};
  return WeightedIntervalSpace(std::move(a), std::move(b), {std::move(p)});
}

std::vector<Rational> WeightedIntervalSpace::breaks() const {
  std::vector<Rational> out;
  for (size_t k = 1; k < pieces_.size(); ++k) {
    if (pieces_[k].w != pieces_[k - 1].w) out.push_back(pieces_[k].lo);
  }
  return out;
}

std::vector<Rational> WeightedIntervalSpace::breaks_in(const Rational& lo,
                                                       const Rational& hi) const {
  std::vector<Rational> out;
  for (size_t k = 1; k < pieces_.size(); ++k) {
    const Rational& x = pieces_[k].lo;
    if (lo < x && x < hi) out.push_back(x);
  }
  return out;
}

size_t WeightedIntervalSpace::piece_index(const Rational& x) const {
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), x,
      [](const Rational& v, const WeightPiece& p) { return v < p.lo; });
  if (it == pieces_.begin()) return 0;
  size_t k = static_cast<size_t>(it - pieces_.begin()) - 1;
  return std::min(k, pieces_.size() - 1);
}

Rational WeightedIntervalSpace::mu(const Rational& lo, const Rational& hi) const {
  Rational l = std::max(lo, a_);
  Rational h = std::min(hi, b_);
  Rational total = 0;
  if (!(l < h)) return total;
  for (size_t k = piece_index(l); k < pieces_.size(); ++k) {
    const auto& p = pieces_[k];
    if (!(p.lo < h)) break;
    Rational s = std::max(p.lo, l);
    Rational e = std::min(p.hi, h);
    if (s < e) total += p.w * (e - s);
  }
  return total;
}

Rational WeightedIntervalSpace::mu(const OpenSet& set) const {
  Rational total = 0;
  for (const auto& c : set.components()) {
    if (c.lo < a_ || c.hi > b_) {
      throw std::invalid_argument("space: set outside domain");
    }
    total += mu(c.lo, c.hi);
  }
  return total;
}

double WeightedIntervalSpace::mu_d(double lo, double hi) const {
  double l = std::max(lo, a_d_);
  double h = std::min(hi, b_d_);
  if (!(l < h)) return 0.0;
  auto it = std::upper_bound(lo_d_.begin(), lo_d_.end(), l);
  size_t k = it == lo_d_.begin() ? 0 : static_cast<size_t>(it - lo_d_.begin()) - 1;
  double total = 0.0;
  for (; k < lo_d_.size(); ++k) {
    double p_lo = lo_d_[k];
    double p_hi = k + 1 < lo_d_.size() ? lo_d_[k + 1] : b_d_;
    if (p_lo >= h) break;
    double s = std::max(p_lo, l);
    double e = std::min(p_hi, h);
    if (s < e) total += w_d_[k] * (e - s);
  }
  return total;
}

const Rational& WeightedIntervalSpace::weight_left(const Rational& x) const {
  if (!(a_ < x && x <= b_)) {
    throw std::invalid_argument("space: no left weight at " + to_string(x));
  }
  size_t k = piece_index(x);
  if (pieces_[k].lo == x) --k;
  return pieces_[k].w;
}

const Rational& WeightedIntervalSpace::weight_right(const Rational& x) const {
  if (!(a_ <= x && x < b_)) {
    throw std::invalid_argument("space: no right weight at " + to_string(x));
  }
  return pieces_[piece_index(x)].w;
}

const Rational& WeightedIntervalSpace::weight_at(const Rational& x) const {
  return pieces_[piece_index(x)].w;
}

double WeightedIntervalSpace::weight_at(double x) const {
  auto it = std::upper_bound(lo_d_.begin(), lo_d_.end(), x);
  size_t k = it == lo_d_.begin() ? 0 : static_cast<size_t>(it - lo_d_.begin()) - 1;
  return w_d_[k];
}

Rational WeightedIntervalSpace::point_hausdorff(const Rational& x) const {
  if (x < a_ || x > b_) throw std::invalid_argument("space: point outside domain");
  Rational h = 0;
  if (a_ < x) h += weight_left(x);
  if (x < b_) h += weight_right(x);
  return h;
}

Rational WeightedIntervalSpace::jump_cost_density(const Rational& x) const {
  if (!(a_ < x && x < b_)) {
    throw std::invalid_argument("space: jump cost needs an interior point");
  }
  return std::min(weight_left(x), weight_right(x));
}

double WeightedIntervalSpace::doubling_bound() const {
  return 2.0 * to_double(w_max_ / w_min_);
}

double WeightedIntervalSpace::poincare_bound() const {
  return to_double(w_max_ / w_min_);
}

double WeightedIntervalSpace::dimension_constant() const {
  return to_double(w_min_ / (2 * w_max_));
}

namespace {

// Integral over [p,q] of |alpha + beta x - c|, split at the zero crossing.
double abs_affine_integral(double alpha, double beta, double p, double q) {
  auto val = [&](double x) { return alpha + beta * x; };
  double vp = val(p);
  double vq = val(q);
  if ((vp >= 0 && vq >= 0) || (vp <= 0 && vq <= 0)) {
    return 0.5 * std::fabs(vp + vq) * (q - p);
  }
  double z = -alpha / beta;
  return 0.5 * std::fabs(vp) * (z - p) + 0.5 * std::fabs(vq) * (q - z);
}

}  // namespace

DoublingReport doubling_check(const WeightedIntervalSpace& space, int samples,
                              std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("doubling check: samples <= 0");
  DoublingReport rep;
  rep.samples = samples;
  rep.c_d_bound = space.doubling_bound();
  rep.c_p_bound = space.poincare_bound();
  rep.dimension_c_bound = space.dimension_constant();
  rep.dimension_c_empirical = 1.0;

  std::mt19937_64 rng(seed);
  const double a = space.a_d();
  const double b = space.b_d();
  const double len = b - a;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_radius = [&] { return len * std::pow(10.0, -4.0 * unit(rng)); };

  std::vector<double> breaks;
  for (const auto& x : space.breaks()) breaks.push_back(to_double(x));

  for (int s = 0; s < samples; ++s) {
    double x = a + len * unit(rng);
    double r = log_radius();
    double m1 = space.mu_d(x - r, x + r);
    double m2 = space.mu_d(x - 2 * r, x + 2 * r);
    rep.c_d_empirical = std::max(rep.c_d_empirical, m2 / m1);

    double big_r = log_radius();
    double small_r = big_r * unit(rng);
    if (small_r > 0.0) {
      double lo = std::max(a, x - big_r);
      double hi = std::min(b, x + big_r);
      double y = lo + (hi - lo) * unit(rng);
      double ratio = space.mu_d(y - small_r, y + small_r) /
                     space.mu_d(x - big_r, x + big_r) / (small_r / big_r);
      rep.dimension_c_empirical = std::min(rep.dimension_c_empirical, ratio);
    }

    // Random piecewise-linear test function on the ball.
    double lo = std::max(a, x - r);
    double hi = std::min(b, x + r);
    std::vector<double> nodes{lo, hi};
    int extra = 1 + static_cast<int>(unit(rng) * 6);
    for (int k = 0; k < extra; ++k) nodes.push_back(lo + (hi - lo) * unit(rng));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<double> values(nodes.size());
    for (auto& v : values) v = 2.0 * unit(rng) - 1.0;

    std::vector<double> cuts = nodes;
    for (double br : breaks) {
      if (br > lo && br < hi) cuts.push_back(br);
    }
    std::sort(cuts.begin(), cuts.end());
    auto eval = [&](double t) {
      auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
      size_t k = std::clamp<size_t>(static_cast<size_t>(it - nodes.begin()), 1,
                                    nodes.size() - 1);
      double th = (t - nodes[k - 1]) / (nodes[k] - nodes[k - 1]);
      return values[k - 1] + th * (values[k] - values[k - 1]);
    };
    double mass = 0.0;
    double first = 0.0;
    double grad = 0.0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      double p = cuts[k];
      double q = cuts[k + 1];
      if (q <= p) continue;
      double w = space.weight_at(0.5 * (p + q));
      mass += w * (q - p);
      first += w * 0.5 * (eval(p) + eval(q)) * (q - p);
      grad += w * std::fabs(eval(q) - eval(p));
    }
    if (grad <= 0.0) continue;
    double mean = first / mass;
    double dev = 0.0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      double p = cuts[k];
      double q = cuts[k + 1];
      if (q <= p) continue;
      double w = space.weight_at(0.5 * (p + q));
      double beta = (eval(q) - eval(p)) / (q - p);
      double alpha = eval(p) - beta * p - mean;
      dev += w * abs_affine_integral(alpha, beta, p, q);
    }
    rep.c_p_empirical = std::max(rep.c_p_empirical, dev / (r * grad));
  }
  return rep;
}

}  // namespace bvrelax
