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


#include "bvrelax/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvrelax {
namespace {

using boost::multiprecision::cpp_int;

}  // namespace

Rational random_dyadic(Rng& rng, const Rational& lo, const Rational& hi, int bits) {
  // k / 2^bits strictly between lo and hi.
  Rational scale = Rational(cpp_int(1) << bits);
  Rational klo = lo * scale;
  Rational khi = hi * scale;
  cpp_int first = numerator(klo) / denominator(klo) + 1;
  cpp_int last = numerator(khi) / denominator(khi);
  if (Rational(last) == khi) last -= 1;
  if (first > last) throw std::invalid_argument("random_dyadic: interval too short");
  long long span = static_cast<long long>(last - first);
  std::uniform_int_distribution<long long> pick(0, span);
  return Rational(first + pick(rng)) / scale;
}

WeightedIntervalSpace random_space(Rng& rng, int max_pieces) {
  std::uniform_int_distribution<int> count(1, max_pieces);
  std::uniform_int_distribution<int> weight(1, 16);
  int pieces = count(rng);
  std::vector<Rational> cuts{0, 1};
  while (static_cast<int>(cuts.size()) < pieces + 1) {
    Rational x = random_dyadic(rng, 0, 1, 6);
    if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<WeightPiece> ps;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    ps.push_back({cuts[k], cuts[k + 1], Rational(weight(rng), 4)});
  }
  return WeightedIntervalSpace(0, 1, std::move(ps));
}

GridFunction random_grid_function(Rng& rng, const Rational& lo, const Rational& hi,
                                  int extra, const std::vector<Rational>& must_include) {
  std::vector<Rational> nodes{lo, hi};
  for (const auto& x : must_include) {
    if (lo < x && x < hi) nodes.push_back(x);
  }
  for (int k = 0; k < extra; ++k) nodes.push_back(random_dyadic(rng, lo, hi));
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values;
  for (size_t k = 0; k < nodes.size(); ++k) values.push_back(value(rng));
  return GridFunction(std::move(nodes), std::move(values));
}

BVRepresentation random_bv(Rng& rng, const WeightedIntervalSpace& space,
                           int extra_nodes, int jumps) {
  GridFunction ac = random_grid_function(rng, space.a(), space.b(), extra_nodes, space.breaks());
  std::vector<Jump> js;
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::bernoulli_distribution sign(0.5);
  while (static_cast<int>(js.size()) < jumps) {
    Rational x = random_dyadic(rng, space.a(), space.b(), 8);
    bool dup = false;
    for (const auto& j : js) dup = dup || j.x == x;
    if (dup) continue;
    js.push_back({x, (sign(rng) ? 1.0 : -1.0) * mag(rng)});
  }
  return BVRepresentation(std::move(ac), std::move(js), "random");
}

Integrand random_integrand(Rng& rng) {
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int k = count(rng);
  std::vector<double> breaks;
  double x = 0.0;
  for (int i = 0; i < k; ++i) {
    x += 0.25 + 1.5 * unit(rng);
    breaks.push_back(x);
  }
  std::vector<double> slopes;
  double s = 0.25 + unit(rng);
  for (int i = 0; i <= k; ++i) {
    slopes.push_back(s);
    s += 0.25 + unit(rng);
  }
  return Integrand::make(0.5 * unit(rng), breaks, slopes);
}

OpenSet random_open_set(Rng& rng, const Rational& lo, const Rational& hi,
                        int max_components) {
  std::uniform_int_distribution<int> count(1, max_components);
  int c = count(rng);
  std::vector<Rational> pts;
  while (static_cast<int>(pts.size()) < 2 * c) {
    Rational x = random_dyadic(rng, lo, hi, 8);
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Interval> comps;
  for (int k = 0; k < c; ++k) comps.push_back({pts[2 * k], pts[2 * k + 1]});
  return OpenSet(std::move(comps));
}

}  // namespace bvrelax
