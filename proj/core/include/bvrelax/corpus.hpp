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


#ifndef BVRELAX_CORPUS_HPP_
#define BVRELAX_CORPUS_HPP_

#include <random>
#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

// Random instances for property tests and acceptance corpora. All points are
// dyadic rationals with denominator 2^bits so that grids stay exact.
using Rng = std::mt19937_64;

// Uniform on the dyadics strictly inside (lo, hi).
Rational random_dyadic(Rng& rng, const Rational& lo, const Rational& hi,
                       int bits = 10);

// [0,1] with 1..max_pieces pieces and weights k/4, k in 1..16.
WeightedIntervalSpace random_space(Rng& rng, int max_pieces = 5);

// Nodes: lo, hi, must_include and `extra` random points; values in [-1,1].
GridFunction random_grid_function(Rng& rng, const Rational& lo,
                                  const Rational& hi, int extra,
                                  const std::vector<Rational>& must_include = {});

// Grid part refining the weight breaks of the space plus `jumps` jumps with
// heights of magnitude in [0.1, 1].
BVRepresentation random_bv(Rng& rng, const WeightedIntervalSpace& space,
                           int extra_nodes, int jumps);

// Convex nondecreasing, 0..3 breakpoints, f0 in [0, 1/2].
Integrand random_integrand(Rng& rng);

// 1..max_components components inside (lo, hi), separated by gaps.
OpenSet random_open_set(Rng& rng, const Rational& lo, const Rational& hi,
                        int max_components);

}  // namespace bvrelax

#endif  // BVRELAX_CORPUS_HPP_
