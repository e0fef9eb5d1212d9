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


#ifndef BVRELAX_CHAIN_HPP_
#define BVRELAX_CHAIN_HPP_

#include <optional>
#include <vector>

#include "bvrelax/integrand.hpp"
#include "bvrelax/simplex.hpp"

namespace bvrelax {

// One cell of a chain of nodes. A regular cell of length h and weight w costs
// w h f(|d|/h) for an increment d; a jump cell has zero length and costs
// jump_cost |d|.
struct ChainCell {
  double length = 0.0;
  double weight = 0.0;
  double jump_cost = -1.0;

  static ChainCell regular(double length, double weight) {
    return {length, weight, -1.0};
  }
  static ChainCell jump(double cost) { return {0.0, 0.0, cost}; }
  bool is_jump() const { return jump_cost >= 0.0; }
};

// Nodes 0..N joined by N cells; anchored nodes carry fixed values.
struct ChainProblem {
  std::vector<ChainCell> cells;
  std::vector<std::optional<double>> anchors;  // size cells + 1
};

struct ChainSolution {
  std::vector<double> values;  // per node
  double cost = 0.0;
  LpStatus status = LpStatus::kOptimal;
  int iterations = 0;
};

// Objective of the chain at the given node values.
double chain_cost(const ChainProblem& problem, const Integrand& f,
                  const std::vector<double>& values);

// Exact minimizer. Between consecutive anchors the problem is a separable
// convex allocation of the required rise over cell slope segments, filled in
// order of marginal cost. Equal marginals share the rise in proportion to cell
// length, so linear data stays linear; jump cells, having no length, split
// their share equally. Nodes outside the outermost anchors copy the nearest
// anchor value.
ChainSolution solve_chain(const ChainProblem& problem, const Integrand& f);

// The same problem as an epigraph linear program over the support lines of f,
// solved by the dense simplex. Independent of solve_chain; small sizes only.
ChainSolution solve_chain_lp(const ChainProblem& problem, const Integrand& f);

}  // namespace bvrelax

#endif  // BVRELAX_CHAIN_HPP_
