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


#ifndef BVRELAX_SIMPLEX_HPP_
#define BVRELAX_SIMPLEX_HPP_

#include <vector>

namespace bvrelax {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

// Dense two-phase tableau simplex with Bland's rule for
//   min c.x  subject to  A x = b,  x >= 0.
// Meant for small certification problems; rows of A are dense.
LpResult solve_standard_lp(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c, double tol = 1e-10,
                           int max_iterations = 200000);

}  // namespace bvrelax

#endif  // BVRELAX_SIMPLEX_HPP_
