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


#ifndef BVRELAX_CANTOR_REPORT_HPP_
#define BVRELAX_CANTOR_REPORT_HPP_

#include <string>
#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/cantor.hpp"
#include "bvrelax/relax.hpp"

namespace bvrelax {

// The level-m objects of the fat Cantor example. g = 2 chi_{A_m} and
// g_i = chi_{B_i} / (alpha_{i-1} - alpha_i); u_i is the integral of g_i.
struct CantorExample {
  int m = 0;
  CantorLevel level;
  WeightedIntervalSpace space;
  CantorFunction u;
  PiecewiseConstant g;
  std::vector<PiecewiseConstant> g_i;  // index i - 1
  std::vector<GridFunction> u_i;       // index i - 1
};

// depth <= 0 selects m + 20.
CantorExample example_functions(int m, int depth = 0);

// Integral of a piecewise-constant function against mu, exact.
Rational exact_integral(const PiecewiseConstant& g,
                        const WeightedIntervalSpace& space);

struct ReportRow {
  std::string quantity;
  std::string kind;  // "exact", "estimate" or "reported"
  double value = 0.0;
  std::string exact;  // rational form for exact rows
  std::string target;
  double tolerance = 0.0;
  bool checked = true;  // reported rows carry no pass/fail
  bool pass = true;
};

struct CantorReport {
  int m = 0;
  std::vector<ReportRow> rows;
  ExtrapolationReport tv;
  ExtrapolationReport kinked;
  bool pass = false;
};

CantorReport counterexample_report(int m, const Schedule& schedule,
                                   const RelaxOptions& options = {});

// quantity,exact_or_estimate,target,tolerance,pass
std::string to_csv(const CantorReport& report);

}  // namespace bvrelax

#endif  // BVRELAX_CANTOR_REPORT_HPP_
