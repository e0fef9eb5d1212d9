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


#include "bvrelax/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvrelax {
namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return t_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return t_[r * (cols_ + 1) + c]; }
  // Column cols_ is the right-hand side; row rows_ is the reduced cost row.
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }

  void pivot(int pr, int pc) {
    double p = at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pr, c);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> t_;
};

// Bland's rule restricted to columns below allowed_cols.
LpStatus run_phase(Tableau& t, std::vector<int>& basis, int allowed_cols,
                   double tol, int max_iterations, int& iterations) {
  while (iterations < max_iterations) {
    int enter = -1;
    for (int c = 0; c < allowed_cols; ++c) {
      if (t.cost(c) < -tol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return LpStatus::kOptimal;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      double coef = t.at(r, enter);
      if (coef > tol) {
        double ratio = t.rhs(r) / coef;
        if (ratio < best - tol ||
            (std::fabs(ratio - best) <= tol && leave >= 0 && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) return LpStatus::kUnbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++iterations;
  }
  return LpStatus::kIterationLimit;
}

}  // namespace

LpResult solve_standard_lp(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c, double tol,
                           int max_iterations) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: size mismatch");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("lp: ragged matrix");
  }

  // Columns: n structural, then m artificials.
  Tableau t(m, n + m);
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    double sign = b[r] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(r, j) = sign * a[r][j];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * b[r];
    basis[r] = n + r;
  }
  // Phase one minimizes the artificial sum, priced out against the basis.
  for (int j = 0; j <= n + m; ++j) t.cost(j) = 0.0;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.cost(j) -= t.at(r, j);
    t.at(m, n + m) -= t.rhs(r);
  }

  LpResult result;
  LpStatus st = run_phase(t, basis, n + m, tol, max_iterations, result.iterations);
  if (st == LpStatus::kIterationLimit) {
    result.status = st;
    return result;
  }
  if (-t.at(m, n + m) > 1e-7 * (1.0 + m)) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  // Drive remaining artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::fabs(t.at(r, j)) > tol) {
        t.pivot(r, j);
        basis[r] = j;
        break;
      }
    }
  }

  // Phase two: artificial columns are barred from entering.
  for (int j = 0; j <= n + m; ++j) t.cost(j) = 0.0;
  for (int j = 0; j < n; ++j) t.cost(j) = c[j];
  for (int r = 0; r < m; ++r) {
    int bj = basis[r];
    double cb = bj < n ? c[bj] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j <= n + m; ++j) t.at(m, j) -= cb * t.at(r, j);
  }
  st = run_phase(t, basis, n, tol, max_iterations, result.iterations);
  result.status = st;
  if (st != LpStatus::kOptimal) return result;
  result.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) result.x[basis[r]] = t.rhs(r);
  }
  result.objective = 0.0;
  for (int j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace bvrelax
