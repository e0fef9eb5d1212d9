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


#include "bvrelax/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvrelax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const ChainProblem& p) {
  if (p.anchors.size() != p.cells.size() + 1) {
    throw std::invalid_argument("chain: need one anchor slot per node");
  }
  for (const auto& c : p.cells) {
    if (c.is_jump()) continue;
    if (!(c.length > 0.0) || !(c.weight > 0.0)) {
      throw std::invalid_argument("chain: regular cells need positive length and weight");
    }
  }
}

double base_cost(const ChainCell& c, const Integrand& f) {
  return c.is_jump() ? 0.0 : c.weight * c.length * f.f0();
}

struct Segment {
  double marginal;
  double capacity;
  double length;  // proportional-share key; zero for jump cells
  size_t cell;
};

// Distributes `amount` over one group of equal-marginal segments.
void fill_group(std::vector<Segment>::iterator first,
                std::vector<Segment>::iterator last, double& amount,
                std::vector<double>& alloc) {
  double finite_cap = 0.0;
  bool unbounded = false;
  bool any_length = false;
  for (auto it = first; it != last; ++it) {
    if (it->length > 0.0) any_length = true;
    if (std::isinf(it->capacity)) {
      unbounded = true;
    } else {
      finite_cap += it->capacity;
    }
  }
  if (!unbounded && finite_cap <= amount) {
    for (auto it = first; it != last; ++it) alloc[it->cell] += it->capacity;
    amount -= finite_cap;
    return;
  }
  if (!any_length) {
    // Only jump cells tie here; they share equally.
    double share = amount / static_cast<double>(last - first);
    for (auto it = first; it != last; ++it) alloc[it->cell] += share;
    amount = 0.0;
    return;
  }
  // Water filling: segment s receives min(capacity_s, lambda length_s).
  std::vector<Segment> group;
  for (auto it = first; it != last; ++it) {
    if (it->length > 0.0) group.push_back(*it);
  }
  std::sort(group.begin(), group.end(), [](const Segment& a, const Segment& b) {
    return a.capacity / a.length < b.capacity / b.length;
  });
  double remaining = amount;
  double open_length = 0.0;
  for (const auto& s : group) open_length += s.length;
  size_t k = 0;
  while (k < group.size()) {
    double lambda = remaining / open_length;
    const Segment& s = group[k];
    if (s.capacity < lambda * s.length) {
      alloc[s.cell] += s.capacity;
      remaining -= s.capacity;
      open_length -= s.length;
      ++k;
      continue;
    }
    for (size_t j = k; j < group.size(); ++j) {
      alloc[group[j].cell] += lambda * group[j].length;
    }
    remaining = 0.0;
    break;
  }
  if (remaining > 0.0) {
    // Regular segments saturated; the unbounded jump cells share the rest.
    size_t jumps = 0;
    for (auto it = first; it != last; ++it) jumps += it->length == 0.0 ? 1 : 0;
    for (auto it = first; it != last; ++it) {
      if (it->length == 0.0) alloc[it->cell] += remaining / static_cast<double>(jumps);
    }
  }
  amount = 0.0;
}

}  // namespace

double chain_cost(const ChainProblem& problem, const Integrand& f,
                  const std::vector<double>& values) {
  validate(problem);
  double total = 0.0;
  for (size_t c = 0; c < problem.cells.size(); ++c) {
    const auto& cell = problem.cells[c];
    double d = std::fabs(values[c + 1] - values[c]);
    if (cell.is_jump()) {
      total += cell.jump_cost * d;
    } else {
      total += cell.weight * cell.length * f(d / cell.length);
    }
  }
  return total;
}

ChainSolution solve_chain(const ChainProblem& problem, const Integrand& f) {
  validate(problem);
  const size_t nodes = problem.anchors.size();
  ChainSolution sol;
  sol.values.assign(nodes, 0.0);
  for (const auto& c : problem.cells) sol.cost += base_cost(c, f);

  std::vector<size_t> anchored;
  for (size_t i = 0; i < nodes; ++i) {
    if (problem.anchors[i]) anchored.push_back(i);
  }
  if (anchored.empty()) return sol;

  const auto& slopes = f.slopes();
  const auto& breaks = f.breakpoints();
  std::vector<double> alloc(problem.cells.size(), 0.0);
  std::vector<Segment> segs;
  for (size_t k = 0; k + 1 < anchored.size(); ++k) {
    size_t i = anchored[k];
    size_t j = anchored[k + 1];
    double rise = *problem.anchors[j] - *problem.anchors[i];
    if (rise == 0.0) continue;
    segs.clear();
    for (size_t c = i; c < j; ++c) {
      const auto& cell = problem.cells[c];
      if (cell.is_jump()) {
        segs.push_back({cell.jump_cost, kInf, 0.0, c});
        continue;
      }
      double prev = 0.0;
      for (size_t s = 0; s < slopes.size(); ++s) {
        double cap = s < breaks.size() ? cell.length * (breaks[s] - prev) : kInf;
        segs.push_back({cell.weight * slopes[s], cap, cell.length, c});
        if (s < breaks.size()) prev = breaks[s];
      }
    }
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
      if (a.marginal != b.marginal) return a.marginal < b.marginal;
      return a.cell < b.cell;
    });
    double amount = std::fabs(rise);
    auto it = segs.begin();
    while (amount > 0.0 && it != segs.end()) {
      auto group_end = it;
      double m0 = it->marginal;
      while (group_end != segs.end() &&
             group_end->marginal <= m0 * (1.0 + 1e-13) + 1e-300) {
        ++group_end;
      }
      double before = amount;
      fill_group(it, group_end, amount, alloc);
      sol.cost += m0 * (before - amount);
      it = group_end;
    }
    double sign = rise > 0.0 ? 1.0 : -1.0;
    double v = *problem.anchors[i];
    for (size_t c = i; c < j; ++c) {
      sol.values[c] = v;
      v += sign * alloc[c];
    }
    sol.values[j] = *problem.anchors[j];
  }
  // Flat blocks and free ends.
  for (size_t k = 0; k + 1 < anchored.size(); ++k) {
    size_t i = anchored[k];
    size_t j = anchored[k + 1];
    if (*problem.anchors[j] == *problem.anchors[i]) {
      for (size_t c = i; c <= j; ++c) sol.values[c] = *problem.anchors[i];
    }
  }
  for (size_t i = 0; i < anchored.front(); ++i) sol.values[i] = *problem.anchors[anchored.front()];
  for (size_t i = anchored.back(); i < nodes; ++i) sol.values[i] = *problem.anchors[anchored.back()];
  return sol;
}

ChainSolution solve_chain_lp(const ChainProblem& problem, const Integrand& f) {
  validate(problem);
  const size_t nodes = problem.anchors.size();
  std::vector<size_t> anchored;
  for (size_t i = 0; i < nodes; ++i) {
    if (problem.anchors[i]) anchored.push_back(i);
  }
  ChainSolution sol;
  sol.values.assign(nodes, anchored.empty() ? 0.0 : *problem.anchors[anchored.front()]);
  double constant = 0.0;
  for (const auto& c : problem.cells) {
    if (!c.is_jump()) constant += c.weight * c.length * f.f0();
  }
  if (anchored.size() < 2) {
    sol.cost = constant;
    if (!anchored.empty()) {
      for (auto& v : sol.values) v = *problem.anchors[anchored.front()];
    }
    return sol;
  }
  const auto lines = f.support_lines();
  // Variables per active cell: p, q (increment = p - q), and t for regular
  // cells. Cells outside the anchored span carry no increment.
  size_t first = anchored.front();
  size_t last = anchored.back();
  std::vector<int> p_idx(problem.cells.size(), -1);
  std::vector<int> t_idx(problem.cells.size(), -1);
  int nvar = 0;
  for (size_t c = first; c < last; ++c) {
    p_idx[c] = nvar;
    nvar += 2;
    if (!problem.cells[c].is_jump()) t_idx[c] = nvar++;
  }
  int line_rows = 0;
  for (size_t c = first; c < last; ++c) {
    if (!problem.cells[c].is_jump()) line_rows += static_cast<int>(lines.size());
  }
  const int slack0 = nvar;
  nvar += line_rows;
  const int rows = line_rows + static_cast<int>(anchored.size()) - 1;

  std::vector<std::vector<double>> a(rows, std::vector<double>(nvar, 0.0));
  std::vector<double> b(rows, 0.0);
  std::vector<double> cost(nvar, 0.0);
  int r = 0;
  int slack = slack0;
  for (size_t c = first; c < last; ++c) {
    const auto& cell = problem.cells[c];
    if (cell.is_jump()) {
      cost[p_idx[c]] = cell.jump_cost;
      cost[p_idx[c] + 1] = cell.jump_cost;
      continue;
    }
    cost[t_idx[c]] = 1.0;
    for (const auto& ln : lines) {
      // t - w d (p + q) - s = w h e, f(|x|) = max(d |x| + e) with d >= 0.
      a[r][t_idx[c]] = 1.0;
      a[r][p_idx[c]] = -cell.weight * ln.slope;
      a[r][p_idx[c] + 1] = -cell.weight * ln.slope;
      a[r][slack++] = -1.0;
      b[r] = cell.weight * cell.length * ln.intercept;
      ++r;
    }
  }
  for (size_t k = 0; k + 1 < anchored.size(); ++k) {
    for (size_t c = anchored[k]; c < anchored[k + 1]; ++c) {
      a[r][p_idx[c]] = 1.0;
      a[r][p_idx[c] + 1] = -1.0;
    }
    b[r] = *problem.anchors[anchored[k + 1]] - *problem.anchors[anchored[k]];
    ++r;
  }
  LpResult lp = solve_standard_lp(a, b, cost);
  sol.status = lp.status;
  sol.iterations = lp.iterations;
  if (lp.status != LpStatus::kOptimal) return sol;
  double v = *problem.anchors[first];
  for (size_t i = 0; i <= first; ++i) sol.values[i] = v;
  for (size_t c = first; c < last; ++c) {
    v += lp.x[p_idx[c]] - lp.x[p_idx[c] + 1];
    sol.values[c + 1] = v;
  }
  for (size_t i = last; i < nodes; ++i) sol.values[i] = *problem.anchors[last];
  // Intercepts already include the f0 share of cells in the anchored span.
  double outside = 0.0;
  for (size_t c = 0; c < problem.cells.size(); ++c) {
    if ((c < first || c >= last) && !problem.cells[c].is_jump()) {
      outside += problem.cells[c].weight * problem.cells[c].length * f.f0();
    }
  }
  sol.cost = lp.objective + outside;
  return sol;
}

}  // namespace bvrelax
