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


#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/cantor.hpp"
#include "bvrelax/chain.hpp"
#include "bvrelax/corpus.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/relax.hpp"
#include "bvrelax/space.hpp"
#include "bvrelax/whitney.hpp"

namespace bvrelax {
namespace {

ChainProblem random_chain(int cells) {
  Rng rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ChainProblem p;
  for (int k = 0; k < cells; ++k) {
    p.cells.push_back(k % 17 == 16 ? ChainCell::jump(1.0 + unit(rng))
                                   : ChainCell::regular(1.0 / cells, 0.5 + unit(rng)));
  }
  p.anchors.assign(cells + 1, std::nullopt);
  for (int k = 0; k <= cells; k += 8) p.anchors[k] = std::sin(0.1 * k);
  return p;
}

void BM_SolveChain(benchmark::State& state) {
  const ChainProblem p = random_chain(static_cast<int>(state.range(0)));
  const Integrand f = Integrand::kinked();
  for (auto _ : state) benchmark::DoNotOptimize(solve_chain(p, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveChain)->RangeMultiplier(4)->Range(64, 65536);

void BM_RelaxValue(benchmark::State& state) {
  const auto space = WeightedIntervalSpace::uniform(0, 1);
  const BVRepresentation u(GridFunction::sample(0, 1, 64, [](double x) { return x * x; }),
                           {Jump{Rational(1, 2), 0.5}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        relax_value(Integrand::kinked(), u, space, space.interior(), n, Rational(8, n)));
  }
}
BENCHMARK(BM_RelaxValue)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_BuildCover(benchmark::State& state) {
  const auto space = WeightedIntervalSpace::uniform(0, 1);
  const OpenSet g = OpenSet::interval(0, 1);
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(space, g, i));
}
BENCHMARK(BM_BuildCover)->RangeMultiplier(4)->Range(4, 1024);

void BM_CantorCover(benchmark::State& state) {
  const auto space = WeightedIntervalSpace::uniform(0, 1);
  const CantorLevel level = cantor_intervals(static_cast<int>(state.range(0)));
  std::vector<Interval> gaps;
  for (const auto& gs : level.gaps) gaps.insert(gaps.end(), gs.begin(), gs.end());
  std::sort(gaps.begin(), gaps.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  const OpenSet g(gaps);
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(space, g, 16));
}
BENCHMARK(BM_CantorCover)->DenseRange(2, 6, 2);

void BM_Coarea(benchmark::State& state) {
  const auto space = cantor_space(6);
  const GridFunction u =
      GridFunction::sample(0, 1, static_cast<int>(state.range(0)),
                           [](double x) { return std::sin(12.0 * x); });
  for (auto _ : state) benchmark::DoNotOptimize(coarea_both_sides(u, space, space.interior()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Coarea)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace
}  // namespace bvrelax

BENCHMARK_MAIN();
