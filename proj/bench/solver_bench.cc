// Copyright 2026 The Rankability Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial versus OpenMP search on random n = 16 tournaments:
//
//   build/bench/solver_bench --benchmark_filter=Kt
//
// The first argument is the worker count; 1 runs the serial kernel.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "rankability/kt/kt.h"
#include "rankability/lop/lop.h"

namespace rankability {
namespace {

// Logistic team strengths, `games` Bernoulli games per pair.
WeightMatrix BernoulliInstance(int n, int games, double spread,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> strength(0.0, spread);
  std::vector<double> s(n);
  for (double& v : s) v = strength(rng);
  std::vector<double> w(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::bernoulli_distribution win(1.0 / (1.0 + std::exp(s[j] - s[i])));
      for (int g = 0; g < games; ++g) {
        if (win(rng)) {
          w[i * n + j] += 1;
        } else {
          w[j * n + i] += 1;
        }
      }
    }
  }
  return WeightMatrix(n, std::move(w));
}

SolverConfig Workers(const benchmark::State& state) {
  SolverConfig cfg;
  cfg.parallel_workers = static_cast<int>(state.range(0));
  return cfg;
}

void BM_Lop(benchmark::State& state) {
  const WeightMatrix a = BernoulliInstance(20, 1, 0.5, 7);
  const SolverConfig cfg = Workers(state);
  for (auto _ : state) {
    const LopResult r = SolveLop(a, cfg);
    benchmark::DoNotOptimize(r.optimal_value);
    state.counters["nodes"] = static_cast<double>(r.stats.nodes_explored);
  }
}
BENCHMARK(BM_Lop)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Kt(benchmark::State& state) {
  // Coin flips: many optima, the hard case for the diameter search.
  const WeightMatrix a = BernoulliInstance(16, 1, 0.0, 11);
  const double k_star = SolveLop(a).optimal_value;
  const SolverConfig cfg = Workers(state);
  for (auto _ : state) {
    const KtResult r = SolveKt(a, k_star, cfg);
    benchmark::DoNotOptimize(r.kappa);
    state.counters["nodes"] = static_cast<double>(r.stats.nodes_explored);
  }
}
BENCHMARK(BM_Kt)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const WeightMatrix a = BernoulliInstance(12, 1, 0.0, 13);
  const SolverConfig cfg = Workers(state);
  for (auto _ : state) {
    const OptimaSet s = EnumerateOptima(a, cfg);
    benchmark::DoNotOptimize(s.rankings.size());
  }
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rankability

BENCHMARK_MAIN();
