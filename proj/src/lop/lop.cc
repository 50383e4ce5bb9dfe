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

#include "rankability/lop/lop.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "prefix_search.h"
#include "rankability/core/errors.h"
#include "rankability/core/ordering.h"

namespace rankability {
namespace {

void CheckSolverSize(const WeightMatrix& a) {
  if (a.size() > kMaxSolverItems) {
    throw Error(ErrorCode::kTooLarge,
                "exact search supports at most " +
                    std::to_string(kMaxSolverItems) + " items, got " +
                    std::to_string(a.size()));
  }
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

void SolverConfig::Validate() const {
  if (time_limit_seconds.has_value() &&
      !(*time_limit_seconds > 0.0 && std::isfinite(*time_limit_seconds))) {
    throw Error(ErrorCode::kInvalidConfig, "time limit must be positive");
  }
  if (enumeration_cap < 1) {
    throw Error(ErrorCode::kInvalidConfig, "enumeration cap must be >= 1");
  }
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::kInvalidConfig,
                "tolerance must be finite and nonnegative");
  }
  if (parallel_workers < 1) {
    throw Error(ErrorCode::kInvalidConfig, "workers must be >= 1");
  }
  if (heuristic_restarts < 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "heuristic restarts must be >= 0");
  }
}

double PrefixUpperBound(const WeightMatrix& a, std::span<const int> prefix) {
  const int n = a.size();
  std::vector<bool> placed(n, false);
  for (int v : prefix) {
    if (v < 0 || v >= n || placed[v]) {
      throw Error(ErrorCode::kMalformedPermutation,
                  "prefix item " + std::to_string(v + 1) +
                      " is repeated or out of range");
    }
    placed[v] = true;
  }
  double bound = 0.0;
  // Pairs with at least one placed item: the earlier one wins the pair.
  for (size_t p = 0; p < prefix.size(); ++p) {
    const int v = prefix[p];
    for (size_t q = p + 1; q < prefix.size(); ++q) bound += a(v, prefix[q]);
    for (int u = 0; u < n; ++u) {
      if (!placed[u]) bound += a(v, u);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (placed[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!placed[j]) bound += std::max(a(i, j), a(j, i));
    }
  }
  return bound;
}

LopResult SolveLop(const WeightMatrix& a, const SolverConfig& config) {
  config.Validate();
  CheckSolverSize(a);
  const auto start = std::chrono::steady_clock::now();
  const internal::Deadline deadline(config.time_limit_seconds);

  const Ranking heuristic = HeuristicRanking(a, config);
  const double heuristic_value = ObjectiveValue(a, heuristic);
  const internal::PrefixProblem problem(a);

  internal::MaximizeOutcome best =
      config.parallel_workers > 1
          ? internal::MaximizeParallel(problem, heuristic.order(),
                                       heuristic_value, heuristic.order(),
                                       deadline, config.parallel_workers)
          : internal::MaximizeSerial(problem, heuristic.order(),
                                     heuristic_value, heuristic.order(),
                                     deadline);

  LopResult result;
  result.stats.heuristic_value = heuristic_value;
  result.stats.nodes_explored = best.counters.nodes;
  result.stats.nodes_pruned = best.counters.pruned;
  result.proven = best.complete;
  result.ranking = Ranking::FromZeroBasedOrder(best.best_order);

  if (result.proven) {
    // Canonical witness: the lexicographically first ranking within
    // tolerance of the maximum, independent of how the maximum was found.
    internal::FirstOutcome first = internal::FirstAtLeast(
        problem, best.best_value - config.tolerance, {}, deadline);
    result.stats.nodes_explored += first.counters.nodes;
    result.stats.nodes_pruned += first.counters.pruned;
    if (first.complete && first.order.has_value()) {
      result.ranking = Ranking::FromZeroBasedOrder(*first.order);
    } else {
      result.proven = false;
    }
  }
  result.optimal_value = ObjectiveValue(a, result.ranking);
  result.stats.wall_seconds = SecondsSince(start);
  return result;
}

OptimaSet EnumerateOptima(const WeightMatrix& a, double k_star,
                          const SolverConfig& config) {
  config.Validate();
  CheckSolverSize(a);
  const internal::Deadline deadline(config.time_limit_seconds);
  const internal::PrefixProblem problem(a);
  internal::EnumerateOutcome found = internal::EnumerateAtLeast(
      problem, k_star - config.tolerance, config.tolerance,
      config.enumeration_cap, deadline);
  if (!found.complete) {
    throw Error(ErrorCode::kTimeout, "enumeration hit the time limit");
  }
  OptimaSet out;
  out.truncated = found.truncated;
  out.rankings.reserve(found.orders.size());
  for (auto& order : found.orders) {
    out.rankings.push_back(Ranking::FromZeroBasedOrder(std::move(order)));
  }
  return out;
}

OptimaSet EnumerateOptima(const WeightMatrix& a, const SolverConfig& config) {
  const LopResult solved = SolveLop(a, config);
  if (!solved.proven) {
    throw Error(ErrorCode::kTimeout, "optimal value not proven");
  }
  return EnumerateOptima(a, solved.optimal_value, config);
}

double DegreeOfLinearity(const WeightMatrix& a, double k_star) {
  if (a.TotalSum() == 0.0) {
    throw Error(ErrorCode::kUndefinedMetric,
                "degree of linearity needs a matrix that is not all zero");
  }
  return k_star / a.TotalSum();
}

double DegreeOfLinearity(const WeightMatrix& a, const SolverConfig& config) {
  if (a.TotalSum() == 0.0) return DegreeOfLinearity(a, 0.0);
  const LopResult solved = SolveLop(a, config);
  if (!solved.proven) {
    throw Error(ErrorCode::kTimeout, "optimal value not proven");
  }
  return DegreeOfLinearity(a, solved.optimal_value);
}

}  // namespace rankability
