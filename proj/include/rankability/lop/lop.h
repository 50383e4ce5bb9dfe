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

// Exact solver for the linear ordering problem
//
//   maximize   sum_{i != j} a_ij x_ij
//   subject to x is the indicator matrix of a permutation,
//
// i.e. find the ranking whose symmetric reordering of A has the largest
// upper-triangular sum. The solver is a depth-first branch and bound that
// builds rankings one position at a time; see PrefixUpperBound for the bound.

#ifndef RANKABILITY_LOP_LOP_H_
#define RANKABILITY_LOP_LOP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rankability/core/ranking.h"
#include "rankability/core/weight_matrix.h"
#include "rankability/lop/solver_config.h"

namespace rankability {

// Largest instance the bitmask-based searches accept.
inline constexpr int kMaxSolverItems = 64;

struct SearchStats {
  std::int64_t nodes_explored = 0;
  std::int64_t nodes_pruned = 0;
  double wall_seconds = 0.0;
  // Objective of the heuristic incumbent the search started from.
  double heuristic_value = 0.0;
};

struct LopResult {
  // k*: the optimal objective value.
  double optimal_value = 0.0;
  // Lexicographically smallest optimal ranking (order form). When `proven`
  // is false this is the best incumbent found before the time limit.
  Ranking ranking = Ranking::Identity(2);
  bool proven = false;
  SearchStats stats;
};

// All optimal rankings, sorted lexicographically by order form.
struct OptimaSet {
  std::vector<Ranking> rankings;
  // Set when enumeration stopped at SolverConfig::enumeration_cap.
  bool truncated = false;
};

// Greedy insertion followed by single-item insertion local search, repeated
// over `heuristic_restarts` shuffled starts. Returns the better of the
// result and its reverse, so the objective is at least TotalSum() / 2.
// Deterministic for a fixed rng_seed.
Ranking HeuristicRanking(const WeightMatrix& a, const SolverConfig& config);

// Upper bound on the objective of any ranking that starts with `prefix`
// (0-based items, best first): the weight of all pairs the prefix already
// decides plus max(a_ij, a_ji) for every pair of unplaced items. Exact for a
// full prefix, and never increases as the prefix grows.
double PrefixUpperBound(const WeightMatrix& a, std::span<const int> prefix);

// Proven optimum of the linear ordering problem. Throws kTooLarge above
// kMaxSolverItems items. On timeout the result carries proven = false.
LopResult SolveLop(const WeightMatrix& a, const SolverConfig& config = {});

// Every ranking whose objective is within `tolerance` of k*, up to
// `enumeration_cap`. The overload without k* solves first and throws
// kTimeout if that solve is not proven.
OptimaSet EnumerateOptima(const WeightMatrix& a,
                          const SolverConfig& config = {});
OptimaSet EnumerateOptima(const WeightMatrix& a, double k_star,
                          const SolverConfig& config);

// k* / TotalSum(). Throws kUndefinedMetric for the all-zero matrix.
double DegreeOfLinearity(const WeightMatrix& a, double k_star);
double DegreeOfLinearity(const WeightMatrix& a,
                         const SolverConfig& config = {});

}  // namespace rankability

#endif  // RANKABILITY_LOP_LOP_H_
