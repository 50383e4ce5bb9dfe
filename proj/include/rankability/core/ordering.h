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

// Pure functions relating rankings to weight matrices and to each other.

#ifndef RANKABILITY_CORE_ORDERING_H_
#define RANKABILITY_CORE_ORDERING_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "rankability/core/ranking.h"
#include "rankability/core/weight_matrix.h"

namespace rankability {

// Unordered item pairs, stored as (i, j) with i < j, 0-based, sorted.
struct PairSet {
  std::vector<std::pair<int, int>> pairs;

  std::int64_t count() const { return static_cast<std::int64_t>(pairs.size()); }
  bool Contains(int i, int j) const;
};

struct PairPartition {
  PairSet concordant;
  PairSet discordant;
};

// n choose 2.
constexpr std::int64_t PairCount(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Sum of a_ij over ordered pairs with i ranked ahead of j. Summation runs
// over positions p < q of the order form, so the result is a deterministic
// function of (A, ranking).
double ObjectiveValue(const WeightMatrix& a, const Ranking& ranking);

// Sum of the strictly upper-triangular entries.
double UpperTriangularSum(const WeightMatrix& a);

// Symmetric reordering B with B[pos(i)][pos(j)] = a_ij; labels follow their
// items.
WeightMatrix PermuteMatrix(const WeightMatrix& a, const Ranking& ranking);

// Number of discordant pairs.
std::int64_t KendallTauDistance(const Ranking& a, const Ranking& b);

PairPartition ConcordantDiscordant(const Ranking& a, const Ranking& b);

}  // namespace rankability

#endif  // RANKABILITY_CORE_ORDERING_H_
