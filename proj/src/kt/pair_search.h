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

// Branch and bound over pairs of rankings (x, y), both optimal, maximizing
// the number of discordant pairs.
//
// A node holds two strict partial orders kept transitively closed. Branching
// decides the orientation of one item pair in x and/or y; closure propagates
// the consequences and detects cycles. A node is pruned when either order
// can no longer reach the optimal value (decided weight plus cap of the
// undecided pairs) or when discordant + undecided pairs cannot beat the
// threshold.

#ifndef RANKABILITY_SRC_KT_PAIR_SEARCH_H_
#define RANKABILITY_SRC_KT_PAIR_SEARCH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lop/prefix_search.h"

namespace rankability::internal {

// Transitively closed strict partial order on at most 64 items.
struct PartialOrder {
  std::array<Mask, 64> succ{};  // succ[i]: items known to follow i
  std::array<Mask, 64> pred{};  // pred[i]: items known to precede i

  bool Before(int i, int j) const { return (succ[i] & Bit(j)) != 0; }
  bool Decided(int i, int j) const {
    return ((succ[i] | pred[i]) & Bit(j)) != 0;
  }
  // Adds i < j and everything it implies. False (state unspecified) when
  // j < i already holds.
  bool Add(int i, int j);
  // Total order as 0-based items, assuming every pair is decided.
  std::vector<int> Order(int n) const;
};

struct PairNode {
  PartialOrder x;
  PartialOrder y;
  double x_bound = 0.0;
  double y_bound = 0.0;
  // x and y are identical; the mirrored discordant child is skipped.
  bool symmetric = false;
};

class PairProblem {
 public:
  // Branches only on `branch_pairs` (i < j); every other pair must already
  // be decided identically in the root's x and y.
  PairProblem(const PrefixProblem& lop, double floor,
              std::vector<std::pair<int, int>> branch_pairs);

  int n() const { return lop_.n(); }
  double floor() const { return floor_; }
  const std::vector<std::pair<int, int>>& branch_pairs() const {
    return branch_pairs_;
  }

  // Decided weight plus cap of undecided pairs.
  double Bound(const PartialOrder& order) const;
  bool Viable(const PartialOrder& order) const {
    return Bound(order) >= floor_;
  }
  // Fills the bounds and reports whether both are viable.
  bool Prepare(PairNode& node) const;

  // Pairs decided in both and opposite; pairs not decided in both.
  void Count(const PairNode& node, int* discordant, int* open) const;

 private:
  const PrefixProblem& lop_;
  double floor_;
  std::vector<std::pair<int, int>> branch_pairs_;
};

struct PairOutcome {
  std::int64_t best = -1;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  bool complete = true;
  SearchCounters counters;
};

// Searches below `root` for pairs with more than `threshold` discordant
// pairs. With stop_at_first the first such pair found ends the search;
// otherwise the maximum is returned (best stays `threshold` and witness
// empty when nothing beats it).
PairOutcome PairSearchSerial(const PairProblem& problem, const PairNode& root,
                             std::int64_t threshold, bool stop_at_first,
                             const Deadline& deadline);

// OpenMP version over a frontier of subtrees sharing the threshold.
PairOutcome PairSearchParallel(const PairProblem& problem,
                               const PairNode& root, std::int64_t threshold,
                               bool stop_at_first, const Deadline& deadline,
                               int workers);

}  // namespace rankability::internal

#endif  // RANKABILITY_SRC_KT_PAIR_SEARCH_H_
