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

// Prefix branch and bound shared by the LOP solver, the optimum enumerator
// and the presolve of the Kendall-tau diameter search.
//
// A node is a prefix of a ranking, identified for bounding purposes by the
// set of placed items (a bitmask) and the weight `fixed` already decided by
// the prefix. Every pair with at least one placed item is decided; the bound
// adds cap(i, j) for each pair of unplaced items, where cap is
// max(a_ij, a_ji), or the forced direction's weight under a precedence
// constraint.
//
// Two prefixes over the same item set have identical completions, so a
// prefix whose `fixed` does not beat the best one recorded for its set is
// dominated and pruned (DominanceTable).

#ifndef RANKABILITY_SRC_LOP_PREFIX_SEARCH_H_
#define RANKABILITY_SRC_LOP_PREFIX_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rankability/core/weight_matrix.h"

namespace rankability::internal {

using Mask = std::uint64_t;

inline constexpr Mask Bit(int i) { return Mask{1} << i; }
inline constexpr Mask FullMask(int n) {
  return n >= 64 ? ~Mask{0} : Bit(n) - 1;
}
inline constexpr double kNoIncumbent = -std::numeric_limits<double>::infinity();

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds);

  bool Expired() const {
    return end_.has_value() && std::chrono::steady_clock::now() >= *end_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Dense copy of an instance plus an optional strict precedence relation.
class PrefixProblem {
 public:
  // must_precede[v] holds items that must be ranked ahead of v. The relation
  // is transitively closed here; consistent() reports whether it is acyclic.
  explicit PrefixProblem(const WeightMatrix& a,
                         std::vector<Mask> must_precede = {});

  int n() const { return n_; }
  double w(int i, int j) const { return w_[i * n_ + j]; }
  double cap(int i, int j) const { return cap_[i * n_ + j]; }
  Mask must_precede(int v) const { return must_precede_[v]; }
  bool consistent() const { return consistent_; }
  double RootBound() const { return root_bound_; }

  // v may be placed next once all of its required predecessors are placed.
  bool Placeable(int v, Mask placed) const {
    return (must_precede_[v] & ~placed) == 0;
  }

  // Weight gained and cap released by placing v ahead of every item in
  // `rest` (v not in rest).
  void PlaceCost(int v, Mask rest, double* gain, double* released) const;

 private:
  int n_;
  std::vector<double> w_;
  std::vector<double> cap_;
  std::vector<Mask> must_precede_;
  bool consistent_ = true;
  double root_bound_ = 0.0;
};

// Best prefix weight seen per placed-item set, with a size cap after which
// new sets are no longer recorded.
class DominanceTable {
 public:
  explicit DominanceTable(size_t max_entries = size_t{1} << 22)
      : max_entries_(max_entries) {}

  // False when a prefix with weight >= value was recorded for `placed`.
  bool AdmitIfBetter(Mask placed, double value);
  // False when a prefix with weight > value + slack was recorded.
  bool AdmitUnlessWorse(Mask placed, double value, double slack);

 private:
  size_t max_entries_;
  std::unordered_map<Mask, double> best_;
};

// DominanceTable for concurrent workers; lock-striped.
class SharedDominanceTable {
 public:
  explicit SharedDominanceTable(size_t max_entries = size_t{1} << 22);

  bool AdmitIfBetter(Mask placed, double value);

 private:
  static constexpr int kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_map<Mask, double> best;
  };
  size_t max_per_shard_;
  std::vector<Shard> shards_;
};

struct SearchCounters {
  std::int64_t nodes = 0;
  std::int64_t pruned = 0;
};

struct MaximizeOutcome {
  double best_value = kNoIncumbent;
  std::vector<int> best_order;
  // False when the deadline cut the search short.
  bool complete = true;
  SearchCounters counters;
};

// Maximizes the objective. Children are tried in `child_order`; the search
// starts from the given incumbent (kNoIncumbent for none) and only reports
// strictly better rankings.
MaximizeOutcome MaximizeSerial(const PrefixProblem& problem,
                               std::span<const int> child_order,
                               double incumbent_value,
                               std::vector<int> incumbent_order,
                               const Deadline& deadline);

// OpenMP version of MaximizeSerial: the top levels of the tree are expanded
// into a frontier whose subtrees are searched by `workers` threads sharing
// the incumbent and the dominance table. Same best value as the serial
// search; the returned order may be a different optimum.
MaximizeOutcome MaximizeParallel(const PrefixProblem& problem,
                                 std::span<const int> child_order,
                                 double incumbent_value,
                                 std::vector<int> incumbent_order,
                                 const Deadline& deadline, int workers);

struct FirstOutcome {
  std::optional<std::vector<int>> order;
  bool complete = true;
  SearchCounters counters;
};

// Lexicographically first ranking (ascending item index at every position)
// that extends `prefix` and has objective >= target.
FirstOutcome FirstAtLeast(const PrefixProblem& problem, double target,
                          std::span<const int> prefix,
                          const Deadline& deadline);

struct EnumerateOutcome {
  std::vector<std::vector<int>> orders;  // lexicographic order
  bool truncated = false;
  bool complete = true;
  SearchCounters counters;
};

// Every ranking with objective >= target, up to `cap` of them. A branch is
// kept iff its bound is >= target; `slack` is the tolerance used when a
// same-set prefix dominates.
EnumerateOutcome EnumerateAtLeast(const PrefixProblem& problem, double target,
                                  double slack, std::int64_t cap,
                                  const Deadline& deadline);

}  // namespace rankability::internal

#endif  // RANKABILITY_SRC_LOP_PREFIX_SEARCH_H_
