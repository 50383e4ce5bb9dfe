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

#include "prefix_search.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <utility>

namespace rankability::internal {
namespace {

constexpr std::int64_t kDeadlineCheckInterval = 1024;

// Serial search state for MaximizeWorker.
class SerialShared {
 public:
  SerialShared(double incumbent, std::vector<int> order,
               const Deadline& deadline)
      : best_(incumbent), order_(std::move(order)), deadline_(deadline) {}

  double Best() const { return best_; }
  void Offer(double value, const std::vector<int>& order) {
    if (value > best_) {
      best_ = value;
      order_ = order;
    }
  }
  bool Admit(Mask placed, double fixed) {
    return table_.AdmitIfBetter(placed, fixed);
  }
  bool Stopped() const { return stopped_; }
  void PollDeadline() {
    if (deadline_.Expired()) stopped_ = true;
  }

  double best_value() const { return best_; }
  std::vector<int>& best_order() { return order_; }

 private:
  double best_;
  std::vector<int> order_;
  const Deadline& deadline_;
  DominanceTable table_{size_t{1} << 21};
  bool stopped_ = false;
};

// Shared state for the OpenMP workers. The incumbent only ever increases.
class ParallelShared {
 public:
  ParallelShared(double incumbent, std::vector<int> order,
                 const Deadline& deadline)
      : best_(incumbent), order_(std::move(order)), deadline_(deadline) {}

  double Best() const { return best_.load(std::memory_order_relaxed); }
  void Offer(double value, const std::vector<int>& order) {
    if (value <= Best()) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (value > best_.load(std::memory_order_relaxed)) {
      order_ = order;
      best_.store(value, std::memory_order_relaxed);
    }
  }
  bool Admit(Mask placed, double fixed) {
    return table_.AdmitIfBetter(placed, fixed);
  }
  bool Stopped() const { return stopped_.load(std::memory_order_relaxed); }
  void PollDeadline() {
    if (deadline_.Expired()) stopped_.store(true, std::memory_order_relaxed);
  }

  double best_value() const { return Best(); }
  std::vector<int>& best_order() { return order_; }

 private:
  std::atomic<double> best_;
  std::mutex mu_;
  std::vector<int> order_;
  const Deadline& deadline_;
  SharedDominanceTable table_;
  std::atomic<bool> stopped_{false};
};

template <typename Shared>
class MaximizeWorker {
 public:
  MaximizeWorker(const PrefixProblem& problem, std::span<const int> child_order,
                 Shared& shared)
      : p_(problem),
        child_order_(child_order),
        shared_(shared),
        full_(FullMask(problem.n())),
        path_(problem.n()) {}

  void Run(Mask placed, double fixed, double rest,
           const std::vector<int>& prefix) {
    std::copy(prefix.begin(), prefix.end(), path_.begin());
    Dfs(placed, fixed, rest, static_cast<int>(prefix.size()));
  }

  const SearchCounters& counters() const { return counters_; }

 private:
  void Dfs(Mask placed, double fixed, double rest, int depth) {
    if (++counters_.nodes % kDeadlineCheckInterval == 0) {
      shared_.PollDeadline();
    }
    if (shared_.Stopped()) return;
    if (depth == p_.n()) {
      shared_.Offer(fixed, path_);
      return;
    }
    const Mask remaining = full_ & ~placed;
    for (int v : child_order_) {
      if (!(remaining & Bit(v)) || !p_.Placeable(v, placed)) continue;
      double gain, released;
      p_.PlaceCost(v, remaining & ~Bit(v), &gain, &released);
      const double child_fixed = fixed + gain;
      const double child_rest = rest - released;
      if (child_fixed + child_rest <= shared_.Best()) {
        ++counters_.pruned;
        continue;
      }
      const Mask child = placed | Bit(v);
      if (!shared_.Admit(child, child_fixed)) {
        ++counters_.pruned;
        continue;
      }
      path_[depth] = v;
      Dfs(child, child_fixed, child_rest, depth + 1);
      if (shared_.Stopped()) return;
    }
  }

  const PrefixProblem& p_;
  std::span<const int> child_order_;
  Shared& shared_;
  Mask full_;
  std::vector<int> path_;
  SearchCounters counters_;
};

struct FrontierNode {
  Mask placed;
  double fixed;
  double rest;
  std::vector<int> prefix;
};

}  // namespace

Deadline::Deadline(std::optional<double> seconds) {
  if (seconds.has_value()) {
    end_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(*seconds));
  }
}

PrefixProblem::PrefixProblem(const WeightMatrix& a,
                             std::vector<Mask> must_precede)
    : n_(a.size()),
      w_(a.data().begin(), a.data().end()),
      cap_(w_.size()),
      must_precede_(std::move(must_precede)) {
  if (must_precede_.empty()) must_precede_.assign(n_, 0);
  // Transitive closure: repeat until no predecessor set grows.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n_; ++v) {
      Mask closed = must_precede_[v];
      for (Mask m = must_precede_[v]; m; m &= m - 1) {
        closed |= must_precede_[std::countr_zero(m)];
      }
      if (closed != must_precede_[v]) {
        must_precede_[v] = closed;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (must_precede_[v] & Bit(v)) consistent_ = false;
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      double c;
      if (must_precede_[j] & Bit(i)) {
        c = w(i, j);
      } else if (must_precede_[i] & Bit(j)) {
        c = w(j, i);
      } else {
        c = std::max(w(i, j), w(j, i));
      }
      cap_[i * n_ + j] = c;
      if (i < j) root_bound_ += c;
    }
  }
}

void PrefixProblem::PlaceCost(int v, Mask rest, double* gain,
                              double* released) const {
  const double* wrow = &w_[v * n_];
  const double* crow = &cap_[v * n_];
  double g = 0.0, r = 0.0;
  for (Mask m = rest; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    g += wrow[u];
    r += crow[u];
  }
  *gain = g;
  *released = r;
}

bool DominanceTable::AdmitIfBetter(Mask placed, double value) {
  auto it = best_.find(placed);
  if (it != best_.end()) {
    if (it->second >= value) return false;
    it->second = value;
    return true;
  }
  if (best_.size() < max_entries_) best_.emplace(placed, value);
  return true;
}

bool DominanceTable::AdmitUnlessWorse(Mask placed, double value,
                                      double slack) {
  auto it = best_.find(placed);
  if (it != best_.end()) {
    if (it->second > value + slack) return false;
    it->second = std::max(it->second, value);
    return true;
  }
  if (best_.size() < max_entries_) best_.emplace(placed, value);
  return true;
}

SharedDominanceTable::SharedDominanceTable(size_t max_entries)
    : max_per_shard_(max_entries / kShards + 1), shards_(kShards) {}

bool SharedDominanceTable::AdmitIfBetter(Mask placed, double value) {
  // Mix the bits so neighbouring sets land on different shards.
  const Mask h = placed * 0x9E3779B97F4A7C15ULL;
  Shard& shard = shards_[h >> 58];
  std::lock_guard<std::mutex> lock(shard.mu);
  auto it = shard.best.find(placed);
  if (it != shard.best.end()) {
    if (it->second >= value) return false;
    it->second = value;
    return true;
  }
  if (shard.best.size() < max_per_shard_) shard.best.emplace(placed, value);
  return true;
}

MaximizeOutcome MaximizeSerial(const PrefixProblem& problem,
                               std::span<const int> child_order,
                               double incumbent_value,
                               std::vector<int> incumbent_order,
                               const Deadline& deadline) {
  SerialShared shared(incumbent_value, std::move(incumbent_order), deadline);
  MaximizeWorker<SerialShared> worker(problem, child_order, shared);
  worker.Run(0, 0.0, problem.RootBound(), {});
  MaximizeOutcome out;
  out.best_value = shared.best_value();
  out.best_order = std::move(shared.best_order());
  out.complete = !shared.Stopped();
  out.counters = worker.counters();
  return out;
}

MaximizeOutcome MaximizeParallel(const PrefixProblem& problem,
                                 std::span<const int> child_order,
                                 double incumbent_value,
                                 std::vector<int> incumbent_order,
                                 const Deadline& deadline, int workers) {
  const int n = problem.n();
  if (workers <= 1 || n < 4) {
    return MaximizeSerial(problem, child_order, incumbent_value,
                          std::move(incumbent_order), deadline);
  }
  ParallelShared shared(incumbent_value, std::move(incumbent_order),
                        deadline);
  SearchCounters counters;

  // Breadth-first expansion of the top levels until there is enough work to
  // balance, keeping at least two unplaced items per frontier node.
  const size_t wanted = static_cast<size_t>(workers) * 16;
  std::vector<FrontierNode> frontier{{0, 0.0, problem.RootBound(), {}}};
  const Mask full = FullMask(n);
  for (int depth = 0; depth < n - 2 && !frontier.empty() &&
                      frontier.size() < wanted;
       ++depth) {
    std::vector<FrontierNode> next;
    for (const FrontierNode& node : frontier) {
      ++counters.nodes;
      const Mask remaining = full & ~node.placed;
      for (int v : child_order) {
        if (!(remaining & Bit(v)) || !problem.Placeable(v, node.placed)) {
          continue;
        }
        double gain, released;
        problem.PlaceCost(v, remaining & ~Bit(v), &gain, &released);
        const double fixed = node.fixed + gain;
        const double rest = node.rest - released;
        const Mask child = node.placed | Bit(v);
        if (fixed + rest <= shared.Best() || !shared.Admit(child, fixed)) {
          ++counters.pruned;
          continue;
        }
        std::vector<int> prefix = node.prefix;
        prefix.push_back(v);
        next.push_back({child, fixed, rest, std::move(prefix)});
      }
    }
    frontier = std::move(next);
  }

  std::int64_t nodes = 0, pruned = 0;
  const int tasks = static_cast<int>(frontier.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1) \
    reduction(+ : nodes, pruned)
  for (int t = 0; t < tasks; ++t) {
    if (shared.Stopped()) continue;
    const FrontierNode& node = frontier[t];
    // A better incumbent may have appeared since the node was generated.
    if (node.fixed + node.rest <= shared.Best()) {
      ++pruned;
      continue;
    }
    MaximizeWorker<ParallelShared> worker(problem, child_order, shared);
    worker.Run(node.placed, node.fixed, node.rest, node.prefix);
    nodes += worker.counters().nodes;
    pruned += worker.counters().pruned;
  }

  MaximizeOutcome out;
  out.best_value = shared.best_value();
  out.best_order = std::move(shared.best_order());
  out.complete = !shared.Stopped();
  out.counters.nodes = counters.nodes + nodes;
  out.counters.pruned = counters.pruned + pruned;
  return out;
}

namespace {

// Depth-first search in ascending item order with a fixed target; shared by
// FirstAtLeast and EnumerateAtLeast.
class TargetSearch {
 public:
  TargetSearch(const PrefixProblem& problem, double target,
               const Deadline& deadline)
      : p_(problem),
        target_(target),
        deadline_(deadline),
        full_(FullMask(problem.n())),
        path_(problem.n()) {}

  // Walks `prefix`; false if it violates the precedence relation.
  bool Seed(std::span<const int> prefix) {
    Mask placed = 0;
    double fixed = 0.0, rest = p_.RootBound();
    for (size_t d = 0; d < prefix.size(); ++d) {
      const int v = prefix[d];
      if (v < 0 || v >= p_.n() || (placed & Bit(v)) ||
          !p_.Placeable(v, placed)) {
        return false;
      }
      double gain, released;
      p_.PlaceCost(v, full_ & ~placed & ~Bit(v), &gain, &released);
      fixed += gain;
      rest -= released;
      placed |= Bit(v);
      path_[d] = v;
    }
    seed_placed_ = placed;
    seed_fixed_ = fixed;
    seed_rest_ = rest;
    seed_depth_ = static_cast<int>(prefix.size());
    return true;
  }

  // Returns false to abort the whole search.
  template <typename OnLeaf, typename AdmitFn>
  bool Run(OnLeaf&& on_leaf, AdmitFn&& admit) {
    if (seed_fixed_ + seed_rest_ < target_) return true;
    return Dfs(seed_placed_, seed_fixed_, seed_rest_, seed_depth_, on_leaf,
               admit);
  }

  bool stopped() const { return stopped_; }
  const SearchCounters& counters() const { return counters_; }

 private:
  template <typename OnLeaf, typename AdmitFn>
  bool Dfs(Mask placed, double fixed, double rest, int depth, OnLeaf& on_leaf,
           AdmitFn& admit) {
    if (++counters_.nodes % kDeadlineCheckInterval == 0 &&
        deadline_.Expired()) {
      stopped_ = true;
    }
    if (stopped_) return false;
    if (depth == p_.n()) {
      return fixed >= target_ ? on_leaf(path_) : true;
    }
    const Mask remaining = full_ & ~placed;
    for (Mask m = remaining; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (!p_.Placeable(v, placed)) continue;
      double gain, released;
      p_.PlaceCost(v, remaining & ~Bit(v), &gain, &released);
      const double child_fixed = fixed + gain;
      const double child_rest = rest - released;
      const Mask child = placed | Bit(v);
      if (child_fixed + child_rest < target_ || !admit(child, child_fixed)) {
        ++counters_.pruned;
        continue;
      }
      path_[depth] = v;
      if (!Dfs(child, child_fixed, child_rest, depth + 1, on_leaf, admit)) {
        return false;
      }
    }
    return true;
  }

  const PrefixProblem& p_;
  double target_;
  const Deadline& deadline_;
  Mask full_;
  std::vector<int> path_;
  Mask seed_placed_ = 0;
  double seed_fixed_ = 0.0;
  double seed_rest_ = 0.0;
  int seed_depth_ = 0;
  bool stopped_ = false;
  SearchCounters counters_;
};

}  // namespace

FirstOutcome FirstAtLeast(const PrefixProblem& problem, double target,
                          std::span<const int> prefix,
                          const Deadline& deadline) {
  FirstOutcome out;
  if (!problem.consistent()) return out;
  TargetSearch search(problem, target, deadline);
  if (!search.Seed(prefix)) return out;
  // Every recorded set is a failed prefix: an equal or lighter prefix over
  // the same items fails too.
  DominanceTable table(size_t{1} << 21);
  search.Run(
      [&](const std::vector<int>& order) {
        out.order = order;
        return false;
      },
      [&](Mask placed, double fixed) {
        return table.AdmitIfBetter(placed, fixed);
      });
  out.complete = !search.stopped();
  out.counters = search.counters();
  return out;
}

EnumerateOutcome EnumerateAtLeast(const PrefixProblem& problem, double target,
                                  double slack, std::int64_t cap,
                                  const Deadline& deadline) {
  EnumerateOutcome out;
  if (!problem.consistent()) return out;
  TargetSearch search(problem, target, deadline);
  search.Seed({});
  DominanceTable table(size_t{1} << 21);
  search.Run(
      [&](const std::vector<int>& order) {
        if (static_cast<std::int64_t>(out.orders.size()) >= cap) {
          out.truncated = true;
          return false;
        }
        out.orders.push_back(order);
        return true;
      },
      [&](Mask placed, double fixed) {
        return table.AdmitUnlessWorse(placed, fixed, slack);
      });
  out.complete = !search.stopped();
  out.counters = search.counters();
  return out;
}

}  // namespace rankability::internal
