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

#include "kt/pair_search.h"

#include <omp.h>

#include <atomic>
#include <bit>
#include <mutex>

namespace rankability::internal {

bool PartialOrder::Add(int i, int j) {
  if (succ[j] & Bit(i)) return false;
  if (succ[i] & Bit(j)) return true;
  const Mask ups = pred[i] | Bit(i);
  const Mask downs = succ[j] | Bit(j);
  for (Mask m = ups; m; m &= m - 1) succ[std::countr_zero(m)] |= downs;
  for (Mask m = downs; m; m &= m - 1) pred[std::countr_zero(m)] |= ups;
  return true;
}

std::vector<int> PartialOrder::Order(int n) const {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[std::popcount(pred[i])] = i;
  return order;
}

PairProblem::PairProblem(const PrefixProblem& lop, double floor,
                         std::vector<std::pair<int, int>> branch_pairs)
    : lop_(lop), floor_(floor), branch_pairs_(std::move(branch_pairs)) {}

double PairProblem::Bound(const PartialOrder& order) const {
  const int n = lop_.n();
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (order.succ[i] & Bit(j)) {
        bound += lop_.w(i, j);
      } else if (order.pred[i] & Bit(j)) {
        bound += lop_.w(j, i);
      } else {
        bound += lop_.cap(i, j);
      }
    }
  }
  return bound;
}

bool PairProblem::Prepare(PairNode& node) const {
  node.x_bound = Bound(node.x);
  if (node.x_bound < floor_) return false;
  node.y_bound = node.symmetric ? node.x_bound : Bound(node.y);
  return node.y_bound >= floor_;
}

void PairProblem::Count(const PairNode& node, int* discordant,
                        int* open) const {
  const int n = lop_.n();
  int d = 0, o = 0;
  for (int i = 0; i < n; ++i) {
    const Mask later = FullMask(n) & ~FullMask(i + 1);
    const Mask both = (node.x.succ[i] | node.x.pred[i]) &
                      (node.y.succ[i] | node.y.pred[i]) & later;
    d += std::popcount(((node.x.succ[i] & node.y.pred[i]) |
                        (node.x.pred[i] & node.y.succ[i])) &
                       later);
    o += std::popcount(later & ~both);
  }
  *discordant = d;
  *open = o;
}

namespace {

constexpr std::int64_t kDeadlineCheckInterval = 1024;

class SerialPairShared {
 public:
  SerialPairShared(std::int64_t threshold, bool stop_at_first,
                   const Deadline& deadline)
      : best_(threshold), stop_at_first_(stop_at_first), deadline_(deadline) {}

  std::int64_t Best() const { return best_; }
  void Offer(std::int64_t value, const PairNode& node, int n) {
    if (value <= best_) return;
    best_ = value;
    witness_.emplace(node.x.Order(n), node.y.Order(n));
    if (stop_at_first_) found_ = true;
  }
  bool Stopped() const { return timed_out_ || found_; }
  void PollDeadline() {
    if (deadline_.Expired()) timed_out_ = true;
  }

  void Fill(PairOutcome& out) {
    out.best = best_;
    out.witness = std::move(witness_);
    out.complete = !timed_out_;
  }

 private:
  std::int64_t best_;
  bool stop_at_first_;
  const Deadline& deadline_;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness_;
  bool timed_out_ = false;
  bool found_ = false;
};

class ParallelPairShared {
 public:
  ParallelPairShared(std::int64_t threshold, bool stop_at_first,
                     const Deadline& deadline)
      : best_(threshold), stop_at_first_(stop_at_first), deadline_(deadline) {}

  std::int64_t Best() const { return best_.load(std::memory_order_relaxed); }
  void Offer(std::int64_t value, const PairNode& node, int n) {
    if (value <= Best()) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (value <= best_.load(std::memory_order_relaxed)) return;
    witness_.emplace(node.x.Order(n), node.y.Order(n));
    best_.store(value, std::memory_order_relaxed);
    if (stop_at_first_) found_.store(true, std::memory_order_relaxed);
  }
  bool Stopped() const {
    return timed_out_.load(std::memory_order_relaxed) ||
           found_.load(std::memory_order_relaxed);
  }
  void PollDeadline() {
    if (deadline_.Expired()) timed_out_.store(true, std::memory_order_relaxed);
  }

  void Fill(PairOutcome& out) {
    out.best = Best();
    out.witness = std::move(witness_);
    out.complete = !timed_out_.load();
  }

 private:
  std::atomic<std::int64_t> best_;
  bool stop_at_first_;
  const Deadline& deadline_;
  std::mutex mu_;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness_;
  std::atomic<bool> timed_out_{false};
  std::atomic<bool> found_{false};
};

// Children of `node` in the order they are searched: discordant
// orientations first. Appends viable children to `out`; returns the number
// of children rejected by closure conflicts or bounds.
int Expand(const PairProblem& p, const PairNode& node,
           std::vector<PairNode>& out) {
  int i = -1, j = -1;
  for (const auto& [a, b] : p.branch_pairs()) {
    if (!node.x.Decided(a, b) || !node.y.Decided(a, b)) {
      i = a;
      j = b;
      break;
    }
  }
  if (i < 0) return 0;

  // Orientation options per order: {i before j?}. A decided order offers
  // only its current orientation.
  const bool x_open = !node.x.Decided(i, j);
  const bool y_open = !node.y.Decided(i, j);
  const bool x_fixed = node.x.Before(i, j);
  const bool y_fixed = node.y.Before(i, j);
  struct Option {
    bool x_ij;
    bool y_ij;
  };
  Option options[4];
  int count = 0;
  auto push = [&](bool xo, bool yo) {
    if (!x_open && xo != x_fixed) return;
    if (!y_open && yo != y_fixed) return;
    options[count++] = {xo, yo};
  };
  push(true, false);
  if (!node.symmetric) push(false, true);
  push(true, true);
  push(false, false);

  int rejected = 0;
  for (int k = 0; k < count; ++k) {
    PairNode child = node;
    const Option o = options[k];
    child.symmetric = node.symmetric && o.x_ij == o.y_ij;
    bool ok = true;
    bool x_changed = false, y_changed = false;
    if (x_open) {
      ok = o.x_ij ? child.x.Add(i, j) : child.x.Add(j, i);
      x_changed = true;
    }
    if (ok && y_open) {
      ok = o.y_ij ? child.y.Add(i, j) : child.y.Add(j, i);
      y_changed = true;
    }
    if (ok && x_changed) {
      child.x_bound = p.Bound(child.x);
      ok = child.x_bound >= p.floor();
    }
    if (ok && y_changed) {
      child.y_bound = child.symmetric ? child.x_bound : p.Bound(child.y);
      ok = child.y_bound >= p.floor();
    }
    if (!ok) {
      ++rejected;
      continue;
    }
    out.push_back(std::move(child));
  }
  return rejected;
}

template <typename Shared>
class PairWorker {
 public:
  PairWorker(const PairProblem& problem, Shared& shared)
      : p_(problem), shared_(shared) {
    stack_.reserve(64);
  }

  void Run(const PairNode& root) { Dfs(root, 0); }
  const SearchCounters& counters() const { return counters_; }

 private:
  void Dfs(const PairNode& node, int depth) {
    if (++counters_.nodes % kDeadlineCheckInterval == 0) {
      shared_.PollDeadline();
    }
    if (shared_.Stopped()) return;
    int discordant, open;
    p_.Count(node, &discordant, &open);
    if (discordant + open <= shared_.Best()) {
      ++counters_.pruned;
      return;
    }
    if (open == 0) {
      shared_.Offer(discordant, node, p_.n());
      return;
    }
    if (static_cast<int>(stack_.size()) <= depth) stack_.emplace_back();
    std::vector<PairNode>& children = stack_[depth];
    children.clear();
    counters_.pruned += Expand(p_, node, children);
    for (size_t k = 0; k < children.size(); ++k) {
      // Deeper levels may grow stack_, which moves but never reallocates
      // the per-level vectors, so the element references stay valid.
      Dfs(stack_[depth][k], depth + 1);
      if (shared_.Stopped()) return;
    }
  }

  const PairProblem& p_;
  Shared& shared_;
  std::vector<std::vector<PairNode>> stack_;
  SearchCounters counters_;
};

}  // namespace

PairOutcome PairSearchSerial(const PairProblem& problem, const PairNode& root,
                             std::int64_t threshold, bool stop_at_first,
                             const Deadline& deadline) {
  SerialPairShared shared(threshold, stop_at_first, deadline);
  PairWorker<SerialPairShared> worker(problem, shared);
  worker.Run(root);
  PairOutcome out;
  shared.Fill(out);
  out.counters = worker.counters();
  return out;
}

PairOutcome PairSearchParallel(const PairProblem& problem,
                               const PairNode& root, std::int64_t threshold,
                               bool stop_at_first, const Deadline& deadline,
                               int workers) {
  if (workers <= 1) {
    return PairSearchSerial(problem, root, threshold, stop_at_first,
                            deadline);
  }
  ParallelPairShared shared(threshold, stop_at_first, deadline);
  SearchCounters counters;

  // Breadth-first expansion until there is enough work to balance. Leaves
  // met on the way are offered directly.
  const size_t wanted = static_cast<size_t>(workers) * 32;
  std::vector<PairNode> frontier{root};
  while (!frontier.empty() && frontier.size() < wanted &&
         !shared.Stopped()) {
    std::vector<PairNode> next;
    bool expanded = false;
    for (const PairNode& node : frontier) {
      ++counters.nodes;
      int discordant, open;
      problem.Count(node, &discordant, &open);
      if (discordant + open <= shared.Best()) {
        ++counters.pruned;
        continue;
      }
      if (open == 0) {
        shared.Offer(discordant, node, problem.n());
        continue;
      }
      counters.pruned += Expand(problem, node, next);
      expanded = true;
    }
    frontier = std::move(next);
    if (!expanded) break;
  }

  std::int64_t nodes = 0, pruned = 0;
  const int tasks = static_cast<int>(frontier.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1) \
    reduction(+ : nodes, pruned)
  for (int t = 0; t < tasks; ++t) {
    if (shared.Stopped()) continue;
    PairWorker<ParallelPairShared> worker(problem, shared);
    worker.Run(frontier[t]);
    nodes += worker.counters().nodes;
    pruned += worker.counters().pruned;
  }

  PairOutcome out;
  shared.Fill(out);
  out.counters.nodes = counters.nodes + nodes;
  out.counters.pruned = counters.pruned + pruned;
  return out;
}

}  // namespace rankability::internal
