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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rankability/core/ordering.h"
#include "rankability/lop/lop.h"

namespace rankability {
namespace {

// Inserts each item of `sequence` at the position that maximizes the
// objective of the partial ranking; ties go to the earliest position.
std::vector<int> GreedyInsertion(const WeightMatrix& a,
                                 const std::vector<int>& sequence) {
  std::vector<int> order;
  order.reserve(sequence.size());
  for (int v : sequence) {
    double score = 0.0;
    for (int u : order) score += a(v, u);
    double best = score;
    size_t best_pos = 0;
    for (size_t k = 0; k < order.size(); ++k) {
      score += a(order[k], v) - a(v, order[k]);
      if (score > best) {
        best = score;
        best_pos = k + 1;
      }
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(best_pos), v);
  }
  return order;
}

// Moves single items to their best position until no move improves the
// objective by more than `threshold`.
void InsertionLocalSearch(const WeightMatrix& a, std::vector<int>& order,
                          double threshold) {
  const int n = static_cast<int>(order.size());
  for (bool improved = true; improved;) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      const int v = order[i];
      double best = threshold;
      int best_j = i;
      double delta = 0.0;
      for (int j = i + 1; j < n; ++j) {
        delta += a(order[j], v) - a(v, order[j]);
        if (delta > best) {
          best = delta;
          best_j = j;
        }
      }
      delta = 0.0;
      for (int j = i - 1; j >= 0; --j) {
        delta += a(v, order[j]) - a(order[j], v);
        if (delta > best) {
          best = delta;
          best_j = j;
        }
      }
      if (best_j == i) continue;
      order.erase(order.begin() + i);
      order.insert(order.begin() + best_j, v);
      improved = true;
    }
  }
}

}  // namespace

Ranking HeuristicRanking(const WeightMatrix& a, const SolverConfig& config) {
  config.Validate();
  const int n = a.size();
  const double threshold = 1e-12 * std::max(1.0, a.TotalSum());

  // First start: net wins (row sum minus column sum), best first.
  std::vector<double> net(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) net[i] += a(i, j) - a(j, i);
  }
  std::vector<int> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);
  std::stable_sort(sequence.begin(), sequence.end(),
                   [&](int x, int y) { return net[x] > net[y]; });

  std::mt19937_64 rng(config.rng_seed);
  std::vector<int> best_order;
  double best_value = -1.0;
  for (int start = 0; start <= config.heuristic_restarts; ++start) {
    if (start > 0) std::shuffle(sequence.begin(), sequence.end(), rng);
    std::vector<int> order = GreedyInsertion(a, sequence);
    InsertionLocalSearch(a, order, threshold);
    const double value = ObjectiveValue(a, Ranking::FromZeroBasedOrder(order));
    if (value > best_value) {
      best_value = value;
      best_order = std::move(order);
    }
  }
  Ranking best = Ranking::FromZeroBasedOrder(std::move(best_order));
  Ranking reversed = best.Reversed();
  return ObjectiveValue(a, reversed) > best_value ? reversed : best;
}

}  // namespace rankability
