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

#include "rankability/core/ordering.h"

#include <algorithm>
#include <string>

#include "rankability/core/errors.h"

namespace rankability {
namespace {

void CheckSameSize(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sizes " + std::to_string(a) + " and " + std::to_string(b) +
                    " differ");
  }
}

}  // namespace

bool PairSet::Contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
}

double ObjectiveValue(const WeightMatrix& a, const Ranking& ranking) {
  CheckSameSize(a.size(), ranking.size());
  const auto& order = ranking.order();
  double sum = 0.0;
  for (size_t p = 0; p < order.size(); ++p) {
    const auto row = a.row(order[p]);
    for (size_t q = p + 1; q < order.size(); ++q) sum += row[order[q]];
  }
  return sum;
}

double UpperTriangularSum(const WeightMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) sum += a(i, j);
  }
  return sum;
}

WeightMatrix PermuteMatrix(const WeightMatrix& a, const Ranking& ranking) {
  CheckSameSize(a.size(), ranking.size());
  const int n = a.size();
  std::vector<double> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b[ranking.PositionOf(i) * n + ranking.PositionOf(j)] = a(i, j);
    }
  }
  std::vector<std::string> labels;
  if (a.has_labels()) {
    for (int p = 0; p < n; ++p) labels.push_back(a.labels()[ranking.ItemAt(p)]);
  }
  return WeightMatrix(n, std::move(b), std::move(labels));
}

std::int64_t KendallTauDistance(const Ranking& a, const Ranking& b) {
  CheckSameSize(a.size(), b.size());
  std::int64_t d = 0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      if (a.Before(i, j) != b.Before(i, j)) ++d;
    }
  }
  return d;
}

PairPartition ConcordantDiscordant(const Ranking& a, const Ranking& b) {
  CheckSameSize(a.size(), b.size());
  PairPartition out;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      auto& target = a.Before(i, j) == b.Before(i, j) ? out.concordant
                                                      : out.discordant;
      target.pairs.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace rankability
