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

#include "rankability/core/linear_order.h"

#include <string>
#include <vector>

#include "rankability/core/errors.h"

namespace rankability {

std::string ConstraintViolation::ToString() const {
  std::string s = constraint + "(";
  for (size_t k = 0; k < items.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(items[k]);
  }
  return s + ")";
}

LinearOrder LinearOrderFromRanking(const Ranking& ranking) {
  const int n = ranking.size();
  LinearOrder x(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && ranking.Before(i, j)) x.Set(i, j, 1);
    }
  }
  return x;
}

std::vector<ConstraintViolation> CheckLinearOrder(const LinearOrder& x) {
  const int n = x.size();
  std::vector<ConstraintViolation> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && x(i, j) > 1) {
        out.push_back({kBinaryConstraint, {i + 1, j + 1}});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x(i, j) + x(j, i) != 1) {
        out.push_back({kTournamentConstraint, {i + 1, j + 1}});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = i + 1; k < n; ++k) {
        if (j == k) continue;
        if (x(i, j) + x(j, k) + x(k, i) > 2) {
          out.push_back({kDicycleConstraint, {i + 1, j + 1, k + 1}});
        }
      }
    }
  }
  return out;
}

Ranking RankingFromLinearOrder(const LinearOrder& x) {
  const std::vector<ConstraintViolation> violations = CheckLinearOrder(x);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInfeasibleSolution,
                "violates " + violations.front().ToString());
  }
  // In an acyclic tournament the number of predecessors of i is its place.
  const int n = x.size();
  std::vector<int> positions(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && x(j, i) == 1) ++positions[i];
    }
  }
  return Ranking::FromPositions(positions);
}

}  // namespace rankability
