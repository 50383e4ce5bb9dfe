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

#ifndef RANKABILITY_CORE_LINEAR_ORDER_H_
#define RANKABILITY_CORE_LINEAR_ORDER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rankability/core/ranking.h"

namespace rankability {

// Binary decision matrix x of a linear ordering problem: x(i, j) = 1 means
// item i precedes item j. A feasible matrix is a spanning tournament
// (x_ij + x_ji = 1 for i != j) without directed 3-cycles. The diagonal is
// unused and kept at zero.
class LinearOrder {
 public:
  explicit LinearOrder(int n) : n_(n), x_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }
  std::uint8_t operator()(int i, int j) const { return x_[i * n_ + j]; }
  void Set(int i, int j, std::uint8_t value) { x_[i * n_ + j] = value; }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> x_;
};

// One violated constraint. `items` are 1-based, in the order the
// constraint mentions them.
struct ConstraintViolation {
  std::string constraint;
  std::vector<int> items;

  std::string ToString() const;
};

inline constexpr char kTournamentConstraint[] = "tournament";
inline constexpr char kDicycleConstraint[] = "3-dicycle";
inline constexpr char kBinaryConstraint[] = "binary";

// x_ij = 1 iff position(i) < position(j).
LinearOrder LinearOrderFromRanking(const Ranking& ranking);

// Lists every violated tournament / 3-dicycle / binary constraint. The
// 3-dicycle family is checked as x_ij + x_jk + x_ki <= 2 for all i < j,
// i < k, j != k, which covers both orientations of every triangle.
std::vector<ConstraintViolation> CheckLinearOrder(const LinearOrder& x);

// Inverse of LinearOrderFromRanking. Throws kInfeasibleSolution naming the
// first violated constraint.
Ranking RankingFromLinearOrder(const LinearOrder& x);

}  // namespace rankability

#endif  // RANKABILITY_CORE_LINEAR_ORDER_H_
