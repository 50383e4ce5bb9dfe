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

#include "rankability/core/ranking.h"

#include <numeric>
#include <string>
#include <utility>

#include "rankability/core/errors.h"

namespace rankability {
namespace {

// Throws unless `items` (0-based) is a permutation of 0..n-1.
void CheckPermutation(const std::vector<int>& items, const char* what) {
  const int n = static_cast<int>(items.size());
  if (n == 0) {
    throw Error(ErrorCode::kMalformedPermutation,
                std::string(what) + " is empty");
  }
  std::vector<bool> seen(n, false);
  for (int v : items) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kMalformedPermutation,
                  std::string(what) + " entry " + std::to_string(v + 1) +
                      " is outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw Error(ErrorCode::kMalformedPermutation,
                  std::string(what) + " repeats " + std::to_string(v + 1));
    }
    seen[v] = true;
  }
}

}  // namespace

Ranking::Ranking(std::vector<int> order)
    : order_(std::move(order)), positions_(order_.size()) {
  for (int p = 0; p < size(); ++p) positions_[order_[p]] = p;
}

Ranking Ranking::FromOrder(std::span<const int> order) {
  std::vector<int> zero_based(order.begin(), order.end());
  for (int& v : zero_based) --v;
  CheckPermutation(zero_based, "order");
  return Ranking(std::move(zero_based));
}

Ranking Ranking::FromPositions(std::span<const int> positions) {
  std::vector<int> zero_based(positions.begin(), positions.end());
  for (int& v : zero_based) --v;
  CheckPermutation(zero_based, "positions");
  std::vector<int> order(zero_based.size());
  for (size_t i = 0; i < zero_based.size(); ++i) {
    order[zero_based[i]] = static_cast<int>(i);
  }
  return Ranking(std::move(order));
}

Ranking Ranking::FromZeroBasedOrder(std::vector<int> order) {
  CheckPermutation(order, "order");
  return Ranking(std::move(order));
}

Ranking Ranking::Identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return FromZeroBasedOrder(std::move(order));
}

std::vector<int> Ranking::OrderOneBased() const {
  std::vector<int> out = order_;
  for (int& v : out) ++v;
  return out;
}

std::vector<int> Ranking::PositionsOneBased() const {
  std::vector<int> out = positions_;
  for (int& v : out) ++v;
  return out;
}

Ranking Ranking::Reversed() const {
  return Ranking(std::vector<int>(order_.rbegin(), order_.rend()));
}

std::string Ranking::ToString() const {
  std::string s = "(";
  for (int p = 0; p < size(); ++p) {
    if (p > 0) s += ',';
    s += std::to_string(order_[p] + 1);
  }
  s += ')';
  return s;
}

}  // namespace rankability
