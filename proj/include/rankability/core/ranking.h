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

#ifndef RANKABILITY_CORE_RANKING_H_
#define RANKABILITY_CORE_RANKING_H_

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rankability {

// A permutation of n items, kept in both forms:
//   order     - items from best to worst,
//   positions - positions[item] is the item's place (0 = best).
//
// Internally everything is 0-based. The 1-based factories and accessors are
// the boundary used for parsing and serialization, where the order form
// (10,7,8,...) lists item numbers starting at 1.
//
// Rankings compare lexicographically by order form.
class Ranking {
 public:
  // `order` lists 1-based items best first. Throws kMalformedPermutation on
  // duplicates or out-of-range items.
  static Ranking FromOrder(std::span<const int> order);
  static Ranking FromOrder(std::initializer_list<int> order) {
    return FromOrder(std::span<const int>(order.begin(), order.size()));
  }
  // `positions[i]` is the 1-based place of (0-based) item i.
  static Ranking FromPositions(std::span<const int> positions);
  static Ranking FromZeroBasedOrder(std::vector<int> order);
  static Ranking Identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& positions() const { return positions_; }
  int ItemAt(int position) const { return order_[position]; }
  int PositionOf(int item) const { return positions_[item]; }
  // True when item i is ranked ahead of item j.
  bool Before(int i, int j) const { return positions_[i] < positions_[j]; }

  std::vector<int> OrderOneBased() const;
  std::vector<int> PositionsOneBased() const;

  // position'[i] = n - 1 - position[i].
  Ranking Reversed() const;

  // "(10,7,8,...)" in 1-based order form.
  std::string ToString() const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }
  friend std::strong_ordering operator<=>(const Ranking& a,
                                          const Ranking& b) {
    return a.order_ <=> b.order_;
  }

 private:
  explicit Ranking(std::vector<int> order);

  std::vector<int> order_;
  std::vector<int> positions_;
};

}  // namespace rankability

#endif  // RANKABILITY_CORE_RANKING_H_
