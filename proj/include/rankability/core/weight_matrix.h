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

#ifndef RANKABILITY_CORE_WEIGHT_MATRIX_H_
#define RANKABILITY_CORE_WEIGHT_MATRIX_H_

#include <span>
#include <string>
#include <vector>

namespace rankability {

// Dense n x n matrix of nonnegative pairwise weights a_ij with a zero
// diagonal: the input of a linear ordering problem. Entry (i, j) is the
// weight earned when item i is ranked ahead of item j. Indices are 0-based.
//
// Immutable after construction; the constructor rejects negative, NaN or
// infinite weights, nonzero diagonal entries and n < 2 with
// ErrorCode::kInvalidMatrix.
class WeightMatrix {
 public:
  WeightMatrix(int n, std::vector<double> weights,
               std::vector<std::string> labels = {});

  static WeightMatrix FromRows(const std::vector<std::vector<double>>& rows,
                               std::vector<std::string> labels = {});

  int size() const { return n_; }
  double operator()(int i, int j) const { return weights_[i * n_ + j]; }
  std::span<const double> row(int i) const {
    return {weights_.data() + static_cast<size_t>(i) * n_,
            static_cast<size_t>(n_)};
  }
  std::span<const double> data() const { return weights_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of item i, or its 1-based index when the matrix is unlabeled.
  std::string Label(int i) const;

  // Sum of all off-diagonal entries.
  double TotalSum() const { return total_; }

  // Returns c * A for c > 0.
  WeightMatrix Scaled(double c) const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_ && a.labels_ == b.labels_;
  }

 private:
  int n_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
  double total_ = 0.0;
};

}  // namespace rankability

#endif  // RANKABILITY_CORE_WEIGHT_MATRIX_H_
