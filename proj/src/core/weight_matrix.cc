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

#include "rankability/core/weight_matrix.h"

#include <cmath>
#include <string>
#include <utility>

#include "rankability/core/errors.h"

namespace rankability {

WeightMatrix::WeightMatrix(int n, std::vector<double> weights,
                           std::vector<std::string> labels)
    : n_(n), weights_(std::move(weights)), labels_(std::move(labels)) {
  if (n_ < 2) {
    throw Error(ErrorCode::kInvalidMatrix,
                "need at least 2 items, got " + std::to_string(n_));
  }
  if (weights_.size() != static_cast<size_t>(n_) * n_) {
    throw Error(ErrorCode::kInvalidMatrix,
                "expected " + std::to_string(n_ * n_) + " weights, got " +
                    std::to_string(weights_.size()));
  }
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(n_)) {
    throw Error(ErrorCode::kInvalidMatrix,
                "expected " + std::to_string(n_) + " labels, got " +
                    std::to_string(labels_.size()));
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const double w = (*this)(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") must be a finite nonnegative number");
      }
      if (i == j && w != 0.0) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "diagonal entry " + std::to_string(i + 1) +
                        " must be zero");
      }
      total_ += w;
    }
  }
  if (!std::isfinite(total_)) {
    throw Error(ErrorCode::kInvalidMatrix, "total weight overflows");
  }
}

WeightMatrix WeightMatrix::FromRows(
    const std::vector<std::vector<double>>& rows,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::kInvalidMatrix, "matrix is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return WeightMatrix(n, std::move(flat), std::move(labels));
}

std::string WeightMatrix::Label(int i) const {
  return labels_.empty() ? std::to_string(i + 1) : labels_[i];
}

WeightMatrix WeightMatrix::Scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidMatrix, "scale must be positive");
  }
  std::vector<double> w = weights_;
  for (double& v : w) v *= c;
  return WeightMatrix(n_, std::move(w), labels_);
}

}  // namespace rankability
