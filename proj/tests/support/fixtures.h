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

#ifndef RANKABILITY_TESTS_SUPPORT_FIXTURES_H_
#define RANKABILITY_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankability/core/matrix_csv.h"
#include "rankability/core/ranking.h"
#include "rankability/core/weight_matrix.h"
#include "rankability/sports/csv.h"
#include "support/brute_force.h"

namespace rankability {

// Readable gtest failure messages.
inline void PrintTo(const Ranking& r, std::ostream* os) { *os << r.ToString(); }

}  // namespace rankability

namespace rankability::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(RANKABILITY_DATA_DIR) + "/" + name;
}

inline std::ifstream OpenData(const std::string& name) {
  std::ifstream in(DataPath(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return in;
}

inline WeightMatrix LoadMatrix(const std::string& name) {
  std::ifstream in = OpenData(name);
  return ReadMatrixCsv(in);
}

inline WeightMatrix CollegeMatrix() { return LoadMatrix("college_matrix.csv"); }

inline WeightMatrix CollegeFromFeatures() {
  std::ifstream in = OpenData("college_features.csv");
  return ReadFeatureTableCsv(in);
}

// Digraphs I-IV on three vertices, unit edge weights.
inline WeightMatrix Digraph(int k) {
  return LoadMatrix("digraph_" + std::to_string(k) + ".csv");
}

// The six optimal college rankings, 1-based order form, as listed with the
// worked example.
inline std::vector<Ranking> CollegeOptima() {
  return {
      Ranking::FromOrder({10, 7, 8, 5, 1, 6, 9, 2, 4, 3}),
      Ranking::FromOrder({10, 7, 5, 8, 1, 6, 9, 2, 4, 3}),
      Ranking::FromOrder({10, 7, 5, 1, 8, 6, 9, 2, 4, 3}),
      Ranking::FromOrder({10, 7, 8, 5, 1, 6, 9, 2, 3, 4}),
      Ranking::FromOrder({10, 7, 5, 8, 1, 6, 9, 2, 3, 4}),
      Ranking::FromOrder({10, 7, 5, 1, 8, 6, 9, 2, 3, 4}),
  };
}

inline WeightMatrix ToWeightMatrix(const Matrix& rows) {
  return WeightMatrix::FromRows(rows);
}

inline Matrix ToRows(const WeightMatrix& a) {
  Matrix rows(a.size(), std::vector<double>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

}  // namespace rankability::testing

#endif  // RANKABILITY_TESTS_SUPPORT_FIXTURES_H_
