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

#ifndef RANKABILITY_CORE_MATRIX_CSV_H_
#define RANKABILITY_CORE_MATRIX_CSV_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rankability/core/weight_matrix.h"

namespace rankability {

// Matrix CSV:
//
//   labels:Amherst,Bowdoin,Carleton      <- optional first line
//   0,5,4.5
//   0,0,3
//   0.5,2,0
//
// Blank lines are skipped. Malformed input raises ParseError with the
// 1-based line number; an empty stream raises kEmptyInput.
WeightMatrix ReadMatrixCsv(std::istream& in);
void WriteMatrixCsv(std::ostream& out, const WeightMatrix& a);

// Shared CSV plumbing. Splits one record on commas, honoring double-quoted
// fields ("" escapes a quote), and trims unquoted whitespace.
std::vector<std::string> SplitCsvLine(std::string_view line);
std::string_view TrimWhitespace(std::string_view s);
// Parses a finite double, consuming the whole field.
bool ParseDouble(std::string_view field, double* value);

}  // namespace rankability

#endif  // RANKABILITY_CORE_MATRIX_CSV_H_
