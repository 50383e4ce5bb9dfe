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

#include "rankability/core/matrix_csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "rankability/core/errors.h"

namespace rankability {
namespace {

constexpr std::string_view kLabelsPrefix = "labels:";

std::string FormatWeight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", w);
  return buf;
}

std::string QuoteField(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos &&
      s == TrimWhitespace(s)) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string_view TrimWhitespace(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          field += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      // Whitespace before an opening quote is padding.
      if (TrimWhitespace(field).empty()) field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(TrimWhitespace(field)));
      field.clear();
      was_quoted = false;
    } else if (!(was_quoted && (c == ' ' || c == '\t' || c == '\r'))) {
      field += c;
    }
  }
  fields.push_back(was_quoted ? field : std::string(TrimWhitespace(field)));
  return fields;
}

bool ParseDouble(std::string_view field, double* value) {
  field = TrimWhitespace(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, *value);
  return ec == std::errc() && ptr == end && std::isfinite(*value);
}

WeightMatrix ReadMatrixCsv(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = TrimWhitespace(line);
    if (trimmed.empty()) continue;
    if (!seen_content && trimmed.starts_with(kLabelsPrefix)) {
      seen_content = true;
      std::string_view rest = trimmed.substr(kLabelsPrefix.size());
      labels = SplitCsvLine(rest);
      if (!labels.empty() && labels.front().empty()) {
        labels.erase(labels.begin());
      }
      for (const auto& name : labels) {
        if (name.empty()) throw ParseError(line_no, "empty label");
      }
      continue;
    }
    seen_content = true;
    std::vector<double> row;
    for (const auto& field : SplitCsvLine(trimmed)) {
      double w;
      if (!ParseDouble(field, &w)) {
        throw ParseError(line_no, "not a number: '" + field + "'");
      }
      if (w < 0.0) {
        throw ParseError(line_no, "negative weight " + field);
      }
      row.push_back(w);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, "expected " +
                                    std::to_string(rows.front().size()) +
                                    " columns, got " +
                                    std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no matrix rows");
  }
  if (rows.size() != rows.front().size()) {
    throw ParseError(line_no, "matrix has " + std::to_string(rows.size()) +
                                  " rows but " +
                                  std::to_string(rows.front().size()) +
                                  " columns");
  }
  if (!labels.empty() && labels.size() != rows.size()) {
    throw ParseError(1, "expected " + std::to_string(rows.size()) +
                            " labels, got " + std::to_string(labels.size()));
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][i] != 0.0) {
      throw ParseError(0, "diagonal entry " + std::to_string(i + 1) +
                              " must be zero");
    }
  }
  return WeightMatrix::FromRows(rows, std::move(labels));
}

void WriteMatrixCsv(std::ostream& out, const WeightMatrix& a) {
  if (a.has_labels()) {
    out << kLabelsPrefix;
    for (int i = 0; i < a.size(); ++i) {
      if (i > 0) out << ',';
      out << QuoteField(a.labels()[i]);
    }
    out << '\n';
  }
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (j > 0) out << ',';
      out << FormatWeight(a(i, j));
    }
    out << '\n';
  }
}

}  // namespace rankability
