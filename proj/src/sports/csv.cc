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

#include "rankability/sports/csv.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "rankability/core/errors.h"
#include "rankability/core/matrix_csv.h"

namespace rankability {
namespace {

// Reads CSV records, skipping blank lines and stripping a UTF-8 byte order
// mark and trailing CR. `line()` is the 1-based number of the last record.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  bool Next(std::vector<std::string>* fields) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (line_ == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (TrimWhitespace(raw).empty()) continue;
      *fields = SplitCsvLine(raw);
      return true;
    }
    return false;
  }
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<size_t> Column(const std::vector<std::string>& header,
                             std::string_view name) {
  for (size_t k = 0; k < header.size(); ++k) {
    if (Lower(header[k]) == name) return k;
  }
  return std::nullopt;
}

bool ParseInt(std::string_view field, std::int64_t* value) {
  field = TrimWhitespace(field);
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), *value);
  if (ec == std::errc() && ptr == field.data() + field.size()) return true;
  // Exports sometimes write integral scores as "24.0".
  double d;
  if (ParseDouble(field, &d) && d == static_cast<double>(
                                        static_cast<std::int64_t>(d))) {
    *value = static_cast<std::int64_t>(d);
    return true;
  }
  return false;
}

// Column positions of one recognized games layout.
struct GamesLayout {
  size_t season, stage, team_a, team_b, score_a, score_b;
  std::optional<size_t> date;
  bool playoff_flag;  // stage column holds TRUE/FALSE
};

std::optional<GamesLayout> DetectLayout(
    const std::vector<std::string>& header) {
  auto build = [&](std::string_view season, std::string_view stage,
                   std::string_view a, std::string_view b,
                   std::string_view sa, std::string_view sb,
                   std::string_view date,
                   bool flag) -> std::optional<GamesLayout> {
    auto c1 = Column(header, season), c2 = Column(header, stage),
         c3 = Column(header, a), c4 = Column(header, b),
         c5 = Column(header, sa), c6 = Column(header, sb);
    if (!c1 || !c2 || !c3 || !c4 || !c5 || !c6) return std::nullopt;
    return GamesLayout{*c1, *c2, *c3, *c4, *c5, *c6, Column(header, date),
                       flag};
  };
  if (auto plain = build("season", "stage", "team_a", "team_b", "score_a",
                         "score_b", "date", false)) {
    return plain;
  }
  return build("schedule_season", "schedule_playoff", "team_home",
               "team_away", "score_home", "score_away", "schedule_date",
               true);
}

std::string Canonical(const std::string& name, const AliasMap* aliases) {
  if (aliases == nullptr) return name;
  auto it = aliases->find(name);
  return it == aliases->end() ? name : it->second;
}

// "9/1", "4", "2.5".
bool ParseRank(std::string_view field, double* value) {
  const size_t slash = field.find('/');
  if (slash == std::string_view::npos) return ParseDouble(field, value);
  double num, den;
  if (!ParseDouble(field.substr(0, slash), &num) ||
      !ParseDouble(field.substr(slash + 1), &den) || den == 0.0) {
    return false;
  }
  *value = num / den;
  return true;
}

}  // namespace

AliasMap ReadAliasCsv(std::istream& in) {
  RecordReader reader(in);
  AliasMap aliases;
  std::vector<std::string> fields;
  bool first = true;
  while (reader.Next(&fields)) {
    if (fields.size() != 2) {
      throw ParseError(reader.line(),
                       "alias rows need raw_name,canonical_name");
    }
    if (first && Lower(fields[0]) == "raw_name" &&
        Lower(fields[1]) == "canonical_name") {
      first = false;
      continue;
    }
    first = false;
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(reader.line(), "empty team name in alias map");
    }
    aliases[fields[0]] = fields[1];
  }
  return aliases;
}

GameSet ReadGamesCsv(std::istream& in, const AliasMap* aliases) {
  RecordReader reader(in);
  std::vector<std::string> header;
  if (!reader.Next(&header)) {
    throw Error(ErrorCode::kEmptyInput, "games file is empty");
  }
  const std::optional<GamesLayout> layout = DetectLayout(header);
  if (!layout.has_value()) {
    throw ParseError(reader.line(),
                     "header needs season,stage,team_a,team_b,score_a,"
                     "score_b");
  }
  const GamesLayout& col = *layout;
  const size_t needed = std::max({col.season, col.stage, col.team_a,
                                  col.team_b, col.score_a, col.score_b}) +
                        1;

  std::vector<GameRecord> games;
  std::vector<std::string> fields;
  while (reader.Next(&fields)) {
    const int line = reader.line();
    if (fields.size() < needed) {
      throw ParseError(line, "expected at least " + std::to_string(needed) +
                                 " fields, got " +
                                 std::to_string(fields.size()));
    }
    if (col.playoff_flag &&
        (TrimWhitespace(fields[col.score_a]).empty() ||
         TrimWhitespace(fields[col.score_b]).empty())) {
      continue;  // scheduled but not played
    }
    GameRecord g;
    std::int64_t season;
    if (!ParseInt(fields[col.season], &season)) {
      throw ParseError(line, "bad season '" + fields[col.season] + "'");
    }
    g.season = static_cast<int>(season);

    const std::string stage = Lower(TrimWhitespace(fields[col.stage]));
    if (col.playoff_flag) {
      if (stage == "true") {
        g.stage = Stage::kPlayoff;
      } else if (stage == "false") {
        g.stage = Stage::kRegular;
      } else {
        throw ParseError(line, "playoff flag must be TRUE or FALSE");
      }
    } else if (stage == "regular") {
      g.stage = Stage::kRegular;
    } else if (stage == "playoff") {
      g.stage = Stage::kPlayoff;
    } else {
      throw ParseError(line, "stage must be regular or playoff, got '" +
                                 fields[col.stage] + "'");
    }

    g.team_a = Canonical(fields[col.team_a], aliases);
    g.team_b = Canonical(fields[col.team_b], aliases);
    if (g.team_a.empty() || g.team_b.empty()) {
      throw ParseError(line, "empty team name");
    }
    if (g.team_a == g.team_b) {
      throw ParseError(line, "team '" + g.team_a + "' cannot play itself");
    }
    if (!ParseInt(fields[col.score_a], &g.score_a) ||
        !ParseInt(fields[col.score_b], &g.score_b) || g.score_a < 0 ||
        g.score_b < 0) {
      throw ParseError(line, "scores must be nonnegative integers");
    }
    if (col.date.has_value() && *col.date < fields.size() &&
        !fields[*col.date].empty()) {
      g.date = fields[*col.date];
    }
    games.push_back(std::move(g));
  }
  if (games.empty()) {
    throw Error(ErrorCode::kEmptyInput, "games file has no played games");
  }
  return GameSet(std::move(games));
}

WeightMatrix ReadFeatureTableCsv(std::istream& in) {
  RecordReader reader(in);
  std::vector<std::string> header;
  if (!reader.Next(&header)) {
    throw Error(ErrorCode::kEmptyInput, "feature table is empty");
  }
  if (header.size() < 2) {
    throw ParseError(reader.line(), "header needs item and a feature column");
  }
  const size_t features = header.size() - 1;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> ranks;
  std::vector<std::string> fields;
  while (reader.Next(&fields)) {
    if (fields.size() != header.size()) {
      throw ParseError(reader.line(),
                       "expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(features);
    for (size_t f = 0; f < features; ++f) {
      if (!ParseRank(fields[f + 1], &row[f])) {
        throw ParseError(reader.line(),
                         "bad rank '" + fields[f + 1] + "' for feature '" +
                             header[f + 1] + "'");
      }
    }
    labels.push_back(fields[0]);
    ranks.push_back(std::move(row));
  }
  const int n = static_cast<int>(labels.size());
  if (n < 2) {
    throw ParseError(reader.line(), "feature table needs at least two items");
  }
  std::vector<double> w(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (size_t f = 0; f < features; ++f) {
        if (ranks[i][f] < ranks[j][f]) {
          w[i * n + j] += 1.0;
        } else if (ranks[i][f] == ranks[j][f]) {
          w[i * n + j] += 0.5;
        }
      }
    }
  }
  return WeightMatrix(n, std::move(w), std::move(labels));
}

}  // namespace rankability
