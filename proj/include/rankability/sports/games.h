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

#ifndef RANKABILITY_SPORTS_GAMES_H_
#define RANKABILITY_SPORTS_GAMES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankability {

enum class Stage { kRegular, kPlayoff };

std::string_view StageName(Stage stage);

struct GameRecord {
  int season = 0;
  Stage stage = Stage::kRegular;
  std::string team_a;
  std::string team_b;
  std::int64_t score_a = 0;
  std::int64_t score_b = 0;
  std::optional<std::string> date;
};

// Games plus a team index. Teams are sorted lexicographically by identifier,
// so the same games always produce the same indices regardless of row order.
class GameSet {
 public:
  // Throws kInvalidConfig for a game with identical teams or a negative
  // score.
  explicit GameSet(std::vector<GameRecord> games);

  int team_count() const { return static_cast<int>(teams_.size()); }
  const std::vector<std::string>& teams() const { return teams_; }
  const std::vector<GameRecord>& games() const { return games_; }
  bool empty() const { return games_.empty(); }

  // 0-based index; throws kDimensionMismatch for an unknown team.
  int IndexOf(std::string_view team) const;

  int CountStage(Stage stage) const;
  // Distinct seasons, ascending.
  std::vector<int> Seasons() const;
  // Games of one season, re-indexed over the teams that appear in it.
  GameSet Season(int season) const;

 private:
  std::vector<GameRecord> games_;
  std::vector<std::string> teams_;
};

}  // namespace rankability

#endif  // RANKABILITY_SPORTS_GAMES_H_
