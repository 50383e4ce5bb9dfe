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

#include "rankability/sports/games.h"

#include <algorithm>

#include "rankability/core/errors.h"

namespace rankability {

std::string_view StageName(Stage stage) {
  return stage == Stage::kRegular ? "regular" : "playoff";
}

GameSet::GameSet(std::vector<GameRecord> games) : games_(std::move(games)) {
  for (const GameRecord& g : games_) {
    if (g.team_a == g.team_b) {
      throw Error(ErrorCode::kInvalidConfig,
                  "team '" + g.team_a + "' cannot play itself");
    }
    if (g.score_a < 0 || g.score_b < 0) {
      throw Error(ErrorCode::kInvalidConfig,
                  "negative score in " + g.team_a + " vs " + g.team_b);
    }
    teams_.push_back(g.team_a);
    teams_.push_back(g.team_b);
  }
  std::sort(teams_.begin(), teams_.end());
  teams_.erase(std::unique(teams_.begin(), teams_.end()), teams_.end());
}

int GameSet::IndexOf(std::string_view team) const {
  auto it = std::lower_bound(teams_.begin(), teams_.end(), team);
  if (it == teams_.end() || *it != team) {
    throw Error(ErrorCode::kDimensionMismatch,
                "unknown team '" + std::string(team) + "'");
  }
  return static_cast<int>(it - teams_.begin());
}

int GameSet::CountStage(Stage stage) const {
  return static_cast<int>(
      std::count_if(games_.begin(), games_.end(),
                    [&](const GameRecord& g) { return g.stage == stage; }));
}

std::vector<int> GameSet::Seasons() const {
  std::vector<int> seasons;
  for (const GameRecord& g : games_) seasons.push_back(g.season);
  std::sort(seasons.begin(), seasons.end());
  seasons.erase(std::unique(seasons.begin(), seasons.end()), seasons.end());
  return seasons;
}

GameSet GameSet::Season(int season) const {
  std::vector<GameRecord> subset;
  for (const GameRecord& g : games_) {
    if (g.season == season) subset.push_back(g);
  }
  return GameSet(std::move(subset));
}

}  // namespace rankability
