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

// From games to rankability: win matrices, how well a ranking explains
// past games (hindsight) and predicts playoff games (foresight), and the
// per-season report combining the exact solvers with rating baselines.
//
// With half-credit ties, the hindsight accuracy of a ranking equals its LOP
// objective divided by the number of games, so it never exceeds the degree
// of linearity and reaches it exactly at every optimal ranking.

#ifndef RANKABILITY_SPORTS_ANALYSIS_H_
#define RANKABILITY_SPORTS_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankability/core/ranking.h"
#include "rankability/core/weight_matrix.h"
#include "rankability/kt/kt.h"
#include "rankability/lop/solver_config.h"
#include "rankability/sports/games.h"

namespace rankability {

// kHalf: a tied game counts half correct. kStrict: a tie counts incorrect.
enum class TieMode { kHalf, kStrict };

std::string_view TieModeName(TieMode mode);

// a_ij = wins of i over j + 0.5 * ties between i and j, over the games of
// `stage`; labeled by team. Throws kEmptyStage without such games.
WeightMatrix BuildWinMatrix(const GameSet& games, Stage stage);

// Share of `stage` games won by the team ranked higher in `ranking`.
// Throws kEmptyStage without games, kDimensionMismatch when the ranking does
// not cover the teams.
double HindsightAccuracy(const GameSet& games, Stage stage,
                         const Ranking& ranking,
                         TieMode ties = TieMode::kHalf);

// HindsightAccuracy over the playoff games.
double ForesightAccuracy(const GameSet& games, const Ranking& ranking,
                         TieMode ties = TieMode::kHalf);

struct DivergenceResult {
  // |foresight(first) - foresight(second)| for the maximally distant pair of
  // optimal regular-season rankings. That pair need not maximize the
  // foresight gap over all pairs of optima.
  double divergence = 0.0;
  double first_foresight = 0.0;
  double second_foresight = 0.0;
  double k_star = 0.0;
  KtResult kt;
};

// Solves the regular-season LOP and its diameter, then compares the two
// witnesses on the playoff games. Throws kTimeout if k* is not proven.
DivergenceResult ForesightDivergence(const GameSet& games,
                                     const SolverConfig& config = {},
                                     TieMode ties = TieMode::kHalf);

// Pearson correlation coefficient. Throws kDimensionMismatch for unequal or
// too short series and kUndefinedCorrelation when either has zero variance.
double PearsonCorrelation(std::span<const double> xs,
                          std::span<const double> ys);

struct AccuracyByMethod {
  double optimal = 0.0;
  double colley = 0.0;
  double massey = 0.0;
};

struct SeasonReport {
  int season = 0;
  std::vector<std::string> teams;
  int regular_games = 0;
  int playoff_games = 0;

  double k_star = 0.0;
  double lambda = 0.0;
  bool lop_proven = false;
  Ranking optimal = Ranking::Identity(2);
  Ranking colley = Ranking::Identity(2);
  Ranking massey = Ranking::Identity(2);
  bool massey_disconnected = false;

  // Present once k* is proven.
  std::optional<KtResult> kt;
  // Present when the optima could be listed within the time limit.
  std::optional<std::int64_t> optima_count;
  bool optima_truncated = false;

  AccuracyByMethod hindsight;
  // Present when the season has playoff games.
  std::optional<AccuracyByMethod> foresight;
  // Foresight of the two diameter witnesses and their gap; present with
  // playoff games and a proven diameter.
  std::optional<double> foresight_first;
  std::optional<double> foresight_second;
  std::optional<double> foresight_divergence;
};

// Report for one season's games. Each solver call gets the full time limit
// of `config`. Throws kEmptyStage without regular-season games.
SeasonReport BuildSeasonReport(const GameSet& games,
                               const SolverConfig& config = {},
                               TieMode ties = TieMode::kHalf);

}  // namespace rankability

#endif  // RANKABILITY_SPORTS_ANALYSIS_H_
