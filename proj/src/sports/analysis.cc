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

#include "rankability/sports/analysis.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankability/core/errors.h"
#include "rankability/lop/lop.h"
#include "rankability/rating/rating.h"

namespace rankability {
namespace {

void RequireGames(const GameSet& games, Stage stage) {
  if (games.CountStage(stage) == 0) {
    throw Error(ErrorCode::kEmptyStage,
                "no " + std::string(StageName(stage)) + " games");
  }
}

}  // namespace

std::string_view TieModeName(TieMode mode) {
  return mode == TieMode::kHalf ? "half" : "strict";
}

WeightMatrix BuildWinMatrix(const GameSet& games, Stage stage) {
  RequireGames(games, stage);
  const int n = games.team_count();
  std::vector<double> w(static_cast<size_t>(n) * n, 0.0);
  for (const GameRecord& g : games.games()) {
    if (g.stage != stage) continue;
    const int a = games.IndexOf(g.team_a);
    const int b = games.IndexOf(g.team_b);
    if (g.score_a > g.score_b) {
      w[a * n + b] += 1.0;
    } else if (g.score_b > g.score_a) {
      w[b * n + a] += 1.0;
    } else {
      w[a * n + b] += 0.5;
      w[b * n + a] += 0.5;
    }
  }
  return WeightMatrix(n, std::move(w), games.teams());
}

double HindsightAccuracy(const GameSet& games, Stage stage,
                         const Ranking& ranking, TieMode ties) {
  RequireGames(games, stage);
  if (ranking.size() != games.team_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "ranking has " + std::to_string(ranking.size()) +
                    " items for " + std::to_string(games.team_count()) +
                    " teams");
  }
  double correct = 0.0;
  int played = 0;
  for (const GameRecord& g : games.games()) {
    if (g.stage != stage) continue;
    ++played;
    if (g.score_a == g.score_b) {
      if (ties == TieMode::kHalf) correct += 0.5;
      continue;
    }
    const int winner = games.IndexOf(g.score_a > g.score_b ? g.team_a
                                                            : g.team_b);
    const int loser = games.IndexOf(g.score_a > g.score_b ? g.team_b
                                                           : g.team_a);
    if (ranking.Before(winner, loser)) correct += 1.0;
  }
  return correct / played;
}

double ForesightAccuracy(const GameSet& games, const Ranking& ranking,
                         TieMode ties) {
  return HindsightAccuracy(games, Stage::kPlayoff, ranking, ties);
}

DivergenceResult ForesightDivergence(const GameSet& games,
                                     const SolverConfig& config,
                                     TieMode ties) {
  RequireGames(games, Stage::kPlayoff);
  const WeightMatrix a = BuildWinMatrix(games, Stage::kRegular);
  const LopResult lop = SolveLop(a, config);
  if (!lop.proven) {
    throw Error(ErrorCode::kTimeout, "optimal value not proven");
  }
  DivergenceResult out;
  out.k_star = lop.optimal_value;
  out.kt = SolveKt(a, lop.optimal_value, config);
  out.first_foresight = ForesightAccuracy(games, out.kt.first, ties);
  out.second_foresight = ForesightAccuracy(games, out.kt.second, ties);
  out.divergence = std::abs(out.first_foresight - out.second_foresight);
  return out;
}

double PearsonCorrelation(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "correlation needs two series of equal length >= 2");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kUndefinedCorrelation,
                "a series with zero variance has no correlation");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

SeasonReport BuildSeasonReport(const GameSet& games,
                               const SolverConfig& config, TieMode ties) {
  RequireGames(games, Stage::kRegular);
  SeasonReport report;
  const std::vector<int> seasons = games.Seasons();
  report.season = seasons.front();
  report.teams = games.teams();
  report.regular_games = games.CountStage(Stage::kRegular);
  report.playoff_games = games.CountStage(Stage::kPlayoff);

  const WeightMatrix a = BuildWinMatrix(games, Stage::kRegular);
  const LopResult lop = SolveLop(a, config);
  report.k_star = lop.optimal_value;
  report.lambda = DegreeOfLinearity(a, lop.optimal_value);
  report.lop_proven = lop.proven;
  report.optimal = lop.ranking;

  report.colley = RankingFromRatings(ColleyRatings(games, Stage::kRegular));
  const RatingVector massey = MasseyRatings(games, Stage::kRegular);
  report.massey = RankingFromRatings(massey);
  report.massey_disconnected = massey.disconnected;

  if (lop.proven) {
    report.kt = SolveKt(a, lop.optimal_value, config);
    try {
      const OptimaSet optima = EnumerateOptima(a, lop.optimal_value, config);
      report.optima_count = static_cast<std::int64_t>(optima.rankings.size());
      report.optima_truncated = optima.truncated;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTimeout) throw;
    }
  }

  auto accuracy = [&](Stage stage, const Ranking& r) {
    return HindsightAccuracy(games, stage, r, ties);
  };
  report.hindsight = {accuracy(Stage::kRegular, report.optimal),
                      accuracy(Stage::kRegular, report.colley),
                      accuracy(Stage::kRegular, report.massey)};
  if (report.playoff_games > 0) {
    report.foresight = AccuracyByMethod{
        accuracy(Stage::kPlayoff, report.optimal),
        accuracy(Stage::kPlayoff, report.colley),
        accuracy(Stage::kPlayoff, report.massey)};
    if (report.kt.has_value() && report.kt->proven) {
      report.foresight_first = accuracy(Stage::kPlayoff, report.kt->first);
      report.foresight_second = accuracy(Stage::kPlayoff, report.kt->second);
      report.foresight_divergence =
          std::abs(*report.foresight_first - *report.foresight_second);
    }
  }
  return report;
}

}  // namespace rankability
