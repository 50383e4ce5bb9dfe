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

// Colley and Massey ratings, the two classical baselines rankings are
// compared against. Both reduce to a small dense linear system.

#ifndef RANKABILITY_RATING_RATING_H_
#define RANKABILITY_RATING_RATING_H_

#include <string_view>
#include <vector>

#include "rankability/core/ranking.h"
#include "rankability/sports/games.h"

namespace rankability {

enum class RatingMethod { kColley, kMassey };

std::string_view RatingMethodName(RatingMethod method);

struct RatingVector {
  std::vector<double> values;  // indexed like GameSet::teams()
  RatingMethod method = RatingMethod::kColley;
  // Massey only: the schedule graph has several components, each rated
  // separately with its own zero sum.
  bool disconnected = false;
};

// Solves m x = b for a dense row-major n x n matrix by Gaussian elimination
// with partial pivoting. Throws kInvalidMatrix when m is singular to working
// precision.
std::vector<double> SolveDense(std::vector<double> m, std::vector<double> b);

// Colley system over the games of `stage`:
//   C_ii = 2 + games_i, C_ij = -games_ij, b_i = 1 + (wins_i - losses_i) / 2,
// a tie counting as half a win and half a loss. Ratings average 1/2.
// Throws kEmptyStage when the stage has no games.
RatingVector ColleyRatings(const GameSet& games,
                           Stage stage = Stage::kRegular);

// Massey system over the games of `stage`:
//   M_ii = games_i, M_ij = -games_ij, p_i = cumulative point differential,
// with the last row of each connected component replaced by ones and a zero
// right-hand side. Throws kEmptyStage when the stage has no games.
RatingVector MasseyRatings(const GameSet& games,
                           Stage stage = Stage::kRegular);

// Highest rating first; equal ratings keep ascending team order.
Ranking RankingFromRatings(const RatingVector& ratings);

}  // namespace rankability

#endif  // RANKABILITY_RATING_RATING_H_
