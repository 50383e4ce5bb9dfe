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

#ifndef RANKABILITY_SPORTS_CSV_H_
#define RANKABILITY_SPORTS_CSV_H_

#include <istream>
#include <map>
#include <string>

#include "rankability/core/weight_matrix.h"
#include "rankability/sports/games.h"

namespace rankability {

// raw team name -> canonical name.
using AliasMap = std::map<std::string, std::string>;

// Two columns, `raw_name,canonical_name`; a header row with exactly those
// names is skipped.
AliasMap ReadAliasCsv(std::istream& in);

// Games with a required header. Two layouts are recognized:
//
//   season,stage,team_a,team_b,score_a,score_b[,date]
//     stage is "regular" or "playoff" (any case).
//
//   schedule_season,schedule_playoff,team_home,team_away,score_home,
//   score_away[,schedule_date]
//     the common public NFL scores export; schedule_playoff is TRUE/FALSE
//     and rows without both scores (unplayed games) are skipped.
//
// Other columns are ignored. Team names pass through `aliases` when given.
// Errors are ParseErrors with the 1-based line number.
GameSet ReadGamesCsv(std::istream& in, const AliasMap* aliases = nullptr);

// Feature table: header `item,<feature>,...`, then one row per item holding
// its rank under each feature (lower is better). Ranks may be integers,
// decimals or fractions such as 9/1. Item i earns one point over item j for
// every feature where it ranks strictly better and half a point for every
// tie; the result is labeled by item.
WeightMatrix ReadFeatureTableCsv(std::istream& in);

}  // namespace rankability

#endif  // RANKABILITY_SPORTS_CSV_H_
