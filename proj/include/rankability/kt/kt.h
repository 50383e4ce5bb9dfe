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

// Kendall-tau diameter of the optimal face of a linear ordering problem:
// kappa(A) is the largest number of discordant pairs between two optimal
// rankings.
//
// The underlying binary program couples two linear orders x and y that must
// both reach the optimal value k*, plus concordance indicators z with
// x_ij + y_ij - z_ij <= 1, and minimizes sum z. At an optimum z_ij = 1
// exactly when x_ij = y_ij = 1, so the minimum counts concordant pairs and
// kappa = C(n, 2) - minimum.
//
// SolveKt searches that program directly (z is implied, never branched on);
// KappaByEnumeration lists every optimum and compares all pairs, and exists
// as an oracle for small instances.

#ifndef RANKABILITY_KT_KT_H_
#define RANKABILITY_KT_KT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "rankability/core/linear_order.h"
#include "rankability/core/ranking.h"
#include "rankability/core/weight_matrix.h"
#include "rankability/lop/lop.h"
#include "rankability/lop/solver_config.h"

namespace rankability {

struct KtResult {
  std::int64_t kappa = 0;
  // Witness pair at distance kappa: the lexicographically smallest
  // (first, second) with first <= second.
  Ranking first = Ranking::Identity(2);
  Ranking second = Ranking::Identity(2);
  // Optimal value of the concordance program, C(n, 2) - kappa.
  std::int64_t concordant_count = 0;
  bool proven = false;
  SearchStats stats;
};

// A point of the concordance program: two linear orders and the n x n
// indicator matrix z.
struct KtSolution {
  LinearOrder x;
  LinearOrder y;
  std::vector<std::uint8_t> z;

  int size() const { return x.size(); }
  std::uint8_t Z(int i, int j) const { return z[i * size() + j]; }
};

// x and y from the two rankings, z_ij = x_ij AND y_ij.
KtSolution KtSolutionFromRankings(const Ranking& first, const Ranking& second);

// Constraint family names used in KtValidationReport.
inline constexpr char kKtTournamentX[] = "tournament-x";
inline constexpr char kKtTournamentY[] = "tournament-y";
inline constexpr char kKtDicycleX[] = "3-dicycle-x";
inline constexpr char kKtDicycleY[] = "3-dicycle-y";
inline constexpr char kKtObjectiveX[] = "objective-x";
inline constexpr char kKtObjectiveY[] = "objective-y";
inline constexpr char kKtConcordanceLink[] = "concordance-link";
inline constexpr char kKtBinary[] = "binary";
inline constexpr char kKtShape[] = "shape";
// Only checked for solutions claimed optimal.
inline constexpr char kKtConcordanceExact[] = "concordance-exact";
inline constexpr char kKtPairExclusion[] = "pair-exclusion";
inline constexpr char kKtTriangleExclusion[] = "triangle-exclusion";

struct KtValidationReport {
  std::vector<ConstraintViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(std::string_view constraint) const;
  std::string ToString() const;
};

// Checks every constraint family of the concordance program. For a
// solution claimed optimal it also checks that z_ij = 1 exactly when
// x_ij = y_ij = 1, and the two inequalities every optimum satisfies:
// z_ij + z_ji <= 1 and z_ij + z_jk + z_ki <= 2. Never throws on violations.
KtValidationReport ValidateKtSolution(const WeightMatrix& a, double k_star,
                                      const KtSolution& solution,
                                      bool claimed_optimal = true,
                                      double tolerance = 1e-9);

// kappa(A) by branch and bound over pairs. `k_star` must be the optimal
// value of the LOP; otherwise throws kInvalidKStar. On timeout returns the
// best pair found with proven = false.
KtResult SolveKt(const WeightMatrix& a, double k_star,
                 const SolverConfig& config = {});

// kappa(A) from the full list of optima. Throws kNeedsExactEnumeration when
// the enumeration is truncated by the cap.
KtResult KappaByEnumeration(const WeightMatrix& a,
                            const SolverConfig& config = {});
// Same, from an already enumerated set.
KtResult KappaFromOptima(const OptimaSet& optima);

}  // namespace rankability

#endif  // RANKABILITY_KT_KT_H_
