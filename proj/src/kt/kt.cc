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

#include "rankability/kt/kt.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include "kt/pair_search.h"
#include "lop/prefix_search.h"
#include "rankability/core/errors.h"
#include "rankability/core/ordering.h"

namespace rankability {
namespace {

using internal::Bit;
using internal::Mask;

std::string Describe(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

// Accumulates node counts from the many small searches of SolveKt.
struct StatsSink {
  SearchStats* stats;
  void Add(const internal::SearchCounters& c) {
    stats->nodes_explored += c.nodes;
    stats->nodes_pruned += c.pruned;
  }
};

// Pairs whose orientation can differ between two optima, found by asking
// for an optimum with each pair reversed relative to a known one. Pairs that
// can never flip are returned fixed in `base`.
struct Presolve {
  std::vector<std::pair<int, int>> free_pairs;
  internal::PartialOrder base;
  std::vector<std::vector<int>> optima;  // distinct optima met on the way
  bool complete = true;
};

Presolve RunPresolve(const WeightMatrix& a, double floor,
                     const std::vector<int>& first_optimum,
                     const internal::Deadline& deadline, StatsSink& sink) {
  const int n = a.size();
  Presolve out;
  out.optima.push_back(first_optimum);
  // positions[k][i]: position of item i in optima[k].
  std::vector<std::vector<int>> positions;
  auto remember = [&](const std::vector<int>& order) {
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    positions.push_back(std::move(pos));
  };
  remember(first_optimum);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool i_first = positions[0][i] < positions[0][j];
      const int u = i_first ? i : j;  // u before v in the first optimum
      const int v = i_first ? j : i;
      bool flips = false;
      for (const auto& pos : positions) {
        if (pos[v] < pos[u]) {
          flips = true;
          break;
        }
      }
      if (!flips) {
        std::vector<Mask> must(n, 0);
        must[u] = Bit(v);
        const internal::PrefixProblem reversed(a, std::move(must));
        internal::FirstOutcome found =
            internal::FirstAtLeast(reversed, floor, {}, deadline);
        sink.Add(found.counters);
        if (!found.complete) {
          // Unknown; leaving the pair free keeps the search exact.
          out.complete = false;
          flips = true;
        } else if (found.order.has_value()) {
          flips = true;
          remember(*found.order);
          out.optima.push_back(std::move(*found.order));
        }
      }
      if (flips) {
        out.free_pairs.emplace_back(i, j);
      } else {
        out.base.Add(u, v);
      }
    }
  }
  return out;
}

std::int64_t Distance(const std::vector<int>& x, const std::vector<int>& y) {
  return KendallTauDistance(Ranking::FromZeroBasedOrder(x),
                            Ranking::FromZeroBasedOrder(y));
}

// Adds "order[0] < order[1] < ... < order[k-1] < everything else".
bool ConstrainPrefix(internal::PartialOrder& order, int n,
                     const std::vector<int>& prefix) {
  Mask placed = 0;
  for (int v : prefix) {
    for (int u = 0; u < n; ++u) {
      if (u == v || (placed & Bit(u))) continue;
      if (!order.Add(v, u)) return false;
    }
    placed |= Bit(v);
  }
  return true;
}

// Lexicographically smallest ranking usable as `side` of a pair at distance
// >= target, building one position at a time. `known` is a pair already at
// the target distance; its rankings let feasible candidates skip a search.
// Returns nullopt on timeout.
std::optional<std::vector<int>> LexSmallestSide(
    const internal::PairProblem& problem, const internal::PairNode& root,
    bool x_side, std::int64_t target,
    std::pair<std::vector<int>, std::vector<int>> known,
    const internal::Deadline& deadline, StatsSink& sink) {
  const int n = problem.n();
  std::vector<int> prefix;
  while (static_cast<int>(prefix.size()) < n) {
    const size_t depth = prefix.size();
    const std::vector<int>& hint = x_side ? known.first : known.second;
    bool placed = false;
    for (int c = 0; c < n && !placed; ++c) {
      if (std::find(prefix.begin(), prefix.end(), c) != prefix.end()) continue;
      if (c == hint[depth]) {
        prefix.push_back(c);
        placed = true;
        break;
      }
      std::vector<int> trial = prefix;
      trial.push_back(c);
      internal::PairNode node = root;
      node.symmetric = false;
      internal::PartialOrder& side = x_side ? node.x : node.y;
      if (!ConstrainPrefix(side, n, trial) || !problem.Prepare(node)) continue;
      internal::PairOutcome found = internal::PairSearchSerial(
          problem, node, target - 1, /*stop_at_first=*/true, deadline);
      sink.Add(found.counters);
      if (!found.complete) return std::nullopt;
      if (found.witness.has_value()) {
        known = std::move(*found.witness);
        prefix = std::move(trial);
        placed = true;
      }
    }
    // The hint always extends the current prefix, so some candidate fits.
    if (!placed) return std::nullopt;
  }
  return prefix;
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void Flag(KtValidationReport& report, const char* constraint,
          std::vector<int> items) {
  for (int& v : items) ++v;
  report.violations.push_back({constraint, std::move(items)});
}

void CheckOrder(const WeightMatrix& a, const LinearOrder& order,
                double k_star, double tolerance, const char* tournament,
                const char* dicycle, const char* objective,
                KtValidationReport& report) {
  const int n = order.size();
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && order(i, j) == 1) value += a(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (order(i, j) + order(j, i) != 1) Flag(report, tournament, {i, j});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        // Each directed triangle is reported once, from its smallest item.
        if (i > j || i > k) continue;
        if (order(i, j) + order(j, k) + order(k, i) > 2) {
          Flag(report, dicycle, {i, j, k});
        }
      }
    }
  }
  if (std::abs(value - k_star) > tolerance) {
    Flag(report, objective, {});
  }
}

}  // namespace

KtSolution KtSolutionFromRankings(const Ranking& first,
                                  const Ranking& second) {
  if (first.size() != second.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rankings have " + std::to_string(first.size()) + " and " +
                    std::to_string(second.size()) + " items");
  }
  const int n = first.size();
  KtSolution s{LinearOrderFromRanking(first), LinearOrderFromRanking(second),
               std::vector<std::uint8_t>(static_cast<size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.z[i * n + j] = s.x(i, j) & s.y(i, j);
    }
  }
  return s;
}

bool KtValidationReport::Has(std::string_view constraint) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const ConstraintViolation& v) {
                       return v.constraint == constraint;
                     });
}

std::string KtValidationReport::ToString() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const ConstraintViolation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.ToString();
  }
  return out;
}

KtValidationReport ValidateKtSolution(const WeightMatrix& a, double k_star,
                                      const KtSolution& solution,
                                      bool claimed_optimal,
                                      double tolerance) {
  KtValidationReport report;
  const int n = a.size();
  if (solution.x.size() != n || solution.y.size() != n ||
      solution.z.size() != static_cast<size_t>(n) * n) {
    Flag(report, kKtShape, {});
    return report;
  }
  auto binary = [](std::uint8_t v) { return v <= 1; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!binary(solution.x(i, j)) || !binary(solution.y(i, j)) ||
          !binary(solution.Z(i, j))) {
        Flag(report, kKtBinary, {i, j});
      }
    }
  }
  CheckOrder(a, solution.x, k_star, tolerance, kKtTournamentX, kKtDicycleX,
             kKtObjectiveX, report);
  CheckOrder(a, solution.y, k_star, tolerance, kKtTournamentY, kKtDicycleY,
             kKtObjectiveY, report);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (solution.x(i, j) + solution.y(i, j) - solution.Z(i, j) > 1) {
        Flag(report, kKtConcordanceLink, {i, j});
      }
    }
  }
  if (!claimed_optimal) return report;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool both = solution.x(i, j) == 1 && solution.y(i, j) == 1;
      if (both != (solution.Z(i, j) == 1)) {
        Flag(report, kKtConcordanceExact, {i, j});
      }
      if (i < j && solution.Z(i, j) + solution.Z(j, i) > 1) {
        Flag(report, kKtPairExclusion, {i, j});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k || i > j || i > k) continue;
        if (solution.Z(i, j) + solution.Z(j, k) + solution.Z(k, i) > 2) {
          Flag(report, kKtTriangleExclusion, {i, j, k});
        }
      }
    }
  }
  return report;
}

KtResult SolveKt(const WeightMatrix& a, double k_star,
                 const SolverConfig& config) {
  config.Validate();
  const int n = a.size();
  if (n > kMaxSolverItems) {
    throw Error(ErrorCode::kTooLarge,
                "exact search supports at most " +
                    std::to_string(kMaxSolverItems) + " items, got " +
                    std::to_string(n));
  }
  if (!std::isfinite(k_star)) {
    throw Error(ErrorCode::kInvalidKStar, "k* must be finite");
  }
  const auto start = std::chrono::steady_clock::now();
  const internal::Deadline deadline(config.time_limit_seconds);
  const double tol = config.tolerance;
  const double floor = k_star - tol;

  KtResult result;
  StatsSink sink{&result.stats};
  bool complete = true;

  // k* must be the optimum: nothing above k* + tol, something at k* - tol.
  const Ranking heuristic = HeuristicRanking(a, config);
  const double heuristic_value = ObjectiveValue(a, heuristic);
  result.stats.heuristic_value = heuristic_value;
  auto too_small = [&](double value) {
    throw Error(ErrorCode::kInvalidKStar,
                "a ranking reaches " + Describe(value) + " > k* = " +
                    Describe(k_star));
  };
  if (heuristic_value > k_star + tol) too_small(heuristic_value);
  const internal::PrefixProblem lop(a);
  {
    internal::MaximizeOutcome above =
        config.parallel_workers > 1
            ? internal::MaximizeParallel(lop, heuristic.order(),
                                         k_star + tol, {}, deadline,
                                         config.parallel_workers)
            : internal::MaximizeSerial(lop, heuristic.order(), k_star + tol,
                                       {}, deadline);
    sink.Add(above.counters);
    if (!above.best_order.empty()) too_small(above.best_value);
    complete = complete && above.complete;
  }
  internal::FirstOutcome first = internal::FirstAtLeast(lop, floor, {},
                                                        deadline);
  sink.Add(first.counters);
  if (!first.order.has_value()) {
    if (!first.complete) {
      throw Error(ErrorCode::kTimeout,
                  "no ranking at k* found before the time limit");
    }
    throw Error(ErrorCode::kInvalidKStar,
                "no ranking reaches k* = " + Describe(k_star));
  }

  Presolve pre = RunPresolve(a, floor, *first.order, deadline, sink);
  complete = complete && pre.complete;

  // Best pair among the optima met so far; ties keep the first found.
  std::int64_t best = 0;
  std::pair<std::vector<int>, std::vector<int>> witness{*first.order,
                                                        *first.order};
  for (size_t p = 0; p < pre.optima.size(); ++p) {
    for (size_t q = p + 1; q < pre.optima.size(); ++q) {
      const std::int64_t d = Distance(pre.optima[p], pre.optima[q]);
      if (d > best) {
        best = d;
        witness = {pre.optima[p], pre.optima[q]};
      }
    }
  }

  const internal::PairProblem problem(lop, floor, pre.free_pairs);
  internal::PairNode root;
  root.x = pre.base;
  root.y = pre.base;
  root.symmetric = true;
  problem.Prepare(root);

  const auto free_count = static_cast<std::int64_t>(pre.free_pairs.size());
  if (complete && best < free_count) {
    internal::PairOutcome improved =
        config.parallel_workers > 1
            ? internal::PairSearchParallel(problem, root, best, false,
                                           deadline, config.parallel_workers)
            : internal::PairSearchSerial(problem, root, best, false,
                                         deadline);
    sink.Add(improved.counters);
    complete = improved.complete;
    if (improved.witness.has_value()) {
      best = improved.best;
      witness = std::move(*improved.witness);
    }
  }

  // Canonical witness: the smallest ranking taking part in a pair at
  // distance kappa, then its smallest partner.
  if (complete && best > 0) {
    std::optional<std::vector<int>> lex_first = LexSmallestSide(
        problem, root, /*x_side=*/true, best, witness, deadline, sink);
    if (lex_first.has_value()) {
      // Keep the known pair consistent with the fixed first ranking.
      if (witness.first != *lex_first) {
        internal::PairNode node = root;
        node.symmetric = false;
        ConstrainPrefix(node.x, n, *lex_first);
        problem.Prepare(node);
        internal::PairOutcome pair = internal::PairSearchSerial(
            problem, node, best - 1, true, deadline);
        sink.Add(pair.counters);
        if (pair.witness.has_value()) witness = std::move(*pair.witness);
      }
      internal::PairNode fixed_x = root;
      fixed_x.symmetric = false;
      ConstrainPrefix(fixed_x.x, n, *lex_first);
      problem.Prepare(fixed_x);
      std::optional<std::vector<int>> lex_second = LexSmallestSide(
          problem, fixed_x, /*x_side=*/false, best, witness, deadline, sink);
      if (lex_second.has_value() && witness.first == *lex_first) {
        witness = {*lex_first, *lex_second};
      } else {
        complete = false;
      }
    } else {
      complete = false;
    }
  }
  if (witness.second < witness.first) std::swap(witness.first, witness.second);

  result.kappa = best;
  result.first = Ranking::FromZeroBasedOrder(witness.first);
  result.second = Ranking::FromZeroBasedOrder(witness.second);
  result.concordant_count = PairCount(n) - best;
  result.proven = complete;
  result.stats.wall_seconds = SecondsSince(start);
  return result;
}

KtResult KappaFromOptima(const OptimaSet& optima) {
  if (optima.truncated) {
    throw Error(ErrorCode::kNeedsExactEnumeration,
                "the optimum list was truncated by the enumeration cap");
  }
  if (optima.rankings.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no optimal rankings given");
  }
  std::vector<Ranking> sorted = optima.rankings;
  std::sort(sorted.begin(), sorted.end());
  KtResult result;
  result.first = sorted.front();
  result.second = sorted.front();
  std::int64_t best = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      const std::int64_t d = KendallTauDistance(sorted[i], sorted[j]);
      if (d > best) {
        best = d;
        result.first = sorted[i];
        result.second = sorted[j];
      }
    }
  }
  result.kappa = best;
  result.concordant_count = PairCount(result.first.size()) - best;
  result.proven = true;
  return result;
}

KtResult KappaByEnumeration(const WeightMatrix& a,
                            const SolverConfig& config) {
  return KappaFromOptima(EnumerateOptima(a, config));
}

}  // namespace rankability
