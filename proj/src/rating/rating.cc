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

#include "rankability/rating/rating.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankability/core/errors.h"

namespace rankability {
namespace {

void RequireStage(const GameSet& games, Stage stage) {
  if (games.CountStage(stage) == 0) {
    throw Error(ErrorCode::kEmptyStage,
                "no " + std::string(StageName(stage)) + " games to rate");
  }
}

// Connected components of the schedule graph; component[i] is the smallest
// team index in i's component.
std::vector<int> Components(const GameSet& games, Stage stage) {
  const int n = games.team_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const GameRecord& g : games.games()) {
    if (g.stage != stage) continue;
    int a = find(games.IndexOf(g.team_a));
    int b = find(games.IndexOf(g.team_b));
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<int> component(n);
  for (int v = 0; v < n; ++v) component[v] = find(v);
  return component;
}

}  // namespace

std::string_view RatingMethodName(RatingMethod method) {
  return method == RatingMethod::kColley ? "colley" : "massey";
}

std::vector<double> SolveDense(std::vector<double> m, std::vector<double> b) {
  const size_t n = b.size();
  if (m.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system matrix does not match right-hand side");
  }
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::abs(v));
  const double eps = 1e-13 * std::max(scale, 1.0);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (std::abs(m[pivot * n + col]) <= eps) {
      throw Error(ErrorCode::kInvalidMatrix, "linear system is singular");
    }
    if (pivot != col) {
      for (size_t k = 0; k < n; ++k) std::swap(m[col * n + k], m[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (size_t k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (size_t r = n; r-- > 0;) {
    double s = b[r];
    for (size_t k = r + 1; k < n; ++k) s -= m[r * n + k] * x[k];
    x[r] = s / m[r * n + r];
  }
  return x;
}

RatingVector ColleyRatings(const GameSet& games, Stage stage) {
  RequireStage(games, stage);
  const int n = games.team_count();
  std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> b(n, 1.0);
  for (int i = 0; i < n; ++i) c[i * n + i] = 2.0;
  for (const GameRecord& g : games.games()) {
    if (g.stage != stage) continue;
    const int i = games.IndexOf(g.team_a);
    const int j = games.IndexOf(g.team_b);
    c[i * n + i] += 1.0;
    c[j * n + j] += 1.0;
    c[i * n + j] -= 1.0;
    c[j * n + i] -= 1.0;
    // (wins - losses) / 2; a tie adds +1/2 and -1/2.
    const double half = g.score_a > g.score_b   ? 0.5
                        : g.score_a < g.score_b ? -0.5
                                                : 0.0;
    b[i] += half;
    b[j] -= half;
  }
  return {SolveDense(std::move(c), std::move(b)), RatingMethod::kColley,
          false};
}

RatingVector MasseyRatings(const GameSet& games, Stage stage) {
  RequireStage(games, stage);
  const int n = games.team_count();
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> p(n, 0.0);
  for (const GameRecord& g : games.games()) {
    if (g.stage != stage) continue;
    const int i = games.IndexOf(g.team_a);
    const int j = games.IndexOf(g.team_b);
    m[i * n + i] += 1.0;
    m[j * n + j] += 1.0;
    m[i * n + j] -= 1.0;
    m[j * n + i] -= 1.0;
    const double diff = static_cast<double>(g.score_a - g.score_b);
    p[i] += diff;
    p[j] -= diff;
  }

  const std::vector<int> component = Components(games, stage);
  RatingVector out{std::vector<double>(n, 0.0), RatingMethod::kMassey, false};
  std::vector<int> roots = component;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.disconnected = roots.size() > 1;

  for (int root : roots) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (component[v] == root) members.push_back(v);
    }
    const size_t s = members.size();
    if (s == 1) continue;  // a team without games rates 0
    std::vector<double> sub(s * s);
    std::vector<double> rhs(s);
    for (size_t a = 0; a < s; ++a) {
      for (size_t b = 0; b < s; ++b) {
        sub[a * s + b] = m[members[a] * n + members[b]];
      }
      rhs[a] = p[members[a]];
    }
    for (size_t b = 0; b < s; ++b) sub[(s - 1) * s + b] = 1.0;
    rhs[s - 1] = 0.0;
    const std::vector<double> r = SolveDense(std::move(sub), std::move(rhs));
    for (size_t a = 0; a < s; ++a) out.values[members[a]] = r[a];
  }
  return out;
}

Ranking RankingFromRatings(const RatingVector& ratings) {
  std::vector<int> order(ratings.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ratings.values[a] > ratings.values[b];
  });
  return Ranking::FromZeroBasedOrder(std::move(order));
}

}  // namespace rankability
