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

#ifndef RANKABILITY_LOP_SOLVER_CONFIG_H_
#define RANKABILITY_LOP_SOLVER_CONFIG_H_

#include <cstdint>
#include <optional>

namespace rankability {

struct SolverConfig {
  // Wall-clock budget per solve. Unset means run to proven optimality.
  std::optional<double> time_limit_seconds;
  // Maximum number of optima collected by enumeration.
  std::int64_t enumeration_cap = 1'000'000;
  // Two objective values within `tolerance` are considered equal.
  double tolerance = 1e-9;
  // 1 selects the serial search; more selects the OpenMP search.
  int parallel_workers = 1;
  int heuristic_restarts = 16;
  std::uint64_t rng_seed = 0;

  // Throws kInvalidConfig when a limit is not positive.
  void Validate() const;
};

}  // namespace rankability

#endif  // RANKABILITY_LOP_SOLVER_CONFIG_H_
