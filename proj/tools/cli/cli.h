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

// The `rankability` command line, as a library so tests can drive it
// in-process.
//
//   rankability lop       --input college.csv --kind features
//   rankability kappa     --input matrix.csv --oracle
//   rankability enumerate --input matrix.csv --cap 100
//   rankability season    --input games.csv --format csv
//   rankability ratings   --input games.csv
//
// Reports go to stdout (or --output) and depend only on the input and the
// solver settings, never on timing or worker count; search statistics go
// to stderr.

#ifndef RANKABILITY_TOOLS_CLI_CLI_H_
#define RANKABILITY_TOOLS_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankability/core/weight_matrix.h"

namespace rankability::cli {

enum ExitCode {
  kExitProven = 0,
  kExitInputError = 1,
  kExitUnproven = 2,
  kExitOracleMismatch = 3,
};

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Rounds to 15 significant digits; integral values become JSON integers.
nlohmann::ordered_json JsonNumber(double value);

// Re-checks a JSON report from `lop`, `kappa` or `enumerate` against the
// instance it was computed from: objective values, lambda, witness
// distances and the identity concordant + kappa = C(n, 2). Returns one
// message per failed check.
std::vector<std::string> VerifyReport(const nlohmann::ordered_json& report,
                                      const WeightMatrix& a,
                                      double tolerance = 1e-9);

}  // namespace rankability::cli

#endif  // RANKABILITY_TOOLS_CLI_CLI_H_
