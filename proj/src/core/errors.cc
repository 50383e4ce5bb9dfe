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

#include "rankability/core/errors.h"

namespace rankability {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedPermutation:
      return "malformed-permutation";
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kInfeasibleSolution:
      return "infeasible-solution";
    case ErrorCode::kInvalidMatrix:
      return "invalid-matrix";
    case ErrorCode::kUndefinedMetric:
      return "undefined-metric";
    case ErrorCode::kInvalidKStar:
      return "invalid-k-star";
    case ErrorCode::kNeedsExactEnumeration:
      return "needs-exact-enumeration";
    case ErrorCode::kEmptyStage:
      return "empty-stage";
    case ErrorCode::kUndefinedCorrelation:
      return "undefined-correlation";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kEmptyInput:
      return "empty-input";
    case ErrorCode::kTimeout:
      return "timeout";
    case ErrorCode::kInvalidConfig:
      return "invalid-config";
    case ErrorCode::kTooLarge:
      return "too-large";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::kParse,
            line > 0 ? "line " + std::to_string(line) + ": " + message
                     : message),
      line_(line) {}

}  // namespace rankability
