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

#ifndef RANKABILITY_CORE_ERRORS_H_
#define RANKABILITY_CORE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankability {

enum class ErrorCode {
  kMalformedPermutation,
  kDimensionMismatch,
  kInfeasibleSolution,
  kInvalidMatrix,
  kUndefinedMetric,
  kInvalidKStar,
  kNeedsExactEnumeration,
  kEmptyStage,
  kUndefinedCorrelation,
  kParse,
  kEmptyInput,
  kTimeout,
  kInvalidConfig,
  kTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to stable exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Input-file diagnostics. `line` is 1-based; 0 means "whole file".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rankability

#endif  // RANKABILITY_CORE_ERRORS_H_
