// Copyright 2026 The Friction Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace friction {

enum class ErrorCode {
  kMalformedProblem,
  kDimensionMismatch,
  kAllStatesNegligible,
  kInvalidPriorFamily,
  kNotRepresentable,
  kNegativeStrike,
  kUnboundedBelow,
  kEmptyPolytope,
  kInconsistentMarket,
  kZeroFundamentalValue,
  kNegativeClaim,
  kParseError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the market-file reader; `line` is 1-based, 0 when not tied to a
/// particular line.
class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", field '" + field + "': " + message),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace friction
