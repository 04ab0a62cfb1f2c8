// Copyright 2026 The kpcst Authors
//
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

namespace kpcst {

enum class ErrorCode {
  kParse,
  kValidation,
  kDisconnectedInput,
  kIncompleteGraph,
  kNonMetricGraph,
  kInfeasibleK,
  kInstanceTooLarge,
  kUndefinedFactor,
  kMissingOracle,
  kRootMismatch,
  kIterationLimit,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this type; the C API maps the
// code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 1-based line that triggered them.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace kpcst
