// Copyright 2026 The qembench Authors
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

#ifndef QEMBENCH_ERRORS_H_
#define QEMBENCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qembench {

enum class ErrorCode {
  kInvalidArgument,
  kUnsupportedWidth,
  kInvalidTopology,
  kInvalidScaleFactor,
  kDomain,
  kNonInvertibleChannel,
  kIncompleteCalibration,
  kParse,
  kBackendCapability,
  kSizeLimit,
  kNonDeterministicOutcome,
  kEmptyResult,
  kDegenerateNodes,
  kLengthMismatch,
  kZeroDenominator,
  kAggregation,
  kIo,
  kConfig,
};

/// Broad grouping used for CLI exit codes.
enum class ErrorCategory { kConfig = 2, kBackend = 3, kIo = 4, kInternal = 1 };

const char* error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return error_category(code_); }
  /// Message without the code-name prefix.
  const std::string& detail() const { return detail_; }
  /// Same error with `context: ` prepended to the detail.
  Error with_context(const std::string& context) const { return Error(code_, context + ": " + detail_); }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace qembench

#endif  // QEMBENCH_ERRORS_H_
