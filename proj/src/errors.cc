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

#include "qembench/errors.h"

namespace qembench {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kUnsupportedWidth: return "unsupported-width";
    case ErrorCode::kInvalidTopology: return "invalid-topology";
    case ErrorCode::kInvalidScaleFactor: return "invalid-scale-factor";
    case ErrorCode::kDomain: return "domain-error";
    case ErrorCode::kNonInvertibleChannel: return "non-invertible-channel";
    case ErrorCode::kIncompleteCalibration: return "incomplete-calibration";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kBackendCapability: return "backend-capability";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kNonDeterministicOutcome: return "non-deterministic-outcome";
    case ErrorCode::kEmptyResult: return "empty-result";
    case ErrorCode::kDegenerateNodes: return "degenerate-nodes";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kZeroDenominator: return "zero-denominator";
    case ErrorCode::kAggregation: return "aggregation-error";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kConfig: return "config-error";
  }
  return "unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBackendCapability:
    case ErrorCode::kSizeLimit:
    case ErrorCode::kNonDeterministicOutcome:
      return ErrorCategory::kBackend;
    case ErrorCode::kIo:
      return ErrorCategory::kIo;
    case ErrorCode::kZeroDenominator:
    case ErrorCode::kEmptyResult:
      return ErrorCategory::kInternal;
    default:
      return ErrorCategory::kConfig;
  }
}

}  // namespace qembench
