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

#include "qembench/metrics.h"

#include <cmath>
#include <string>

#include "qembench/errors.h"

namespace qembench {

void ProblemResult::validate() const {
  if (noisy.empty()) throw Error(ErrorCode::kEmptyResult, "problem result has no trials");
  if (noisy.size() != mitigated.size()) {
    throw Error(ErrorCode::kLengthMismatch, "noisy and mitigated trial counts differ");
  }
  if (shots == 0 || mitigated_shots == 0) {
    throw Error(ErrorCode::kInvalidArgument, "shot counts must be positive");
  }
}

double rmse(std::span<const double> values, double ideal) {
  if (values.empty()) throw Error(ErrorCode::kEmptyResult, "RMSE of no values");
  double acc = 0.0;
  for (double v : values) acc += (v - ideal) * (v - ideal);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

namespace {

double squared_error(std::span<const double> values, double ideal) {
  double acc = 0.0;
  for (double v : values) acc += (v - ideal) * (v - ideal);
  return acc;
}

Improvement ratio(double shots, double noisy_sq, double mitigated_shots, double mitigated_sq) {
  const double denominator = std::sqrt(mitigated_shots * mitigated_sq);
  if (denominator == 0.0) return Improvement{0.0, true};
  return Improvement{std::sqrt(shots * noisy_sq) / denominator, false};
}

}  // namespace

Improvement improvement_factor_problem(const ProblemResult& r) {
  r.validate();
  return ratio(static_cast<double>(r.shots), squared_error(r.noisy, r.ideal),
               static_cast<double>(r.mitigated_shots), squared_error(r.mitigated, r.ideal));
}

Improvement improvement_factor_aggregate(std::span<const ProblemResult> results) {
  if (results.empty()) throw Error(ErrorCode::kEmptyResult, "no problems to aggregate");
  const std::uint64_t shots = results.front().shots;
  const std::uint64_t mitigated_shots = results.front().mitigated_shots;
  double noisy_sq = 0.0, mitigated_sq = 0.0;
  for (const auto& r : results) {
    r.validate();
    if (r.shots != shots || r.mitigated_shots != mitigated_shots) {
      throw Error(ErrorCode::kAggregation,
                  "pooled problems must share N and N_QEM (got " + std::to_string(r.shots) + "/" +
                      std::to_string(r.mitigated_shots) + " vs " + std::to_string(shots) + "/" +
                      std::to_string(mitigated_shots) + ")");
    }
    noisy_sq += squared_error(r.noisy, r.ideal);
    mitigated_sq += squared_error(r.mitigated, r.ideal);
  }
  return ratio(static_cast<double>(shots), noisy_sq, static_cast<double>(mitigated_shots),
               mitigated_sq);
}

double relative_mitigation_error(double mitigated, double noisy, double ideal) {
  const double denominator = std::abs(noisy - ideal);
  if (denominator == 0.0) {
    throw Error(ErrorCode::kZeroDenominator, "unmitigated value equals the ideal value");
  }
  return std::abs(mitigated - ideal) / denominator;
}

}  // namespace qembench
