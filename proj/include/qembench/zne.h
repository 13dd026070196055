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

#ifndef QEMBENCH_ZNE_H_
#define QEMBENCH_ZNE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qembench/benchmarks.h"
#include "qembench/circuit.h"
#include "qembench/engine.h"
#include "qembench/rng.h"

namespace qembench {

/// Runs a circuit for the given number of shots and returns the estimate of
/// the benchmark observable.
using Executor = std::function<ExpectationEstimate(const Circuit&, std::uint64_t shots, Rng&)>;

enum class Extrapolator { kLinear, kRichardson };

std::string extrapolator_name(Extrapolator e);

struct ZneConfig {
  std::vector<double> scale_factors{1.0, 2.0, 3.0};
  Extrapolator extrapolator = Extrapolator::kRichardson;
  std::uint64_t shots = 10000;  // total budget N, split evenly across scale factors
  bool barriers = false;
  double barrier_angle = 1e-4;
  /// Pass each folded circuit through cancel_inverses before execution,
  /// standing in for a backend that optimizes submitted circuits.
  bool optimize = false;

  void validate() const;
};

struct ZneOutcome {
  double value = 0.0;                   // extrapolated A_ZNE
  std::vector<double> scaled_values;    // A'(lambda_i)
  std::vector<double> coefficients;     // eta_i
  std::uint64_t shots_per_scale = 0;
  std::uint64_t total_shots = 0;        // k * floor(N / k)
  bool out_of_range = false;            // value outside [0, 1]; never clipped
};

/// eta_i = prod_{j != i} lambda_j / (lambda_j - lambda_i).
std::vector<double> richardson_coefficients(std::span<const double> scale_factors);

/// Weights w_i with intercept = sum_i w_i y_i for the least-squares line
/// through (lambda_i, y_i).
std::vector<double> linear_coefficients(std::span<const double> scale_factors);

double linear_intercept(std::span<const double> scale_factors, std::span<const double> values);

std::vector<double> extrapolation_coefficients(Extrapolator e, std::span<const double> scale_factors);

ZneOutcome execute_zne(const BenchmarkInstance& instance, const Executor& executor,
                       const ZneConfig& config, Rng& rng);

}  // namespace qembench

#endif  // QEMBENCH_ZNE_H_
