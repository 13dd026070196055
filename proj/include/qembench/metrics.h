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

#ifndef QEMBENCH_METRICS_H_
#define QEMBENCH_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace qembench {

/// One (circuit, observable) pair: ideal value and t trials of unmitigated
/// and mitigated estimates with their shot budgets.
struct ProblemResult {
  double ideal = 1.0;
  std::vector<double> noisy;
  std::vector<double> mitigated;
  std::uint64_t shots = 0;            // N
  std::uint64_t mitigated_shots = 0;  // N_QEM

  void validate() const;
};

/// Improvement factor; `unbounded` when every mitigated trial is exact.
struct Improvement {
  double value = 0.0;
  bool unbounded = false;
};

double rmse(std::span<const double> values, double ideal);

/// mu = sqrt(N sum (A' - A)^2) / sqrt(N_QEM sum (A_QEM - A)^2).
Improvement improvement_factor_problem(const ProblemResult& r);

/// Pooled ratio over every problem and trial; all problems must share N and
/// N_QEM.
Improvement improvement_factor_aggregate(std::span<const ProblemResult> results);

/// |A_QEM - A| / |A' - A|.
double relative_mitigation_error(double mitigated, double noisy, double ideal);

}  // namespace qembench

#endif  // QEMBENCH_METRICS_H_
