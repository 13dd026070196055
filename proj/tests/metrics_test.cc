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

#include <gtest/gtest.h>

#include <cmath>

#include "qembench/errors.h"
#include "qembench/rng.h"

namespace qembench {
namespace {

// Pooled improvement factor written out directly from the definition: every
// problem and trial contributes a squared error to one of two sums.
double pooled_mu(const std::vector<ProblemResult>& problems) {
  double num = 0.0, den = 0.0;
  for (const auto& p : problems) {
    for (std::size_t i = 0; i < p.noisy.size(); ++i) {
      num += p.shots * std::pow(p.noisy[i] - p.ideal, 2);
      den += p.mitigated_shots * std::pow(p.mitigated[i] - p.ideal, 2);
    }
  }
  return std::sqrt(num) / std::sqrt(den);
}

ProblemResult make(std::vector<double> noisy, std::vector<double> mitigated, std::uint64_t n = 10000,
                   std::uint64_t nq = 9999) {
  ProblemResult r;
  r.noisy = std::move(noisy);
  r.mitigated = std::move(mitigated);
  r.shots = n;
  r.mitigated_shots = nq;
  return r;
}

TEST(Rmse, Basic) {
  const std::vector<double> v{0.9, 1.1, 1.0, 0.8};
  EXPECT_NEAR(rmse(v, 1.0), std::sqrt((0.01 + 0.01 + 0.0 + 0.04) / 4), 1e-15);
  EXPECT_THROW(rmse(std::vector<double>{}, 1.0), Error);
}

TEST(ImprovementFactor, SingleProblem) {
  const auto r = make({0.9}, {0.95}, 100, 100);
  const Improvement mu = improvement_factor_problem(r);
  EXPECT_FALSE(mu.unbounded);
  EXPECT_NEAR(mu.value, 2.0, 1e-12);
}

TEST(ImprovementFactor, ShotNormalization) {
  // Four times the shots halves the factor.
  const auto r = make({0.9}, {0.95}, 100, 400);
  EXPECT_NEAR(improvement_factor_problem(r).value, 1.0, 1e-12);
}

TEST(ImprovementFactor, AggregateMatchesDefinition) {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ProblemResult> problems;
    const std::size_t count = 1 + rng.below(6);
    const std::size_t t = 1 + rng.below(3);
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<double> a, b;
      for (std::size_t i = 0; i < t; ++i) {
        a.push_back(0.6 + 0.4 * rng.uniform());
        b.push_back(0.8 + 0.4 * rng.uniform());
      }
      problems.push_back(make(a, b));
    }
    const Improvement mu = improvement_factor_aggregate(problems);
    EXPECT_NEAR(mu.value, pooled_mu(problems), 1e-12);
  }
}

TEST(ImprovementFactor, PooledIsNotMeanOfRatios) {
  const std::vector<ProblemResult> problems{make({0.9}, {0.95}, 1, 1), make({0.5}, {0.9}, 1, 1)};
  const double pooled = improvement_factor_aggregate(problems).value;
  EXPECT_NEAR(pooled, std::sqrt(0.01 + 0.25) / std::sqrt(0.0025 + 0.01), 1e-12);
  const double mean_of_ratios = (2.0 + 5.0) / 2;
  EXPECT_GT(std::abs(pooled - mean_of_ratios), 0.1);
}

TEST(ImprovementFactor, Unbounded) {
  const auto r = make({0.9, 0.8}, {1.0, 1.0});
  EXPECT_TRUE(improvement_factor_problem(r).unbounded);
  const std::vector<ProblemResult> both{r, r};
  EXPECT_TRUE(improvement_factor_aggregate(both).unbounded);
}

TEST(ImprovementFactor, InconsistentShotsRejected) {
  const std::vector<ProblemResult> problems{make({0.9}, {0.95}, 100, 99), make({0.9}, {0.95}, 100, 100)};
  try {
    improvement_factor_aggregate(problems);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAggregation);
  }
}

TEST(ImprovementFactor, InvalidProblems) {
  EXPECT_THROW(improvement_factor_problem(make({}, {})), Error);
  EXPECT_THROW(improvement_factor_problem(make({0.9}, {0.9, 0.8})), Error);
  EXPECT_THROW(improvement_factor_aggregate(std::vector<ProblemResult>{}), Error);
}

TEST(RelativeMitigationError, Definition) {
  EXPECT_NEAR(relative_mitigation_error(0.95, 0.9, 1.0), 0.5, 1e-12);
  EXPECT_NEAR(relative_mitigation_error(1.02, 0.9, 1.0), 0.2, 1e-12);
  try {
    relative_mitigation_error(0.9, 1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
  }
}

TEST(RelativeMitigationError, InverseOfSingleTrialFactor) {
  // With t = 1 and equal shot budgets, mu = 1 / relative error.
  const auto r = make({0.83}, {0.97}, 500, 500);
  EXPECT_NEAR(improvement_factor_problem(r).value, 1.0 / relative_mitigation_error(0.97, 0.83, 1.0),
              1e-12);
}

}  // namespace
}  // namespace qembench
