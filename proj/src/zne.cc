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

#include "qembench/zne.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "qembench/errors.h"
#include "qembench/transforms.h"

namespace qembench {

std::string extrapolator_name(Extrapolator e) {
  return e == Extrapolator::kLinear ? "linear" : "richardson";
}

namespace {

void check_nodes(std::span<const double> nodes) {
  if (nodes.size() < 2) {
    throw Error(ErrorCode::kDegenerateNodes, "extrapolation needs at least two scale factors");
  }
  std::set<double> seen;
  for (double x : nodes) {
    if (!std::isfinite(x)) throw Error(ErrorCode::kDegenerateNodes, "scale factor is not finite");
    if (!seen.insert(x).second) {
      throw Error(ErrorCode::kDegenerateNodes,
                  "duplicate scale factor " + std::to_string(x));
    }
  }
}

}  // namespace

void ZneConfig::validate() const {
  check_nodes(scale_factors);
  for (double x : scale_factors) {
    if (x < 1.0) throw Error(ErrorCode::kInvalidScaleFactor, "scale factors must be >= 1");
  }
  if (shots < scale_factors.size()) {
    throw Error(ErrorCode::kConfig, "shot budget smaller than the number of scale factors");
  }
}

std::vector<double> richardson_coefficients(std::span<const double> nodes) {
  check_nodes(nodes);
  std::vector<double> eta(nodes.size(), 1.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i) eta[i] *= nodes[j] / (nodes[j] - nodes[i]);
    }
  }
  return eta;
}

std::vector<double> linear_coefficients(std::span<const double> nodes) {
  check_nodes(nodes);
  const double k = static_cast<double>(nodes.size());
  double mean = 0.0;
  for (double x : nodes) mean += x;
  mean /= k;
  double sxx = 0.0;
  for (double x : nodes) sxx += (x - mean) * (x - mean);
  // intercept = ybar - slope * xbar, slope = sum (x_i - xbar) y_i / sxx.
  std::vector<double> w;
  w.reserve(nodes.size());
  for (double x : nodes) w.push_back(1.0 / k - mean * (x - mean) / sxx);
  return w;
}

double linear_intercept(std::span<const double> nodes, std::span<const double> values) {
  if (nodes.size() != values.size()) {
    throw Error(ErrorCode::kLengthMismatch, "scale factors and values differ in length");
  }
  const auto w = linear_coefficients(nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * values[i];
  return acc;
}

std::vector<double> extrapolation_coefficients(Extrapolator e, std::span<const double> nodes) {
  return e == Extrapolator::kLinear ? linear_coefficients(nodes) : richardson_coefficients(nodes);
}

ZneOutcome execute_zne(const BenchmarkInstance& instance, const Executor& executor,
                       const ZneConfig& config, Rng& rng) {
  config.validate();
  const std::size_t k = config.scale_factors.size();
  ZneOutcome out;
  out.coefficients = extrapolation_coefficients(config.extrapolator, config.scale_factors);
  out.shots_per_scale = config.shots / k;
  out.total_shots = out.shots_per_scale * k;

  const Rng streams = rng.split(rng());
  for (std::size_t i = 0; i < k; ++i) {
    const double lambda = config.scale_factors[i];
    Rng sub = streams.split(i);
    try {
      Circuit scaled = fold_global(instance.circuit, lambda);
      if (config.barriers) {
        scaled = insert_rotation_barriers(scaled, config.barrier_angle, sub).circuit;
      }
      if (config.optimize) scaled = cancel_inverses(scaled);
      out.scaled_values.push_back(executor(scaled, out.shots_per_scale, sub).value);
    } catch (const Error& e) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", lambda);
      throw e.with_context(std::string("scale factor ") + buf);
    }
  }
  out.value = 0.0;
  for (std::size_t i = 0; i < k; ++i) out.value += out.coefficients[i] * out.scaled_values[i];
  out.out_of_range = out.value < 0.0 || out.value > 1.0;
  return out;
}

}  // namespace qembench
