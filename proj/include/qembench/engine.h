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

#ifndef QEMBENCH_ENGINE_H_
#define QEMBENCH_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "qembench/circuit.h"
#include "qembench/noise.h"
#include "qembench/rng.h"

namespace qembench {

enum class Backend { kTableau, kStatevector };

std::string backend_name(Backend backend);
Backend backend_from_name(const std::string& name);

struct ShotResult {
  std::map<Bitstring, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::string backend;
  std::uint64_t seed = 0;  // key of the stream the shots were derived from

  std::string to_json() const;
};

struct ExpectationEstimate {
  double value = 0.0;
  std::uint64_t shots = 0;
  double std_error = 0.0;
};

struct EngineOptions {
  /// Rotations with |angle| <= angle_clip act as identity on the tableau
  /// backend; larger ones are rejected there.
  double angle_clip = 1e-3;
  std::size_t threads = 1;
};

inline constexpr std::size_t kStatevectorMaxQubits = 10;

/// Pauli-trajectory sampling on the stabilizer backend. Each shot runs from
/// its own substream split off `rng`, so counts do not depend on `threads`.
/// Outcomes cover the measured qubits in measurement order, or every qubit
/// when the circuit has no measurement layer.
ShotResult run_shots(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots, Rng& rng,
                     const EngineOptions& options = {});

/// Same sampling semantics on dense amplitudes; rotations are exact.
ShotResult run_statevector(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                           Rng& rng, const EngineOptions& options = {});

ShotResult run_backend(Backend backend, const Circuit& circuit, const NoiseModel& model,
                       std::uint64_t shots, Rng& rng, const EngineOptions& options = {});

/// Deterministic noiseless outcome of a Clifford circuit.
Bitstring ideal_bitstring(const Circuit& circuit, double angle_clip = 1e-3);

/// Fraction of shots equal to `target`, with binomial standard error.
ExpectationEstimate estimate_expectation(const ShotResult& result, const Bitstring& target);

/// Total variation distance between two empirical distributions.
double total_variation_distance(const ShotResult& a, const ShotResult& b);

}  // namespace qembench

#endif  // QEMBENCH_ENGINE_H_
