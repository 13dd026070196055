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

#ifndef QEMBENCH_PEC_H_
#define QEMBENCH_PEC_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qembench/benchmarks.h"
#include "qembench/circuit.h"
#include "qembench/noise.h"
#include "qembench/rng.h"
#include "qembench/zne.h"

namespace qembench {

/// One signed term: the noisy gate followed by P_a on gate.q0 and P_b on
/// gate.q1.
struct QuasiTerm {
  double coefficient = 0.0;
  Pauli first = Pauli::kI;
  Pauli second = Pauli::kI;
  std::vector<Gate> fragment;
};

/// Signed decomposition of an ideal two-qubit gate into noisy operations.
struct OperationRepresentation {
  Gate ideal;
  double local_p = 0.0;
  std::vector<QuasiTerm> terms;
  double one_norm = 1.0;
};

/// Coefficients of the inverse of D_p: identity weight and per-Pauli weight.
struct DepolarizingInverse {
  double identity;
  double pauli;
};
DepolarizingInverse inverse_depolarizing(double p);

/// Exact representation of `gate` followed by D_p x D_p. p = 0 yields the
/// single term {1, gate}; otherwise 16 terms with eta_ab = eta_a * eta_b.
OperationRepresentation represent_2q_gate(const Gate& gate, double p);

struct PecConfig {
  std::size_t samples = 100;           // k_PEC
  std::uint64_t shots = 10000;         // total budget N
  std::optional<double> override_p;    // deliberate model mismatch
  bool uniform_average = false;        // one averaged p for every edge

  void validate() const;
};

/// Representations keyed by gate position in the circuit. One-qubit gates
/// get none.
using RepresentationMap = std::map<std::size_t, OperationRepresentation>;

RepresentationMap build_representations(const Circuit& circuit, const NoiseModel& model,
                                        const PecConfig& config = {});

struct PecSample {
  Circuit circuit;
  int sign = 1;
};

struct PecSampling {
  std::vector<PecSample> samples;
  double gamma_total = 1.0;
};

/// Draws `k` circuits; each two-qubit gate independently becomes term alpha
/// with probability |eta_alpha| / gamma.
PecSampling sample_pec_circuits(const Circuit& circuit, const RepresentationMap& reps,
                                std::size_t k, Rng& rng);

struct PecOutcome {
  double value = 0.0;                  // A_PEC
  double gamma_total = 1.0;
  std::size_t samples = 0;
  std::vector<double> signed_estimates;  // sign_i * A'_i
  std::uint64_t shots_per_sample = 0;
  std::uint64_t total_shots = 0;
  bool out_of_range = false;
};

/// A_PEC = gamma_total * mean(signed_estimates).
PecOutcome pec_estimate(std::span<const double> signed_estimates, double gamma_total,
                        std::uint64_t shots_per_sample);

PecOutcome execute_pec(const BenchmarkInstance& instance, const Executor& executor,
                       const NoiseModel& model, const PecConfig& config, Rng& rng);

}  // namespace qembench

#endif  // QEMBENCH_PEC_H_
