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

#include "qembench/pec.h"

#include <cmath>
#include <string>

#include "qembench/errors.h"

namespace qembench {
namespace {

GateKind pauli_gate(Pauli p) {
  switch (p) {
    case Pauli::kX: return GateKind::kX;
    case Pauli::kY: return GateKind::kY;
    case Pauli::kZ: return GateKind::kZ;
    case Pauli::kI: break;
  }
  return GateKind::kI;
}

}  // namespace

DepolarizingInverse inverse_depolarizing(double p) {
  if (!(p >= 0.0) || p >= 0.75) {
    throw Error(ErrorCode::kNonInvertibleChannel,
                "depolarizing channel with p = " + std::to_string(p) + " is not invertible");
  }
  const double shrink = 1.0 - 4.0 * p / 3.0;
  return DepolarizingInverse{(1.0 - p / 3.0) / shrink, -(p / 3.0) / shrink};
}

OperationRepresentation represent_2q_gate(const Gate& gate, double p) {
  if (!is_two_qubit(gate.kind)) {
    throw Error(ErrorCode::kInvalidArgument, "only two-qubit gates are represented");
  }
  const DepolarizingInverse inv = inverse_depolarizing(p);
  OperationRepresentation rep;
  rep.ideal = gate;
  rep.local_p = p;
  if (p == 0.0) {
    rep.terms.push_back(QuasiTerm{1.0, Pauli::kI, Pauli::kI, {gate}});
    rep.one_norm = 1.0;
    return rep;
  }
  static constexpr Pauli kAll[] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
  rep.one_norm = 0.0;
  for (Pauli a : kAll) {
    for (Pauli b : kAll) {
      const double eta_a = a == Pauli::kI ? inv.identity : inv.pauli;
      const double eta_b = b == Pauli::kI ? inv.identity : inv.pauli;
      QuasiTerm term{eta_a * eta_b, a, b, {gate}};
      if (a != Pauli::kI) term.fragment.push_back(Gate::one(pauli_gate(a), gate.q0));
      if (b != Pauli::kI) term.fragment.push_back(Gate::one(pauli_gate(b), gate.q1));
      rep.one_norm += std::abs(term.coefficient);
      rep.terms.push_back(std::move(term));
    }
  }
  return rep;
}

void PecConfig::validate() const {
  if (samples == 0) throw Error(ErrorCode::kConfig, "PEC needs at least one sample");
  if (shots < samples) throw Error(ErrorCode::kConfig, "PEC shot budget smaller than sample count");
}

RepresentationMap build_representations(const Circuit& circuit, const NoiseModel& model,
                                        const PecConfig& config) {
  RepresentationMap reps;
  const auto& gates = circuit.gates();
  const double average = config.uniform_average ? model.average_two_qubit_local_p() : 0.0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!is_two_qubit(g.kind)) continue;
    double p;
    if (config.override_p) {
      p = *config.override_p;
    } else if (config.uniform_average) {
      p = average;
    } else {
      p = model.two_qubit_local_p(g.q0, g.q1);
    }
    reps.emplace(i, represent_2q_gate(g, p));
  }
  return reps;
}

PecSampling sample_pec_circuits(const Circuit& circuit, const RepresentationMap& reps,
                                std::size_t k, Rng& rng) {
  const auto& gates = circuit.gates();
  PecSampling out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!is_two_qubit(gates[i].kind)) continue;
    auto it = reps.find(i);
    if (it == reps.end()) {
      throw Error(ErrorCode::kIncompleteCalibration,
                  "no representation for two-qubit gate at position " + std::to_string(i));
    }
    out.gamma_total *= it->second.one_norm;
  }
  out.samples.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    Circuit sampled(circuit.n_qubits());
    int sign = 1;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      auto it = reps.find(i);
      if (it == reps.end()) {
        sampled.append(gates[i]);
        continue;
      }
      const OperationRepresentation& rep = it->second;
      double u = rng.uniform() * rep.one_norm;
      const QuasiTerm* chosen = &rep.terms.back();
      for (const auto& term : rep.terms) {
        const double w = std::abs(term.coefficient);
        if (u < w) {
          chosen = &term;
          break;
        }
        u -= w;
      }
      if (chosen->coefficient < 0.0) sign = -sign;
      for (const auto& g : chosen->fragment) sampled.append(g);
    }
    out.samples.push_back(PecSample{std::move(sampled), sign});
  }
  return out;
}

PecOutcome pec_estimate(std::span<const double> signed_estimates, double gamma_total,
                        std::uint64_t shots_per_sample) {
  if (signed_estimates.empty()) throw Error(ErrorCode::kEmptyResult, "no PEC samples to combine");
  PecOutcome out;
  out.gamma_total = gamma_total;
  out.samples = signed_estimates.size();
  out.signed_estimates.assign(signed_estimates.begin(), signed_estimates.end());
  out.shots_per_sample = shots_per_sample;
  out.total_shots = shots_per_sample * signed_estimates.size();
  double sum = 0.0;
  for (double v : signed_estimates) sum += v;
  out.value = gamma_total * sum / static_cast<double>(signed_estimates.size());
  out.out_of_range = out.value < 0.0 || out.value > 1.0;
  return out;
}

PecOutcome execute_pec(const BenchmarkInstance& instance, const Executor& executor,
                       const NoiseModel& model, const PecConfig& config, Rng& rng) {
  config.validate();
  const Circuit body = instance.circuit.without_measurements();
  const RepresentationMap reps = build_representations(body, model, config);
  const Rng streams = rng.split(rng());
  Rng sampling_rng = streams.split(0);
  PecSampling sampling = sample_pec_circuits(body, reps, config.samples, sampling_rng);
  const std::uint64_t shots_per_sample = config.shots / config.samples;
  std::vector<double> signed_estimates;
  signed_estimates.reserve(sampling.samples.size());
  for (std::size_t i = 0; i < sampling.samples.size(); ++i) {
    Circuit c = sampling.samples[i].circuit;
    for (Qubit q : instance.circuit.measured_qubits()) c.append(Gate::measure(q));
    Rng sub = streams.split(i + 1);
    const double v = executor(c, shots_per_sample, sub).value;
    signed_estimates.push_back(sampling.samples[i].sign * v);
  }
  return pec_estimate(signed_estimates, sampling.gamma_total, shots_per_sample);
}

}  // namespace qembench
