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

#ifndef QEMBENCH_NOISE_H_
#define QEMBENCH_NOISE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qembench/circuit.h"

namespace qembench {

enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

/// Stochastic single-qubit Pauli channel.
struct PauliChannel {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  /// D_p(rho) = (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
  static PauliChannel depolarizing(double p);

  double error_probability() const { return p_x + p_y + p_z; }
  bool is_identity() const { return error_probability() == 0.0; }
  /// Maps a uniform draw in [0,1) to a Pauli.
  Pauli sample(double u) const;
  void validate() const;
};

/// Local depolarizing noise D_p x D_p after a two-qubit gate.
struct TwoQubitNoise {
  double local_p = 0.0;
  PauliChannel first;   // on the lower-indexed qubit
  PauliChannel second;  // on the higher-indexed qubit
};

/// Per-gate Pauli noise and symmetric readout flips over logical qubits
/// 0..n-1. Immutable once built.
class NoiseModel {
 public:
  NoiseModel() = default;
  explicit NoiseModel(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::string& name() const { return name_; }

  /// Channel after a one-qubit gate on q, or nullptr for none.
  const PauliChannel* after_1q(Qubit q) const;
  /// Noise after a two-qubit gate on (a, b). Throws kIncompleteCalibration
  /// when the pair is not a calibrated edge.
  const TwoQubitNoise* after_2q(Qubit a, Qubit b) const;
  bool has_edge(Qubit a, Qubit b) const;
  double readout_flip(Qubit q) const;

  /// Local depolarizing parameter for the gate on (a, b).
  double two_qubit_local_p(Qubit a, Qubit b) const;
  /// Mean local parameter over all calibrated edges (or the uniform value).
  double average_two_qubit_local_p() const;

  bool is_noiseless() const;
  /// Physical label of logical qubit q (for error messages and provenance).
  std::string label(Qubit q) const;
  /// Logical edges with explicit noise entries, sorted.
  std::vector<Edge> edges() const;

  // Construction.
  void set_name(std::string name) { name_ = std::move(name); }
  void set_labels(std::vector<std::string> labels);
  void set_after_1q(Qubit q, const PauliChannel& channel);
  void set_edge(Qubit a, Qubit b, double local_p);
  void set_uniform_2q(double local_p);
  void set_readout_flip(Qubit q, double p);

 private:
  void check(Qubit q) const;

  std::size_t n_qubits_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::optional<PauliChannel>> one_qubit_;
  std::map<Edge, TwoQubitNoise> edges_;
  std::optional<TwoQubitNoise> uniform_;
  std::vector<double> readout_;
};

/// Inverts p_2Q = 1 - (1 - p)^2.
double local_depol_param(double p_two_qubit);

/// D_p x D_p after every two-qubit gate on any pair; no other noise.
NoiseModel build_depolarizing_model(double p, std::size_t n_qubits);

struct QubitCalibration {
  std::string label;
  double error_1q = 0.0;       // single-qubit gate error
  double error_readout = 0.0;  // readout assignment error
  std::optional<double> error_cx;  // per-qubit CNOT error as reported
};

struct EdgeCalibration {
  std::string a;
  std::string b;
  double error_cx = 0.0;
};

struct CalibrationData {
  std::string name;
  std::vector<QubitCalibration> qubits;
  std::vector<EdgeCalibration> edges;

  const QubitCalibration* find_qubit(std::string_view label) const;
  const EdgeCalibration* find_edge(std::string_view a, std::string_view b) const;
  /// Throws kParse on out-of-range probabilities or unknown edge endpoints.
  void validate() const;
};

/// Text format:
///   [qubits]
///   label  eps_1q  eps_m  [eps_cx]
///   [edges]
///   a-b  eps_cx
/// `#` starts a comment.
CalibrationData parse_calibration(std::string_view text, std::string name = "");
CalibrationData load_calibration(const std::filesystem::path& path);

/// Noise model over logical qubits 0..k-1 mapped onto the physical labels in
/// `layout` (default: every calibrated qubit in file order). Edges are the
/// calibrated couplings between layout qubits, each with local depolarizing
/// p = local_depol_param(eps_cx); one-qubit gates get depolarizing noise with
/// total error eps_1q; readout flips with eps_m.
NoiseModel build_calibration_model(const CalibrationData& cal,
                                   const std::vector<std::string>& layout = {});

}  // namespace qembench

#endif  // QEMBENCH_NOISE_H_
