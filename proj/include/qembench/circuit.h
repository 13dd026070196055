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

#ifndef QEMBENCH_CIRCUIT_H_
#define QEMBENCH_CIRCUIT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qembench {

using Qubit = std::uint32_t;
using Edge = std::pair<Qubit, Qubit>;
using Bitstring = std::string;  // '0'/'1' per qubit, qubit 0 first

enum class GateKind : std::uint8_t {
  kI,  // identity marker; counted as a one-qubit instruction
  kH,
  kS,
  kSdg,
  kX,
  kY,
  kZ,
  kSqrtX,
  kSqrtXdg,
  kRX,
  kRY,
  kRZ,
  kCNOT,
  kCZ,
  kMeasure,
};

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);
bool is_clifford(GateKind kind);
bool is_pauli(GateKind kind);

struct Gate {
  GateKind kind = GateKind::kI;
  Qubit q0 = 0;
  Qubit q1 = 0;       // second target for two-qubit kinds
  double angle = 0;   // radians, rotations only

  static Gate one(GateKind kind, Qubit q) { return Gate{kind, q, 0, 0}; }
  static Gate two(GateKind kind, Qubit a, Qubit b) { return Gate{kind, a, b, 0}; }
  static Gate rotation(GateKind kind, Qubit q, double angle) { return Gate{kind, q, 0, angle}; }
  static Gate measure(Qubit q) { return Gate{GateKind::kMeasure, q, 0, 0}; }

  std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }
  bool acts_on(Qubit q) const { return q0 == q || (arity() == 2 && q1 == q); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Inverse of a single gate; every supported kind has a single-gate inverse.
Gate inverse(const Gate& gate);

/// True when `b` undoes `a` exactly (same targets in the same order).
/// Rotations never qualify.
bool cancels(const Gate& a, const Gate& b);

struct GateCounts {
  std::size_t two_qubit = 0;
  std::size_t single_qubit = 0;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits);
  Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::vector<std::size_t> barriers = {});

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  /// Fold-block boundaries: a value b means a boundary before gates()[b].
  const std::vector<std::size_t>& barriers() const { return barriers_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void append(const Gate& gate);
  void append(const Circuit& other);
  void mark_barrier();

  /// Gates excluding the trailing measurement layer.
  Circuit without_measurements() const;
  /// Qubits measured by the trailing layer, in order.
  std::vector<Qubit> measured_qubits() const;
  bool has_measurements() const;

  /// Reverse order with each gate inverted; barriers are mirrored.
  Circuit inverse() const;

  /// Throws kInvalidArgument if any gate breaks the IR invariants.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> barriers_;
};

GateCounts gate_counts(const Circuit& circuit);

/// Line-oriented text format: `QUBITS n` header, then one `GATE q0 [q1] [angle]`
/// per line. `BARRIER` lines record fold-block boundaries; `#` starts a comment.
std::string to_text(const Circuit& circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace qembench

#endif  // QEMBENCH_CIRCUIT_H_
