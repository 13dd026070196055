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

#ifndef QEMBENCH_TABLEAU_H_
#define QEMBENCH_TABLEAU_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qembench/circuit.h"
#include "qembench/rng.h"

namespace qembench {

/// Stabilizer tableau over at most 64 qubits.
///
/// Rows 0..n-1 hold the images U X_i U^dagger (destabilizers) and rows n..2n-1
/// the images U Z_i U^dagger (stabilizers) of the Clifford U applied so far.
/// Each row is a signed Hermitian Pauli with bit-packed x and z parts. The
/// same object therefore serves both as the state U|0..0> and as the
/// operator U itself.
class Tableau {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  explicit Tableau(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_; }

  void h(Qubit a);
  void s(Qubit a);
  void s_dag(Qubit a);
  void sqrt_x(Qubit a);
  void sqrt_x_dag(Qubit a);
  void x(Qubit a);
  void y(Qubit a);
  void z(Qubit a);
  void cnot(Qubit control, Qubit target);
  void cz(Qubit a, Qubit b);

  /// Applies a Clifford gate. Rotations are rejected; measurements are not
  /// gates here, use measure().
  void apply(const Gate& gate);

  /// True when measuring qubit a in the Z basis has a deterministic outcome.
  bool is_deterministic(Qubit a) const;
  /// Z-basis measurement; random outcomes are drawn from `rng`.
  bool measure(Qubit a, Rng& rng);
  /// Outcome of a deterministic measurement without collapsing the state.
  bool peek_deterministic(Qubit a) const;

  /// Checks the commutation relations between all rows.
  bool is_valid() const;

  /// Compact identity for n <= 2 (bits of x, z and sign of every row).
  std::uint64_t key() const;

  std::uint64_t row_x(std::size_t row) const { return xs_[row]; }
  std::uint64_t row_z(std::size_t row) const { return zs_[row]; }
  bool row_sign(std::size_t row) const { return signs_[row] != 0; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  struct Row {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool sign = false;
  };
  static void multiply_into(Row& target, const Row& source);
  Row row(std::size_t i) const { return Row{xs_[i], zs_[i], signs_[i] != 0}; }
  void set_row(std::size_t i, const Row& r);
  void check_qubit(Qubit a) const;

  std::size_t n_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::vector<std::uint8_t> signs_;
};

/// Tableau of the Clifford implemented by the circuit's gates (rotations and
/// measurements rejected).
Tableau tableau_of(const Circuit& circuit);

}  // namespace qembench

#endif  // QEMBENCH_TABLEAU_H_
