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

#ifndef QEMBENCH_CLIFFORD_H_
#define QEMBENCH_CLIFFORD_H_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qembench/circuit.h"
#include "qembench/rng.h"
#include "qembench/tableau.h"

namespace qembench {

/// A Clifford group element on one or two local qubits (0 and 1), stored as
/// its canonical gate fragment.
struct CliffordElement {
  std::size_t n_qubits = 1;
  std::size_t index = 0;  // position in the group table
  std::vector<Gate> fragment;
};

/// Every element of the 1- or 2-qubit Clifford group (modulo global phase)
/// with a fixed decomposition, plus inverse and lookup-by-tableau tables.
///
/// One-qubit fragments are shortest words over {H, S, Sdg, X, Y, Z, SX, SXdg}.
/// Two-qubit fragments use the four-class product form
///   (S1 x S2) . core . (A x B),   in time order,
/// with A, B one-qubit Cliffords, S1, S2 in {I, V, V^2} for an order-3 V, and
/// core one of {nothing, CNOT, CNOT CNOT(rev), CNOT CNOT(rev) CNOT}. That
/// gives 576 + 5184 + 5184 + 576 = 11520 elements with at most 3 CNOTs.
class CliffordGroup {
 public:
  static const CliffordGroup& one_qubit();
  static const CliffordGroup& two_qubit();
  static const CliffordGroup& of_width(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const CliffordElement& element(std::size_t index) const { return elements_.at(index); }
  std::size_t inverse_index(std::size_t index) const { return inverses_.at(index); }

  /// Index of the element whose tableau is `t`; throws if none.
  std::size_t index_of(const Tableau& t) const;

  CliffordElement sample(Rng& rng) const;

 private:
  explicit CliffordGroup(std::size_t n_qubits);
  void add(std::vector<Gate> fragment);
  void finish();

  std::size_t n_;
  std::vector<CliffordElement> elements_;
  std::vector<std::size_t> inverses_;
  std::unordered_map<std::uint64_t, std::size_t> by_key_;
};

/// Uniformly random Clifford element; n_qubits must be 1 or 2.
CliffordElement sample_clifford(std::size_t n_qubits, Rng& rng);

/// Tableau of a local fragment.
Tableau fragment_tableau(std::size_t n_qubits, const std::vector<Gate>& fragment);

/// Copies `fragment` onto physical qubits (`map[local] = physical`).
std::vector<Gate> relabel(const std::vector<Gate>& fragment, const std::vector<Qubit>& map);

}  // namespace qembench

#endif  // QEMBENCH_CLIFFORD_H_
