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

#ifndef QEMBENCH_BENCHMARKS_H_
#define QEMBENCH_BENCHMARKS_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qembench/circuit.h"
#include "qembench/rng.h"

namespace qembench {

enum class BenchmarkKind { kRB, kMirror };

std::string benchmark_kind_name(BenchmarkKind kind);
BenchmarkKind benchmark_kind_from_name(const std::string& name);

struct BenchmarkInstance {
  Circuit circuit;
  Bitstring target_bitstring;
  std::size_t clifford_depth = 0;
  BenchmarkKind kind = BenchmarkKind::kRB;
};

/// Edges (i, i+1) of a line over n qubits.
std::vector<Edge> line_connectivity(std::size_t n_qubits);

/// Parallel RB: two-qubit RB sequences on line pairs (0,1), (2,3), ... and a
/// one-qubit sequence on the last qubit when n is odd. Each register gets
/// `depth` random Clifford elements followed by their inverse.
BenchmarkInstance generate_rb_circuit(std::size_t n_qubits, std::size_t depth, Rng& rng);

struct MirrorOptions {
  std::vector<Edge> connectivity;      // empty: line over all qubits
  double two_qubit_gate_prob = 1.0;    // chance each free edge joins a layer
};

/// Mirror circuit with `depth` random Clifford layers:
///   L0, (P_i, K_i) for i = 1..depth, P_mid, (K_i^-1, P'_i) for i = depth..1, L0^-1
/// where L0 is a layer of one-qubit Cliffords, P are uniformly random Pauli
/// layers and each K_i is one-qubit Cliffords on every qubit followed by
/// CNOTs on a random set of disjoint edges.
BenchmarkInstance generate_mirror_circuit(std::size_t n_qubits, std::size_t depth, Rng& rng,
                                          const MirrorOptions& options = {});

}  // namespace qembench

#endif  // QEMBENCH_BENCHMARKS_H_
