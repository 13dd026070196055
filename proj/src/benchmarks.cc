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

#include "qembench/benchmarks.h"

#include <algorithm>
#include <numeric>

#include "qembench/clifford.h"
#include "qembench/errors.h"
#include "qembench/tableau.h"

namespace qembench {

std::string benchmark_kind_name(BenchmarkKind kind) {
  return kind == BenchmarkKind::kRB ? "rb" : "mirror";
}

BenchmarkKind benchmark_kind_from_name(const std::string& name) {
  if (name == "rb") return BenchmarkKind::kRB;
  if (name == "mirror") return BenchmarkKind::kMirror;
  throw Error(ErrorCode::kConfig, "unknown circuit kind '" + name + "' (expected rb or mirror)");
}

std::vector<Edge> line_connectivity(std::size_t n_qubits) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
    edges.emplace_back(static_cast<Qubit>(i), static_cast<Qubit>(i + 1));
  }
  return edges;
}

namespace {

Bitstring noiseless_outcome(const Circuit& circuit) {
  Tableau t(circuit.n_qubits());
  for (const auto& g : circuit.gates()) t.apply(g);
  Bitstring out(circuit.n_qubits(), '0');
  for (Qubit q = 0; q < circuit.n_qubits(); ++q) out[q] = t.peek_deterministic(q) ? '1' : '0';
  return out;
}

void append_fragment(Circuit& c, const std::vector<Gate>& fragment) {
  for (const auto& g : fragment) c.append(g);
}

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

}  // namespace

BenchmarkInstance generate_rb_circuit(std::size_t n_qubits, std::size_t depth, Rng& rng) {
  if (n_qubits < 1) throw Error(ErrorCode::kInvalidArgument, "RB needs at least one qubit");
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "RB depth must be at least 1");
  if (n_qubits > Tableau::kMaxQubits) {
    throw Error(ErrorCode::kSizeLimit, "RB supports at most 64 qubits");
  }

  struct Register {
    std::vector<Qubit> qubits;
    const CliffordGroup* group;
    Tableau net;
  };
  std::vector<Register> registers;
  for (std::size_t q = 0; q + 1 < n_qubits; q += 2) {
    registers.push_back(
        {{static_cast<Qubit>(q), static_cast<Qubit>(q + 1)}, &CliffordGroup::two_qubit(), Tableau(2)});
  }
  if (n_qubits % 2 == 1) {
    registers.push_back(
        {{static_cast<Qubit>(n_qubits - 1)}, &CliffordGroup::one_qubit(), Tableau(1)});
  }

  Circuit circuit(n_qubits);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    for (auto& reg : registers) {
      const CliffordElement e = reg.group->sample(rng);
      for (const auto& g : e.fragment) reg.net.apply(g);
      append_fragment(circuit, relabel(e.fragment, reg.qubits));
    }
  }
  for (auto& reg : registers) {
    const std::size_t inv = reg.group->inverse_index(reg.group->index_of(reg.net));
    append_fragment(circuit, relabel(reg.group->element(inv).fragment, reg.qubits));
  }

  for (Qubit q = 0; q < n_qubits; ++q) circuit.append(Gate::measure(q));
  return BenchmarkInstance{std::move(circuit), Bitstring(n_qubits, '0'), depth, BenchmarkKind::kRB};
}

BenchmarkInstance generate_mirror_circuit(std::size_t n_qubits, std::size_t depth, Rng& rng,
                                          const MirrorOptions& options) {
  if (n_qubits < 2) throw Error(ErrorCode::kInvalidArgument, "mirror circuits need n >= 2");
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "mirror depth must be at least 1");
  if (n_qubits > Tableau::kMaxQubits) {
    throw Error(ErrorCode::kSizeLimit, "mirror circuits support at most 64 qubits");
  }
  std::vector<Edge> edges =
      options.connectivity.empty() ? line_connectivity(n_qubits) : options.connectivity;
  for (const auto& [a, b] : edges) {
    if (a >= n_qubits || b >= n_qubits || a == b) {
      throw Error(ErrorCode::kInvalidTopology, "edge (" + std::to_string(a) + "," +
                                                   std::to_string(b) + ") is not valid for " +
                                                   std::to_string(n_qubits) + " qubits");
    }
  }
  if (edges.size() + 1 < n_qubits || !connected(n_qubits, edges)) {
    throw Error(ErrorCode::kInvalidTopology,
                "connectivity must connect all " + std::to_string(n_qubits) + " qubits");
  }

  const CliffordGroup& c1 = CliffordGroup::one_qubit();
  auto one_qubit_layer = [&](Circuit& c) {
    std::vector<std::size_t> picks(n_qubits);
    for (Qubit q = 0; q < n_qubits; ++q) {
      picks[q] = c1.sample(rng).index;
      append_fragment(c, relabel(c1.element(picks[q]).fragment, {q}));
    }
    return picks;
  };
  auto pauli_layer = [&](Circuit& c) {
    static constexpr GateKind kPaulis[] = {GateKind::kI, GateKind::kX, GateKind::kY, GateKind::kZ};
    for (Qubit q = 0; q < n_qubits; ++q) {
      const GateKind k = kPaulis[rng.below(4)];
      if (k != GateKind::kI) c.append(Gate::one(k, q));
    }
  };

  Circuit head(n_qubits);
  const std::vector<std::size_t> initial = one_qubit_layer(head);

  std::vector<Circuit> clifford_layers;
  Circuit forward(n_qubits);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    pauli_layer(forward);
    Circuit k(n_qubits);
    one_qubit_layer(k);
    std::vector<Edge> order = edges;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<bool> busy(n_qubits, false);
    for (const auto& [a, b] : order) {
      if (busy[a] || busy[b]) continue;
      if (options.two_qubit_gate_prob < 1.0 && !rng.bernoulli(options.two_qubit_gate_prob)) continue;
      busy[a] = busy[b] = true;
      const bool flip = (rng() & 1) != 0;
      k.append(Gate::two(GateKind::kCNOT, flip ? b : a, flip ? a : b));
    }
    forward.append(k);
    clifford_layers.push_back(std::move(k));
  }

  Circuit circuit = head;
  circuit.append(forward);
  pauli_layer(circuit);
  for (auto it = clifford_layers.rbegin(); it != clifford_layers.rend(); ++it) {
    circuit.append(it->inverse());
    pauli_layer(circuit);
  }
  for (Qubit q = 0; q < n_qubits; ++q) {
    const std::size_t inv = c1.inverse_index(initial[q]);
    append_fragment(circuit, relabel(c1.element(inv).fragment, {q}));
  }

  Bitstring target = noiseless_outcome(circuit);
  for (Qubit q = 0; q < n_qubits; ++q) circuit.append(Gate::measure(q));
  return BenchmarkInstance{std::move(circuit), std::move(target), depth, BenchmarkKind::kMirror};
}

}  // namespace qembench
