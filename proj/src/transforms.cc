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

#include "qembench/transforms.h"

#include <cmath>
#include <vector>

#include "qembench/errors.h"

namespace qembench {

Circuit fold_global(const Circuit& circuit, double scale_factor) {
  if (!std::isfinite(scale_factor) || scale_factor < 1.0) {
    throw Error(ErrorCode::kInvalidScaleFactor,
                "scale factor must be >= 1, got " + std::to_string(scale_factor));
  }
  const Circuit body = circuit.without_measurements();
  const Circuit body_inv = body.inverse();
  const std::size_t size = body.size();

  const auto whole = static_cast<std::size_t>(std::floor((scale_factor - 1.0) / 2.0));
  const double remainder = scale_factor - static_cast<double>(2 * whole + 1);
  const auto partial =
      static_cast<std::size_t>(std::llround(remainder / 2.0 * static_cast<double>(size)));

  Circuit out(circuit.n_qubits());
  out.append(Circuit(circuit.n_qubits(), body.gates()));
  for (std::size_t i = 0; i < whole; ++i) {
    out.mark_barrier();
    out.append(Circuit(circuit.n_qubits(), body_inv.gates()));
    out.mark_barrier();
    out.append(Circuit(circuit.n_qubits(), body.gates()));
  }
  if (partial > 0) {
    const std::vector<Gate> tail(body.gates().end() - static_cast<std::ptrdiff_t>(partial),
                                 body.gates().end());
    const Circuit tail_circuit(circuit.n_qubits(), tail);
    out.mark_barrier();
    out.append(tail_circuit.inverse());
    out.mark_barrier();
    out.append(tail_circuit);
  }
  for (Qubit q : circuit.measured_qubits()) out.append(Gate::measure(q));
  return out;
}

BarrierInsertion insert_rotation_barriers(const Circuit& folded, double angle_magnitude, Rng& rng) {
  BarrierInsertion result;
  const auto& barriers = folded.barriers();
  if (barriers.empty()) {
    result.circuit = folded;
    result.missing_boundaries = true;
    return result;
  }
  auto angle = [&] { return (rng() & 1) ? angle_magnitude : -angle_magnitude; };

  Circuit out(folded.n_qubits());
  const auto& gates = folded.gates();
  std::size_t next = 0;
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    while (next < barriers.size() && barriers[next] == i) {
      out.mark_barrier();
      for (Qubit q = 0; q < folded.n_qubits(); ++q) {
        out.append(Gate::rotation(GateKind::kRX, q, angle()));
        out.append(Gate::rotation(GateKind::kRY, q, angle()));
        out.append(Gate::rotation(GateKind::kRZ, q, angle()));
      }
      ++result.layers_inserted;
      ++next;
    }
    if (i < gates.size()) out.append(gates[i]);
  }
  result.circuit = std::move(out);
  return result;
}

Circuit cancel_inverses(const Circuit& circuit) {
  std::vector<Gate> current = circuit.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    // Per-qubit stacks of surviving gate indices; a gate cancels with the
    // gate on top of every stack it touches when that gate is its inverse.
    std::vector<std::vector<std::size_t>> stacks(circuit.n_qubits());
    std::vector<bool> alive(current.size(), true);
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Gate& g = current[i];
      if (g.kind != GateKind::kMeasure) {
        auto& s0 = stacks[g.q0];
        if (!s0.empty()) {
          const std::size_t j = s0.back();
          const bool same_top = g.arity() == 1 || (!stacks[g.q1].empty() && stacks[g.q1].back() == j);
          if (same_top && current[j].arity() == g.arity() && cancels(current[j], g)) {
            alive[i] = alive[j] = false;
            s0.pop_back();
            if (g.arity() == 2) stacks[g.q1].pop_back();
            changed = true;
            continue;
          }
        }
      }
      stacks[g.q0].push_back(i);
      if (g.arity() == 2) stacks[g.q1].push_back(i);
    }
    if (changed) {
      std::vector<Gate> next;
      next.reserve(current.size());
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (alive[i]) next.push_back(current[i]);
      }
      current = std::move(next);
    }
  }
  return Circuit(circuit.n_qubits(), std::move(current));
}

}  // namespace qembench
