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

#include "qembench/circuit.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qembench/errors.h"

namespace qembench {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 15> kKinds = {{
    {GateKind::kI, "I"},
    {GateKind::kH, "H"},
    {GateKind::kS, "S"},
    {GateKind::kSdg, "SDG"},
    {GateKind::kX, "X"},
    {GateKind::kY, "Y"},
    {GateKind::kZ, "Z"},
    {GateKind::kSqrtX, "SX"},
    {GateKind::kSqrtXdg, "SXDG"},
    {GateKind::kRX, "RX"},
    {GateKind::kRY, "RY"},
    {GateKind::kRZ, "RZ"},
    {GateKind::kCNOT, "CNOT"},
    {GateKind::kCZ, "CZ"},
    {GateKind::kMeasure, "MEASURE"},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  const std::string key = upper(name);
  for (const auto& info : kKinds) {
    if (info.name == key) return info.kind;
  }
  if (key == "CX") return GateKind::kCNOT;
  if (key == "M") return GateKind::kMeasure;
  throw Error(ErrorCode::kParse, "unknown gate '" + std::string(name) + "'");
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::kCNOT || kind == GateKind::kCZ; }

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

bool is_clifford(GateKind kind) { return !is_rotation(kind) && kind != GateKind::kMeasure; }

bool is_pauli(GateKind kind) {
  return kind == GateKind::kI || kind == GateKind::kX || kind == GateKind::kY || kind == GateKind::kZ;
}

Gate inverse(const Gate& gate) {
  Gate out = gate;
  switch (gate.kind) {
    case GateKind::kS: out.kind = GateKind::kSdg; break;
    case GateKind::kSdg: out.kind = GateKind::kS; break;
    case GateKind::kSqrtX: out.kind = GateKind::kSqrtXdg; break;
    case GateKind::kSqrtXdg: out.kind = GateKind::kSqrtX; break;
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ: out.angle = -gate.angle; break;
    default: break;
  }
  return out;
}

bool cancels(const Gate& a, const Gate& b) {
  if (is_rotation(a.kind) || is_rotation(b.kind)) return false;
  if (a.kind == GateKind::kMeasure || b.kind == GateKind::kMeasure) return false;
  if (inverse(a).kind != b.kind) return false;
  if (a.kind == GateKind::kCZ) {
    return (a.q0 == b.q0 && a.q1 == b.q1) || (a.q0 == b.q1 && a.q1 == b.q0);
  }
  if (a.q0 != b.q0) return false;
  return a.arity() != 2 || a.q1 == b.q1;
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::vector<std::size_t> barriers)
    : n_qubits_(n_qubits), gates_(std::move(gates)), barriers_(std::move(barriers)) {
  validate();
}

void Circuit::append(const Gate& gate) {
  if (gate.q0 >= n_qubits_ || (gate.arity() == 2 && gate.q1 >= n_qubits_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gate " + std::string(gate_name(gate.kind)) + " targets a qubit outside 0.." +
                    std::to_string(n_qubits_ == 0 ? 0 : n_qubits_ - 1));
  }
  if (gate.arity() == 2 && gate.q0 == gate.q1) {
    throw Error(ErrorCode::kInvalidArgument, "two-qubit gate with repeated target");
  }
  if (is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
    throw Error(ErrorCode::kInvalidArgument, "rotation angle must be finite");
  }
  if (gate.kind != GateKind::kMeasure && has_measurements()) {
    throw Error(ErrorCode::kInvalidArgument, "gates may not follow the measurement layer");
  }
  gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  for (const auto& g : other.gates()) append(g);
}

void Circuit::mark_barrier() {
  if (barriers_.empty() || barriers_.back() != gates_.size()) barriers_.push_back(gates_.size());
}

bool Circuit::has_measurements() const {
  return !gates_.empty() && gates_.back().kind == GateKind::kMeasure;
}

Circuit Circuit::without_measurements() const {
  Circuit out(n_qubits_);
  for (const auto& g : gates_) {
    if (g.kind != GateKind::kMeasure) out.gates_.push_back(g);
  }
  for (auto b : barriers_) {
    if (b <= out.gates_.size()) out.barriers_.push_back(b);
  }
  return out;
}

std::vector<Qubit> Circuit::measured_qubits() const {
  std::vector<Qubit> out;
  for (const auto& g : gates_) {
    if (g.kind == GateKind::kMeasure) out.push_back(g.q0);
  }
  return out;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(qembench::inverse(*it));
  }
  for (auto it = barriers_.rbegin(); it != barriers_.rend(); ++it) {
    out.barriers_.push_back(gates_.size() - *it);
  }
  return out;
}

void Circuit::validate() const {
  bool measuring = false;
  for (const auto& g : gates_) {
    if (g.q0 >= n_qubits_ || (g.arity() == 2 && g.q1 >= n_qubits_)) {
      throw Error(ErrorCode::kInvalidArgument, "gate target out of range");
    }
    if (g.arity() == 2 && g.q0 == g.q1) {
      throw Error(ErrorCode::kInvalidArgument, "two-qubit gate with repeated target");
    }
    if (is_rotation(g.kind) && !std::isfinite(g.angle)) {
      throw Error(ErrorCode::kInvalidArgument, "rotation angle must be finite");
    }
    if (g.kind == GateKind::kMeasure) {
      measuring = true;
    } else if (measuring) {
      throw Error(ErrorCode::kInvalidArgument, "measurements must form a trailing layer");
    }
  }
  for (std::size_t i = 0; i < barriers_.size(); ++i) {
    if (barriers_[i] > gates_.size() || (i > 0 && barriers_[i] < barriers_[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "barrier positions must be ordered and in range");
    }
  }
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::kMeasure) continue;
    if (is_two_qubit(g.kind)) {
      ++counts.two_qubit;
    } else {
      ++counts.single_qubit;
    }
  }
  return counts;
}

std::string to_text(const Circuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.n_qubits()) + "\n";
  std::size_t next_barrier = 0;
  const auto& barriers = circuit.barriers();
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    while (next_barrier < barriers.size() && barriers[next_barrier] == i) {
      out += "BARRIER\n";
      ++next_barrier;
    }
    if (i == gates.size()) break;
    const Gate& g = gates[i];
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.q0);
    if (g.arity() == 2) {
      out += ' ';
      out += std::to_string(g.q1);
    }
    if (is_rotation(g.kind)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.17g", g.angle);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit circuit;
  std::vector<Gate> gates;
  std::vector<std::size_t> barriers;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (!have_header) {
      std::size_t n = 0;
      if (upper(head) != "QUBITS" || !(fields >> n) || n == 0) fail("expected 'QUBITS n' header");
      circuit = Circuit(n);
      have_header = true;
      continue;
    }
    if (upper(head) == "BARRIER") {
      barriers.push_back(gates.size());
      continue;
    }
    Gate g;
    try {
      g.kind = gate_kind_from_name(head);
    } catch (const Error& e) {
      fail(e.detail());
    }
    long long q = -1;
    if (!(fields >> q) || q < 0) fail("missing qubit index");
    g.q0 = static_cast<Qubit>(q);
    if (is_two_qubit(g.kind)) {
      if (!(fields >> q) || q < 0) fail("missing second qubit index");
      g.q1 = static_cast<Qubit>(q);
    }
    if (is_rotation(g.kind)) {
      std::string token;
      if (!(fields >> token)) fail("missing rotation angle");
      try {
        std::size_t used = 0;
        g.angle = std::stod(token, &used);
        if (used != token.size()) fail("bad angle '" + token + "'");
      } catch (const std::logic_error&) {
        fail("bad angle '" + token + "'");
      }
    }
    std::string extra;
    if (fields >> extra) fail("unexpected token '" + extra + "'");
    gates.push_back(g);
  }
  if (!have_header) throw Error(ErrorCode::kParse, "missing 'QUBITS n' header");
  try {
    return Circuit(circuit.n_qubits(), std::move(gates), std::move(barriers));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.detail());
  }
}

}  // namespace qembench
