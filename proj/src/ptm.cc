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

#include "qembench/ptm.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "qembench/errors.h"

namespace qembench {
namespace {

using C = std::complex<double>;
using M2 = Eigen::Matrix<C, 2, 2>;

M2 single(GateKind kind, double angle) {
  const C i1{0, 1};
  const double h = 1.0 / std::sqrt(2.0);
  M2 m;
  switch (kind) {
    case GateKind::kI: m << 1, 0, 0, 1; break;
    case GateKind::kH: m << h, h, h, -h; break;
    case GateKind::kS: m << 1, 0, 0, i1; break;
    case GateKind::kSdg: m << 1, 0, 0, -i1; break;
    case GateKind::kX: m << 0, 1, 1, 0; break;
    case GateKind::kY: m << 0, -i1, i1, 0; break;
    case GateKind::kZ: m << 1, 0, 0, -1; break;
    case GateKind::kSqrtX: m << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5); break;
    case GateKind::kSqrtXdg: m << C(0.5, -0.5), C(0.5, 0.5), C(0.5, 0.5), C(0.5, -0.5); break;
    case GateKind::kRX: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      m << c, -i1 * s, -i1 * s, c;
      break;
    }
    case GateKind::kRY: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      m << c, -s, s, c;
      break;
    }
    case GateKind::kRZ: {
      const C e = std::polar(1.0, angle / 2);
      m << std::conj(e), 0, 0, e;
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument, "not a one-qubit gate");
  }
  return m;
}

// Basis index b = 2 * bit(qubit 0) + bit(qubit 1), matching the kron order.
Unitary2 kron(const M2& a, const M2& b) {
  Unitary2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

const std::array<Unitary2, 16>& pauli_basis() {
  static const std::array<Unitary2, 16> basis = [] {
    const std::array<GateKind, 4> kinds = {GateKind::kI, GateKind::kX, GateKind::kY, GateKind::kZ};
    std::array<Unitary2, 16> out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out[4 * a + b] = kron(single(kinds[a], 0), single(kinds[b], 0));
    return out;
  }();
  return basis;
}

}  // namespace

Unitary2 two_qubit_unitary(const Gate& gate) {
  const M2 id = M2::Identity();
  if (gate.kind == GateKind::kCNOT || gate.kind == GateKind::kCZ) {
    Unitary2 u = Unitary2::Zero();
    for (int b = 0; b < 4; ++b) {
      const int bit0 = b >> 1, bit1 = b & 1;
      const int c = gate.q0 == 0 ? bit0 : bit1;
      if (gate.kind == GateKind::kCNOT) {
        int t0 = bit0, t1 = bit1;
        if (c) (gate.q1 == 0 ? t0 : t1) ^= 1;
        u(2 * t0 + t1, b) = 1;
      } else {
        u(b, b) = (bit0 && bit1) ? -1.0 : 1.0;
      }
    }
    return u;
  }
  const M2 m = single(gate.kind, gate.angle);
  return gate.q0 == 0 ? kron(m, id) : kron(id, m);
}

Ptm ptm_of_unitary(const Unitary2& u) {
  const auto& basis = pauli_basis();
  Ptm r;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      r(i, j) = (basis[i] * u * basis[j] * u.adjoint()).trace().real() / 4.0;
    }
  }
  return r;
}

Ptm ptm_local_depolarizing(double p) {
  const double f = 1.0 - 4.0 * p / 3.0;
  Ptm r = Ptm::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) r(4 * a + b, 4 * a + b) = (a ? f : 1.0) * (b ? f : 1.0);
  }
  return r;
}

Ptm ptm_of_fragment(const std::vector<Gate>& fragment, double noise_p) {
  Ptm r = Ptm::Identity();
  for (const auto& g : fragment) {
    r = ptm_of_unitary(two_qubit_unitary(g)) * r;
    if (is_two_qubit(g.kind) && noise_p > 0.0) r = ptm_local_depolarizing(noise_p) * r;
  }
  return r;
}

Ptm reconstruct_ptm(const OperationRepresentation& rep) {
  const Qubit low = std::min(rep.ideal.q0, rep.ideal.q1);
  auto to_local = [&](Gate g) {
    g.q0 = g.q0 == low ? 0 : 1;
    if (g.arity() == 2) g.q1 = g.q1 == low ? 0 : 1;
    return g;
  };
  Ptm sum = Ptm::Zero();
  for (const auto& term : rep.terms) {
    std::vector<Gate> fragment;
    for (const auto& g : term.fragment) fragment.push_back(to_local(g));
    sum += term.coefficient * ptm_of_fragment(fragment, rep.local_p);
  }
  return sum;
}

}  // namespace qembench
