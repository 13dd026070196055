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

#include "qembench/tableau.h"

#include <bit>
#include <string>

#include "qembench/errors.h"

namespace qembench {

Tableau::Tableau(std::size_t n_qubits)
    : n_(n_qubits), xs_(2 * n_qubits, 0), zs_(2 * n_qubits, 0), signs_(2 * n_qubits, 0) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kSizeLimit,
                "tableau supports 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                    std::to_string(n_qubits));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    xs_[i] = std::uint64_t{1} << i;
    zs_[n_ + i] = std::uint64_t{1} << i;
  }
}

void Tableau::check_qubit(Qubit a) const {
  if (a >= n_) throw Error(ErrorCode::kInvalidArgument, "qubit index out of range");
}

void Tableau::set_row(std::size_t i, const Row& r) {
  xs_[i] = r.x;
  zs_[i] = r.z;
  signs_[i] = r.sign ? 1 : 0;
}

// Per-row bit updates; `xa`/`za` are the row's bits on the target qubit.
void Tableau::h(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & m, za = zs_[i] & m;
    signs_[i] ^= (xa && za);
    if (xa != za) {
      xs_[i] ^= m;
      zs_[i] ^= m;
    }
  }
}

void Tableau::s(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & m, za = zs_[i] & m;
    signs_[i] ^= (xa && za);
    if (xa) zs_[i] ^= m;
  }
}

void Tableau::s_dag(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & m, za = zs_[i] & m;
    signs_[i] ^= (xa && !za);
    if (xa) zs_[i] ^= m;
  }
}

void Tableau::sqrt_x(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & m, za = zs_[i] & m;
    signs_[i] ^= (za && !xa);
    if (za) xs_[i] ^= m;
  }
}

void Tableau::sqrt_x_dag(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & m, za = zs_[i] & m;
    signs_[i] ^= (za && xa);
    if (za) xs_[i] ^= m;
  }
}

void Tableau::x(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) signs_[i] ^= (zs_[i] & m) != 0;
}

void Tableau::y(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) signs_[i] ^= ((xs_[i] ^ zs_[i]) & m) != 0;
}

void Tableau::z(Qubit a) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = 0; i < 2 * n_; ++i) signs_[i] ^= (xs_[i] & m) != 0;
}

void Tableau::cnot(Qubit c, Qubit t) {
  check_qubit(c);
  check_qubit(t);
  const std::uint64_t mc = std::uint64_t{1} << c, mt = std::uint64_t{1} << t;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xc = xs_[i] & mc, zc = zs_[i] & mc, xt = xs_[i] & mt, zt = zs_[i] & mt;
    signs_[i] ^= (xc && zt && (xt == zc));
    if (xc) xs_[i] ^= mt;
    if (zt) zs_[i] ^= mc;
  }
}

void Tableau::cz(Qubit a, Qubit b) {
  check_qubit(a);
  check_qubit(b);
  const std::uint64_t ma = std::uint64_t{1} << a, mb = std::uint64_t{1} << b;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const bool xa = xs_[i] & ma, za = zs_[i] & ma, xb = xs_[i] & mb, zb = zs_[i] & mb;
    signs_[i] ^= (xa && xb && (za != zb));
    if (xb) zs_[i] ^= ma;
    if (xa) zs_[i] ^= mb;
  }
}

void Tableau::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::kI: check_qubit(g.q0); break;
    case GateKind::kH: h(g.q0); break;
    case GateKind::kS: s(g.q0); break;
    case GateKind::kSdg: s_dag(g.q0); break;
    case GateKind::kX: x(g.q0); break;
    case GateKind::kY: y(g.q0); break;
    case GateKind::kZ: z(g.q0); break;
    case GateKind::kSqrtX: sqrt_x(g.q0); break;
    case GateKind::kSqrtXdg: sqrt_x_dag(g.q0); break;
    case GateKind::kCNOT: cnot(g.q0, g.q1); break;
    case GateKind::kCZ: cz(g.q0, g.q1); break;
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      throw Error(ErrorCode::kBackendCapability, "tableau cannot apply a rotation gate");
    case GateKind::kMeasure:
      throw Error(ErrorCode::kInvalidArgument, "use Tableau::measure for measurements");
  }
}

// Multiplies `target` by `source` (target <- source * target is equivalent for
// commuting rows; callers only combine commuting rows or build scratch rows).
void Tableau::multiply_into(Row& target, const Row& source) {
  // Phase exponent of the product in units of i, accumulated mod 4.
  int phase = 2 * (target.sign ? 1 : 0) + 2 * (source.sign ? 1 : 0);
  std::uint64_t bits = source.x | source.z;
  while (bits) {
    const int j = std::countr_zero(bits);
    bits &= bits - 1;
    const int x1 = (source.x >> j) & 1, z1 = (source.z >> j) & 1;
    const int x2 = (target.x >> j) & 1, z2 = (target.z >> j) & 1;
    if (x1 && z1) {
      phase += z2 - x2;
    } else if (x1) {
      phase += z2 * (2 * x2 - 1);
    } else {
      phase += x2 * (1 - 2 * z2);
    }
  }
  phase = ((phase % 4) + 4) % 4;
  target.sign = phase == 2;
  target.x ^= source.x;
  target.z ^= source.z;
}

bool Tableau::is_deterministic(Qubit a) const {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (xs_[i] & m) return false;
  }
  return true;
}

bool Tableau::peek_deterministic(Qubit a) const {
  if (!is_deterministic(a)) {
    throw Error(ErrorCode::kNonDeterministicOutcome,
                "measurement of qubit " + std::to_string(a) + " is random");
  }
  const std::uint64_t m = std::uint64_t{1} << a;
  Row scratch;
  for (std::size_t i = 0; i < n_; ++i) {
    if (xs_[i] & m) multiply_into(scratch, row(i + n_));
  }
  return scratch.sign;
}

bool Tableau::measure(Qubit a, Rng& rng) {
  check_qubit(a);
  const std::uint64_t m = std::uint64_t{1} << a;
  std::size_t p = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (xs_[i] & m) {
      p = i;
      break;
    }
  }
  if (p == 2 * n_) return peek_deterministic(a);

  const Row pivot = row(p);
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    if (i != p && (xs_[i] & m)) {
      Row r = row(i);
      multiply_into(r, pivot);
      set_row(i, r);
    }
  }
  const bool outcome = (rng() & 1) != 0;
  set_row(p - n_, pivot);
  set_row(p, Row{0, m, outcome});
  return outcome;
}

bool Tableau::is_valid() const {
  auto anticommute = [&](std::size_t i, std::size_t j) {
    return (std::popcount((xs_[i] & zs_[j]) ^ (zs_[i] & xs_[j])) & 1) != 0;
  };
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    for (std::size_t j = i + 1; j < 2 * n_; ++j) {
      const bool expected = (j == i + n_);
      if (anticommute(i, j) != expected) return false;
    }
  }
  return true;
}

std::uint64_t Tableau::key() const {
  if (n_ > 2) throw Error(ErrorCode::kInvalidArgument, "key() is defined for n <= 2 only");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    k = (k << n_) | xs_[i];
    k = (k << n_) | zs_[i];
    k = (k << 1) | signs_[i];
  }
  return k;
}

Tableau tableau_of(const Circuit& circuit) {
  Tableau t(circuit.n_qubits());
  for (const auto& g : circuit.gates()) t.apply(g);
  return t;
}

}  // namespace qembench
