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

#include "qembench/engine.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <set>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qembench/errors.h"
#include "qembench/tableau.h"
#include <nlohmann/json.hpp>

namespace qembench {

std::string backend_name(Backend backend) {
  return backend == Backend::kTableau ? "tableau" : "statevector";
}

Backend backend_from_name(const std::string& name) {
  if (name == "tableau") return Backend::kTableau;
  if (name == "statevector") return Backend::kStatevector;
  throw Error(ErrorCode::kConfig, "unknown backend '" + name + "'");
}

std::string ShotResult::to_json() const {
  nlohmann::ordered_json j;
  j["backend"] = backend;
  j["shots"] = shots;
  j["seed"] = seed;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [bits, n] : counts) c[bits] = n;
  j["counts"] = std::move(c);
  return j.dump(2);
}

namespace {

// One circuit operation with its attached noise.
struct Op {
  Gate gate;
  bool identity = false;  // clipped rotation or identity marker
  const PauliChannel* noise_1q = nullptr;
  const TwoQubitNoise* noise_2q = nullptr;
};

struct Compiled {
  std::size_t n_qubits = 0;
  std::vector<Op> ops;
  std::vector<Qubit> measured;
  std::vector<double> readout;
};

Compiled compile(const Circuit& circuit, const NoiseModel& model, bool allow_rotations,
                 double angle_clip) {
  Compiled c;
  c.n_qubits = circuit.n_qubits();
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::kMeasure) {
      c.measured.push_back(g.q0);
      continue;
    }
    Op op;
    op.gate = g;
    if (is_rotation(g.kind)) {
      if (!allow_rotations && std::abs(g.angle) > angle_clip) {
        throw Error(ErrorCode::kBackendCapability,
                    std::string(gate_name(g.kind)) + " angle " + std::to_string(g.angle) +
                        " exceeds the tableau clip of " + std::to_string(angle_clip) +
                        "; use the statevector backend");
      }
      op.identity = !allow_rotations;
    }
    if (g.kind == GateKind::kI) op.identity = true;
    if (is_two_qubit(g.kind)) {
      const TwoQubitNoise* n = model.after_2q(g.q0, g.q1);
      if (n->local_p > 0.0) op.noise_2q = n;
    } else {
      op.noise_1q = model.after_1q(g.q0);
    }
    c.ops.push_back(op);
  }
  if (c.measured.empty()) {
    for (Qubit q = 0; q < circuit.n_qubits(); ++q) c.measured.push_back(q);
  }
  for (Qubit q : c.measured) c.readout.push_back(model.readout_flip(q));
  return c;
}

// Counts keyed by the measured bits packed little-endian.
class Tally {
 public:
  explicit Tally(std::size_t bits) : dense_(bits <= 16 ? (std::size_t{1} << bits) : 0, 0) {}
  void add(std::uint64_t key) {
    if (!dense_.empty()) {
      ++dense_[key];
    } else {
      ++sparse_[key];
    }
  }
  void merge(const Tally& other) {
    for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] += other.dense_[i];
    for (const auto& [k, v] : other.sparse_) sparse_[k] += v;
  }
  std::map<Bitstring, std::uint64_t> to_counts(std::size_t bits) const {
    std::map<Bitstring, std::uint64_t> out;
    auto put = [&](std::uint64_t key, std::uint64_t n) {
      if (n == 0) return;
      Bitstring s(bits, '0');
      for (std::size_t i = 0; i < bits; ++i) s[i] = ((key >> i) & 1) ? '1' : '0';
      out[s] += n;
    };
    for (std::size_t k = 0; k < dense_.size(); ++k) put(k, dense_[k]);
    for (const auto& [k, v] : sparse_) put(k, v);
    return out;
  }

 private:
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

template <typename ShotFn>
Tally run_parallel(std::uint64_t shots, std::size_t bits, std::size_t threads, ShotFn&& shot_fn) {
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, std::max<std::uint64_t>(shots, 1)));
  std::vector<Tally> partial(threads, Tally(bits));
  auto work = [&](std::size_t t) {
    const std::uint64_t begin = shots * t / threads, end = shots * (t + 1) / threads;
    for (std::uint64_t s = begin; s < end; ++s) partial[t].add(shot_fn(s));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally total(bits);
  for (const auto& p : partial) total.merge(p);
  return total;
}

std::uint64_t apply_readout(std::uint64_t bits, const std::vector<double>& readout, Rng& r) {
  for (std::size_t i = 0; i < readout.size(); ++i) {
    if (readout[i] > 0.0 && r.uniform() < readout[i]) bits ^= std::uint64_t{1} << i;
  }
  return bits;
}

}  // namespace

ShotResult run_shots(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots, Rng& rng,
                     const EngineOptions& options) {
  const Compiled c = compile(circuit, model, false, options.angle_clip);
  const Rng base = rng.split(rng());

  // Noiseless reference sample; every shot is that sample times a Pauli
  // frame. The frame starts with random Z components (harmless on |0..0>),
  // which makes random measurement outcomes come out with the right
  // distribution.
  Tableau ref(c.n_qubits);
  for (const auto& op : c.ops) {
    if (!op.identity) ref.apply(op.gate);
  }
  Rng ref_rng = base.split(~std::uint64_t{0});
  std::vector<std::uint8_t> ref_bits;
  for (Qubit q : c.measured) ref_bits.push_back(ref.measure(q, ref_rng) ? 1 : 0);
  const std::uint64_t mask =
      c.n_qubits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << c.n_qubits) - 1);

  auto shot = [&](std::uint64_t s) -> std::uint64_t {
    Rng r = base.split(s);
    std::uint64_t fx = 0, fz = r() & mask;
    auto flip = [&](Qubit q, Pauli p) {
      const std::uint64_t m = std::uint64_t{1} << q;
      if (p == Pauli::kX || p == Pauli::kY) fx ^= m;
      if (p == Pauli::kZ || p == Pauli::kY) fz ^= m;
    };
    for (const auto& op : c.ops) {
      const Gate& g = op.gate;
      const std::uint64_t ma = std::uint64_t{1} << g.q0;
      if (!op.identity) {
        switch (g.kind) {
          case GateKind::kH:
            if (((fx & ma) != 0) != ((fz & ma) != 0)) {
              fx ^= ma;
              fz ^= ma;
            }
            break;
          case GateKind::kS:
          case GateKind::kSdg:
            if (fx & ma) fz ^= ma;
            break;
          case GateKind::kSqrtX:
          case GateKind::kSqrtXdg:
            if (fz & ma) fx ^= ma;
            break;
          case GateKind::kCNOT: {
            const std::uint64_t mb = std::uint64_t{1} << g.q1;
            if (fx & ma) fx ^= mb;
            if (fz & mb) fz ^= ma;
            break;
          }
          case GateKind::kCZ: {
            const std::uint64_t mb = std::uint64_t{1} << g.q1;
            const bool xa = fx & ma, xb = fx & mb;
            if (xb) fz ^= ma;
            if (xa) fz ^= mb;
            break;
          }
          default:
            break;  // Paulis commute with the frame up to sign
        }
      }
      if (op.noise_1q) {
        flip(g.q0, op.noise_1q->sample(r.uniform()));
      } else if (op.noise_2q) {
        const Qubit lo = std::min(g.q0, g.q1), hi = std::max(g.q0, g.q1);
        flip(lo, op.noise_2q->first.sample(r.uniform()));
        flip(hi, op.noise_2q->second.sample(r.uniform()));
      }
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < c.measured.size(); ++i) {
      const std::uint64_t b = ref_bits[i] ^ ((fx >> c.measured[i]) & 1);
      bits |= b << i;
    }
    return apply_readout(bits, c.readout, r);
  };

  const Tally tally = run_parallel(shots, c.measured.size(), options.threads, shot);
  ShotResult result;
  result.counts = tally.to_counts(c.measured.size());
  result.shots = shots;
  result.backend = backend_name(Backend::kTableau);
  result.seed = base.key();
  return result;
}

namespace {

using Amp = std::complex<double>;

class StateVector {
 public:
  explicit StateVector(std::size_t n) : n_(n), amps_(std::size_t{1} << n, Amp{0, 0}) {
    amps_[0] = 1.0;
  }

  void apply_1q(Qubit q, const std::array<Amp, 4>& m) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & stride) continue;
      const Amp a0 = amps_[i], a1 = amps_[i | stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i | stride] = m[2] * a0 + m[3] * a1;
    }
  }

  void cnot(Qubit c, Qubit t) {
    const std::size_t mc = std::size_t{1} << c, mt = std::size_t{1} << t;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
    }
  }

  void cz(Qubit a, Qubit b) {
    const std::size_t ma = std::size_t{1} << a, mb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
    }
  }

  void pauli(Qubit q, Pauli p) {
    static const Amp i1{0, 1};
    switch (p) {
      case Pauli::kI: break;
      case Pauli::kX: apply_1q(q, {0, 1, 1, 0}); break;
      case Pauli::kY: apply_1q(q, {0, -i1, i1, 0}); break;
      case Pauli::kZ: apply_1q(q, {1, 0, 0, -1}); break;
    }
  }

  void apply(const Gate& g) {
    static const Amp i1{0, 1};
    const double h = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
      case GateKind::kI: break;
      case GateKind::kH: apply_1q(g.q0, {h, h, h, -h}); break;
      case GateKind::kS: apply_1q(g.q0, {1, 0, 0, i1}); break;
      case GateKind::kSdg: apply_1q(g.q0, {1, 0, 0, -i1}); break;
      case GateKind::kX: pauli(g.q0, Pauli::kX); break;
      case GateKind::kY: pauli(g.q0, Pauli::kY); break;
      case GateKind::kZ: pauli(g.q0, Pauli::kZ); break;
      case GateKind::kSqrtX: {
        const Amp p{0.5, 0.5}, m{0.5, -0.5};
        apply_1q(g.q0, {p, m, m, p});
        break;
      }
      case GateKind::kSqrtXdg: {
        const Amp p{0.5, 0.5}, m{0.5, -0.5};
        apply_1q(g.q0, {m, p, p, m});
        break;
      }
      case GateKind::kRX: {
        const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
        apply_1q(g.q0, {c, -i1 * s, -i1 * s, c});
        break;
      }
      case GateKind::kRY: {
        const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
        apply_1q(g.q0, {c, -s, s, c});
        break;
      }
      case GateKind::kRZ: {
        const Amp e = std::polar(1.0, g.angle / 2);
        apply_1q(g.q0, {std::conj(e), 0, 0, e});
        break;
      }
      case GateKind::kCNOT: cnot(g.q0, g.q1); break;
      case GateKind::kCZ: cz(g.q0, g.q1); break;
      case GateKind::kMeasure: break;
    }
  }

  /// Samples a full basis index from |amp|^2.
  std::size_t sample(double u) const {
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      const double p = std::norm(amps_[i]);
      if (p > 0.0) last_nonzero = i;
      acc += p;
      if (u < acc) return i;
    }
    return last_nonzero;
  }

 private:
  std::size_t n_;
  std::vector<Amp> amps_;
};

struct NoiseEvent {
  std::size_t op;
  Qubit qubit;
  Pauli pauli;
};

}  // namespace

ShotResult run_statevector(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                           Rng& rng, const EngineOptions& options) {
  if (circuit.n_qubits() > kStatevectorMaxQubits) {
    throw Error(ErrorCode::kSizeLimit, "statevector backend supports at most " +
                                           std::to_string(kStatevectorMaxQubits) + " qubits, got " +
                                           std::to_string(circuit.n_qubits()));
  }
  const Compiled c = compile(circuit, model, true, options.angle_clip);
  const Rng base = rng.split(rng());

  auto simulate = [&](const std::vector<NoiseEvent>& events) {
    StateVector sv(c.n_qubits);
    std::size_t next = 0;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      sv.apply(c.ops[i].gate);
      for (; next < events.size() && events[next].op == i; ++next) {
        sv.pauli(events[next].qubit, events[next].pauli);
      }
    }
    return sv;
  };
  const StateVector noiseless = simulate({});

  auto shot = [&](std::uint64_t s) -> std::uint64_t {
    Rng r = base.split(s);
    std::vector<NoiseEvent> events;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      const Op& op = c.ops[i];
      if (op.noise_1q) {
        const Pauli p = op.noise_1q->sample(r.uniform());
        if (p != Pauli::kI) events.push_back({i, op.gate.q0, p});
      } else if (op.noise_2q) {
        const Qubit lo = std::min(op.gate.q0, op.gate.q1), hi = std::max(op.gate.q0, op.gate.q1);
        const Pauli pa = op.noise_2q->first.sample(r.uniform());
        const Pauli pb = op.noise_2q->second.sample(r.uniform());
        if (pa != Pauli::kI) events.push_back({i, lo, pa});
        if (pb != Pauli::kI) events.push_back({i, hi, pb});
      }
    }
    const double u = r.uniform();
    const std::size_t index = events.empty() ? noiseless.sample(u) : simulate(events).sample(u);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < c.measured.size(); ++i) {
      bits |= static_cast<std::uint64_t>((index >> c.measured[i]) & 1) << i;
    }
    return apply_readout(bits, c.readout, r);
  };

  const Tally tally = run_parallel(shots, c.measured.size(), options.threads, shot);
  ShotResult result;
  result.counts = tally.to_counts(c.measured.size());
  result.shots = shots;
  result.backend = backend_name(Backend::kStatevector);
  result.seed = base.key();
  return result;
}

ShotResult run_backend(Backend backend, const Circuit& circuit, const NoiseModel& model,
                       std::uint64_t shots, Rng& rng, const EngineOptions& options) {
  return backend == Backend::kTableau ? run_shots(circuit, model, shots, rng, options)
                                      : run_statevector(circuit, model, shots, rng, options);
}

Bitstring ideal_bitstring(const Circuit& circuit, double angle_clip) {
  Tableau t(circuit.n_qubits());
  std::vector<Qubit> measured;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::kMeasure) {
      measured.push_back(g.q0);
    } else if (is_rotation(g.kind)) {
      if (std::abs(g.angle) > angle_clip) {
        throw Error(ErrorCode::kBackendCapability, "rotation above the clip angle in a Clifford circuit");
      }
    } else {
      t.apply(g);
    }
  }
  if (measured.empty()) {
    for (Qubit q = 0; q < circuit.n_qubits(); ++q) measured.push_back(q);
  }
  Bitstring out;
  for (Qubit q : measured) out.push_back(t.peek_deterministic(q) ? '1' : '0');
  return out;
}

ExpectationEstimate estimate_expectation(const ShotResult& result, const Bitstring& target) {
  if (result.shots == 0) throw Error(ErrorCode::kEmptyResult, "no shots to estimate from");
  if (!result.counts.empty() && result.counts.begin()->first.size() != target.size()) {
    throw Error(ErrorCode::kLengthMismatch, "target bitstring length does not match the outcomes");
  }
  const auto it = result.counts.find(target);
  const double hits = it == result.counts.end() ? 0.0 : static_cast<double>(it->second);
  const double n = static_cast<double>(result.shots);
  const double v = hits / n;
  return ExpectationEstimate{v, result.shots, std::sqrt(v * (1.0 - v) / n)};
}

double total_variation_distance(const ShotResult& a, const ShotResult& b) {
  if (a.shots == 0 || b.shots == 0) throw Error(ErrorCode::kEmptyResult, "empty shot result");
  std::set<Bitstring> keys;
  for (const auto& [k, v] : a.counts) keys.insert(k);
  for (const auto& [k, v] : b.counts) keys.insert(k);
  double tvd = 0.0;
  for (const auto& k : keys) {
    const auto ia = a.counts.find(k), ib = b.counts.find(k);
    const double pa = ia == a.counts.end() ? 0.0 : static_cast<double>(ia->second) / a.shots;
    const double pb = ib == b.counts.end() ? 0.0 : static_cast<double>(ib->second) / b.shots;
    tvd += std::abs(pa - pb);
  }
  return tvd / 2.0;
}

}  // namespace qembench
