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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracle.h"
#include "qembench/benchmarks.h"
#include "qembench/errors.h"

namespace qembench {
namespace {

const std::string kDataDir = QEMBENCH_DATA_DIR;

// Exact output distribution of a noisy Clifford circuit by density-matrix
// evolution with explicit Pauli mixtures, followed by classical readout flips.
std::map<Bitstring, double> exact_distribution(const Circuit& circuit, const NoiseModel& model) {
  const int n = static_cast<int>(circuit.n_qubits());
  const std::int64_t dim = std::int64_t{1} << n;
  oracle::MatX rho = oracle::MatX::Zero(dim, dim);
  rho(0, 0) = 1.0;
  auto pauli_on = [&](int p, Qubit q) {
    Circuit c(n);
    static const GateKind kinds[] = {GateKind::kI, GateKind::kX, GateKind::kY, GateKind::kZ};
    c.append(Gate::one(kinds[p], q));
    return oracle::unitary_of(c);
  };
  auto apply_channel = [&](const PauliChannel& ch, Qubit q) {
    const double w[] = {ch.p_i, ch.p_x, ch.p_y, ch.p_z};
    oracle::MatX out = oracle::MatX::Zero(dim, dim);
    for (int p = 0; p < 4; ++p) {
      const oracle::MatX P = pauli_on(p, q);
      out += w[p] * P * rho * P.adjoint();
    }
    rho = out;
  };
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::kMeasure) continue;
    Circuit one(n);
    one.append(g);
    const oracle::MatX u = oracle::unitary_of(one);
    rho = u * rho * u.adjoint();
    if (is_two_qubit(g.kind)) {
      const TwoQubitNoise* noise = model.after_2q(g.q0, g.q1);
      if (noise) {
        apply_channel(noise->first, std::min(g.q0, g.q1));
        apply_channel(noise->second, std::max(g.q0, g.q1));
      }
    } else if (const PauliChannel* ch = model.after_1q(g.q0)) {
      apply_channel(*ch, g.q0);
    }
  }
  std::map<Bitstring, double> dist;
  for (std::int64_t i = 0; i < dim; ++i) {
    const double p = rho(i, i).real();
    for (std::int64_t j = 0; j < dim; ++j) {
      double w = p;
      for (int q = 0; q < n; ++q) {
        const double f = model.readout_flip(static_cast<Qubit>(q));
        w *= (((i ^ j) >> q) & 1) ? f : 1 - f;
      }
      Bitstring b(n, '0');
      for (int q = 0; q < n; ++q) b[q] = ((j >> q) & 1) ? '1' : '0';
      dist[b] += w;
    }
  }
  return dist;
}

Circuit cnot_chain(int cnots) {
  Circuit c(2);
  for (int i = 0; i < cnots; ++i) c.append(Gate::two(GateKind::kCNOT, 0, 1));
  c.append(Gate::measure(0));
  c.append(Gate::measure(1));
  return c;
}

TEST(Engine, NoiselessRbIsDeterministic) {
  Rng gen(61);
  const NoiseModel quiet = build_depolarizing_model(0.0, 5);
  for (int i = 0; i < 5; ++i) {
    const auto inst = generate_rb_circuit(5, 3, gen);
    Rng rng(i);
    const ShotResult r = run_shots(inst.circuit, quiet, 500, rng);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.counts.begin()->first, "00000");
    EXPECT_EQ(r.shots, 500u);
  }
}

TEST(Engine, RandomOutcomesAreBalanced) {
  Circuit c(1);
  c.append(Gate::one(GateKind::kH, 0));
  c.append(Gate::measure(0));
  Rng rng(62);
  const ShotResult r = run_shots(c, build_depolarizing_model(0.0, 1), 20000, rng);
  const double f = r.counts.at("1") / 20000.0;
  EXPECT_NEAR(f, 0.5, 5 * std::sqrt(0.25 / 20000));
}

TEST(Engine, CnotSurvivalMatchesExactPauliSum) {
  const NoiseModel model = build_depolarizing_model(0.01, 2);
  for (int cnots : {1, 5, 20}) {
    const Circuit c = cnot_chain(cnots);
    const double exact = exact_distribution(c, model).at("00");
    for (Backend b : {Backend::kTableau, Backend::kStatevector}) {
      Rng rng(63 + cnots);
      const auto est = estimate_expectation(run_backend(b, c, model, 40000, rng), "00");
      EXPECT_NEAR(est.value, exact, 5 * std::sqrt(exact * (1 - exact) / 40000) + 1e-12)
          << cnots << " " << backend_name(b);
    }
  }
}

TEST(Engine, CalibrationModelMatchesDensityMatrix) {
  const auto cal = load_calibration(kDataDir + "/lima.cal");
  const NoiseModel model = build_calibration_model(cal, {"0", "1", "2"});
  MirrorOptions opts;
  opts.connectivity = model.edges();
  Rng gen(64);
  for (int i = 0; i < 3; ++i) {
    const auto inst = generate_mirror_circuit(3, 2, gen, opts);
    const auto dist = exact_distribution(inst.circuit, model);
    Rng rng(100 + i);
    const ShotResult r = run_shots(inst.circuit, model, 30000, rng);
    for (const auto& [bits, p] : dist) {
      const auto it = r.counts.find(bits);
      const double f = it == r.counts.end() ? 0.0 : it->second / 30000.0;
      EXPECT_NEAR(f, p, 5 * std::sqrt(p * (1 - p) / 30000) + 2e-4) << bits;
    }
  }
}

TEST(Engine, ThreadCountDoesNotChangeCounts) {
  Rng gen(65);
  const auto inst = generate_mirror_circuit(6, 3, gen);
  const NoiseModel model = build_depolarizing_model(0.02, 6);
  EngineOptions one, four;
  four.threads = 4;
  Rng a(9), b(9);
  EXPECT_EQ(run_shots(inst.circuit, model, 3000, a, one).counts,
            run_shots(inst.circuit, model, 3000, b, four).counts);
  Rng c(9), d(9);
  EXPECT_EQ(run_statevector(inst.circuit, model, 3000, c, one).counts,
            run_statevector(inst.circuit, model, 3000, d, four).counts);
}

TEST(Engine, SeedReproducible) {
  Rng gen(66);
  const auto inst = generate_rb_circuit(3, 3, gen);
  const NoiseModel model = build_depolarizing_model(0.05, 3);
  Rng a(10), b(10), c(11);
  const auto ra = run_shots(inst.circuit, model, 2000, a);
  EXPECT_EQ(ra.counts, run_shots(inst.circuit, model, 2000, b).counts);
  EXPECT_NE(ra.counts, run_shots(inst.circuit, model, 2000, c).counts);
}

TEST(Engine, SmallRotationsClippedOnTableau) {
  Circuit c(1);
  c.append(Gate::rotation(GateKind::kRX, 0, 1e-4));
  c.append(Gate::measure(0));
  Rng rng(67);
  const auto r = run_shots(c, build_depolarizing_model(0.0, 1), 100, rng);
  EXPECT_EQ(r.counts.at("0"), 100u);
  Circuit big(1);
  big.append(Gate::rotation(GateKind::kRX, 0, 0.5));
  try {
    run_shots(big, build_depolarizing_model(0.0, 1), 10, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendCapability);
  }
  // Exact rotation on the dense backend.
  big.append(Gate::measure(0));
  const auto sv = run_statevector(big, build_depolarizing_model(0.0, 1), 40000, rng);
  const double p1 = std::pow(std::sin(0.25), 2);
  EXPECT_NEAR(sv.counts.at("1") / 40000.0, p1, 5 * std::sqrt(p1 * (1 - p1) / 40000));
}

TEST(Engine, StatevectorSizeLimit) {
  Circuit c(kStatevectorMaxQubits + 1);
  Rng rng(68);
  try {
    run_statevector(c, build_depolarizing_model(0.0, c.n_qubits()), 10, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
}

TEST(Engine, ReadoutFlipRate) {
  NoiseModel m(2);
  m.set_readout_flip(1, 0.2);
  Circuit c(2);
  c.append(Gate::measure(0));
  c.append(Gate::measure(1));
  Rng rng(69);
  const auto r = run_shots(c, m, 50000, rng);
  EXPECT_NEAR(r.counts.at("01") / 50000.0, 0.2, 5 * std::sqrt(0.16 / 50000));
  EXPECT_EQ(r.counts.count("10"), 0u);
}

TEST(Engine, MeasurementOrderDefinesBitstring) {
  Circuit c(3);
  c.append(Gate::one(GateKind::kX, 2));
  c.append(Gate::measure(2));
  c.append(Gate::measure(0));
  Rng rng(70);
  const auto r = run_shots(c, build_depolarizing_model(0.0, 3), 10, rng);
  EXPECT_EQ(r.counts.begin()->first, "10");
  EXPECT_EQ(ideal_bitstring(c), "10");
}

TEST(Engine, Expectation) {
  ShotResult r;
  r.counts = {{"00", 75}, {"11", 25}};
  r.shots = 100;
  const auto e = estimate_expectation(r, "00");
  EXPECT_DOUBLE_EQ(e.value, 0.75);
  EXPECT_NEAR(e.std_error, std::sqrt(0.75 * 0.25 / 100), 1e-15);
  EXPECT_THROW(estimate_expectation(r, "0"), Error);
  ShotResult empty;
  EXPECT_THROW(estimate_expectation(empty, "00"), Error);
}

TEST(Engine, TotalVariationDistance) {
  ShotResult a, b;
  a.counts = {{"0", 60}, {"1", 40}};
  a.shots = 100;
  b.counts = {{"0", 100}};
  b.shots = 100;
  EXPECT_NEAR(total_variation_distance(a, b), 0.4, 1e-15);
  EXPECT_EQ(total_variation_distance(a, a), 0.0);
}

TEST(Engine, ShotResultJson) {
  ShotResult r;
  r.counts = {{"01", 3}};
  r.shots = 3;
  r.backend = "tableau";
  const std::string j = r.to_json();
  EXPECT_NE(j.find("\"01\""), std::string::npos);
  EXPECT_NE(j.find("tableau"), std::string::npos);
}

TEST(Backend, Names) {
  EXPECT_EQ(backend_from_name("statevector"), Backend::kStatevector);
  EXPECT_EQ(backend_name(Backend::kTableau), "tableau");
  EXPECT_THROW(backend_from_name("gpu"), Error);
}

}  // namespace
}  // namespace qembench
