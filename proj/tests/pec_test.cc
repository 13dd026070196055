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

#include "qembench/pec.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.h"
#include "qembench/engine.h"
#include "qembench/errors.h"
#include "qembench/ptm.h"

namespace qembench {
namespace {

// Whether two-qubit Pauli strings i and j (index 4a+b) commute.
bool commute(int i, int j) {
  int anti = 0;
  for (int k = 0; k < 2; ++k) {
    const int a = k == 0 ? i / 4 : i % 4;
    const int b = k == 0 ? j / 4 : j % 4;
    anti += (a != 0 && b != 0 && a != b);
  }
  return anti % 2 == 0;
}

// Pauli-mixture coefficients of the inverse of D_p x D_p, found by inverting
// the channel's PTM numerically and expanding the (diagonal) result.
std::vector<double> brute_force_inverse(double p) {
  const oracle::Ptm noise = oracle::ptm_of_kraus(oracle::local_depolarizing_kraus(p));
  const oracle::Ptm inv = noise.inverse();
  std::vector<double> q(16, 0.0);
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) q[a] += (commute(a, b) ? 1.0 : -1.0) * inv(b, b) / 16.0;
  }
  return q;
}

// Oracle PTM of a representation: gate, then D_p x D_p, then the term's
// Pauli corrections, summed with the quasi-probabilities.
oracle::Ptm oracle_reconstruction(const OperationRepresentation& rep, const Gate& local_gate) {
  oracle::Ptm sum = oracle::Ptm::Zero();
  const oracle::Ptm noise = oracle::ptm_of_kraus(oracle::local_depolarizing_kraus(rep.local_p));
  const oracle::Ptm gate = oracle::ptm_of_kraus({oracle::fragment_unitary({local_gate})});
  for (const auto& term : rep.terms) {
    std::vector<Gate> corrections;
    static const GateKind kinds[] = {GateKind::kI, GateKind::kX, GateKind::kY, GateKind::kZ};
    corrections.push_back(Gate::one(kinds[static_cast<int>(term.first)], local_gate.q0));
    corrections.push_back(Gate::one(kinds[static_cast<int>(term.second)], local_gate.q1));
    const oracle::Ptm pauli = oracle::ptm_of_kraus({oracle::fragment_unitary(corrections)});
    sum += term.coefficient * pauli * noise * gate;
  }
  return sum;
}

TEST(InverseDepolarizing, ClosedForm) {
  const double p = 0.01;
  const auto inv = inverse_depolarizing(p);
  EXPECT_NEAR(inv.identity, (1 - p / 3) / (1 - 4 * p / 3), 1e-15);
  EXPECT_NEAR(inv.pauli, -(p / 3) / (1 - 4 * p / 3), 1e-15);
  try {
    inverse_depolarizing(0.75);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonInvertibleChannel);
  }
}

TEST(Representation, MatchesBruteForceInversion) {
  for (double p : {0.001, 0.01, 0.05, 0.1, 0.3}) {
    const auto q = brute_force_inverse(p);
    const auto rep = represent_2q_gate(Gate::two(GateKind::kCNOT, 0, 1), p);
    ASSERT_EQ(rep.terms.size(), 16u);
    double norm = 0.0;
    for (const auto& t : rep.terms) {
      const int idx = 4 * static_cast<int>(t.first) + static_cast<int>(t.second);
      EXPECT_NEAR(t.coefficient, q[idx], 1e-12) << p << " " << idx;
    }
    for (double v : q) norm += std::abs(v);
    EXPECT_NEAR(rep.one_norm, norm, 1e-12);
  }
}

TEST(Representation, OneNormAtOnePercent) {
  const double p = 0.01;
  const double closed = std::pow((1 + 2 * p / 3) / (1 - 4 * p / 3), 2);
  const auto q = brute_force_inverse(p);
  double brute = 0.0;
  for (double v : q) brute += std::abs(v);
  EXPECT_NEAR(closed, brute, 1e-12);
  EXPECT_NEAR(represent_2q_gate(Gate::two(GateKind::kCZ, 0, 1), p).one_norm, 1.04095, 1e-4);
}

TEST(Representation, ReconstructsIdealPtm) {
  for (double p : {0.001, 0.01, 0.05, 0.1}) {
    for (const Gate g : {Gate::two(GateKind::kCNOT, 0, 1), Gate::two(GateKind::kCNOT, 1, 0),
                         Gate::two(GateKind::kCZ, 0, 1)}) {
      const auto rep = represent_2q_gate(g, p);
      const oracle::Ptm ideal = oracle::ptm_of_kraus({oracle::fragment_unitary({g})});
      EXPECT_LT((oracle_reconstruction(rep, g) - ideal).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((reconstruct_ptm(rep) - ideal).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Representation, LibraryPtmAgreesWithOracle) {
  for (const Gate g : {Gate::two(GateKind::kCNOT, 0, 1), Gate::two(GateKind::kCZ, 1, 0)}) {
    const oracle::Ptm want = oracle::ptm_of_kraus({oracle::fragment_unitary({g})});
    EXPECT_LT((ptm_of_unitary(two_qubit_unitary(g)) - want).cwiseAbs().maxCoeff(), 1e-12);
  }
  const oracle::Ptm noise = oracle::ptm_of_kraus(oracle::local_depolarizing_kraus(0.07));
  EXPECT_LT((ptm_local_depolarizing(0.07) - noise).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Representation, NoiselessIsSingleTerm) {
  const auto rep = represent_2q_gate(Gate::two(GateKind::kCNOT, 0, 1), 0.0);
  ASSERT_EQ(rep.terms.size(), 1u);
  EXPECT_EQ(rep.one_norm, 1.0);
  EXPECT_THROW(represent_2q_gate(Gate::one(GateKind::kH, 0), 0.01), Error);
}

Circuit five_cnots() {
  Circuit c(2);
  for (int i = 0; i < 5; ++i) c.append(Gate::two(GateKind::kCNOT, 0, 1));
  return c;
}

TEST(BuildRepresentations, UsesModelParameters) {
  Circuit c(3);
  c.append(Gate::one(GateKind::kH, 0));
  c.append(Gate::two(GateKind::kCNOT, 0, 1));
  c.append(Gate::two(GateKind::kCNOT, 2, 1));
  NoiseModel m(3);
  m.set_edge(0, 1, 0.01);
  m.set_edge(1, 2, 0.03);
  const auto reps = build_representations(c, m);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps.count(0), 0u);
  EXPECT_DOUBLE_EQ(reps.at(1).local_p, 0.01);
  EXPECT_DOUBLE_EQ(reps.at(2).local_p, 0.03);
  PecConfig avg;
  avg.uniform_average = true;
  const auto a = build_representations(c, m, avg);
  EXPECT_DOUBLE_EQ(a.at(1).local_p, 0.02);
  PecConfig over;
  over.override_p = 0.005;
  EXPECT_DOUBLE_EQ(build_representations(c, m, over).at(2).local_p, 0.005);
}

TEST(SamplePec, TermFrequenciesAndGamma) {
  const double p = 0.01;
  const NoiseModel m = build_depolarizing_model(p, 2);
  const Circuit c = five_cnots();
  const auto reps = build_representations(c, m);
  Rng rng(91);
  const std::size_t k = 20000;
  const auto s = sample_pec_circuits(c, reps, k, rng);
  const double gamma1 = std::pow((1 + 2 * p / 3) / (1 - 4 * p / 3), 2);
  EXPECT_NEAR(s.gamma_total, std::pow(gamma1, 5), 1e-12);
  ASSERT_EQ(s.samples.size(), k);
  // A sample equals the bare circuit exactly when all five gates draw II.
  const double p_ii = std::pow((1 - p / 3) / (1 + 2 * p / 3), 2);
  std::size_t bare = 0, negative = 0;
  for (const auto& smp : s.samples) {
    bare += smp.circuit == c;
    negative += smp.sign < 0;
  }
  const double expect_bare = std::pow(p_ii, 5);
  EXPECT_NEAR(bare / double(k), expect_bare, 5 * std::sqrt(expect_bare * (1 - expect_bare) / k));
  EXPECT_GT(negative, 0u);
}

TEST(PecEstimate, ScalesMean) {
  const std::vector<double> v{0.9, -0.1, 0.8, 0.7};
  const auto out = pec_estimate(v, 1.5, 100);
  EXPECT_NEAR(out.value, 1.5 * 2.3 / 4, 1e-15);
  EXPECT_EQ(out.total_shots, 400u);
  EXPECT_EQ(out.samples, 4u);
}

TEST(ExecutePec, UnbiasedOnCnotChain) {
  const NoiseModel m = build_depolarizing_model(0.01, 2);
  BenchmarkInstance inst;
  inst.circuit = five_cnots();
  inst.circuit.append(Gate::measure(0));
  inst.circuit.append(Gate::measure(1));
  inst.target_bitstring = "00";
  const Executor exec = [&](const Circuit& c, std::uint64_t shots, Rng& r) {
    return estimate_expectation(run_shots(c, m, shots, r), "00");
  };
  PecConfig cfg;
  cfg.samples = 100;
  cfg.shots = 10000;
  double sum = 0.0, sum2 = 0.0;
  const int reps = 40;
  for (int i = 0; i < reps; ++i) {
    Rng rng(200 + i);
    const auto out = execute_pec(inst, exec, m, cfg, rng);
    EXPECT_EQ(out.total_shots, 10000u);
    sum += out.value;
    sum2 += out.value * out.value;
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sum2 / reps - mean * mean) / (reps - 1));
  EXPECT_LT(std::abs(mean - 1.0), 4 * se + 1e-3);
}

TEST(PecConfig, Validation) {
  PecConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.samples = 10;
  cfg.shots = 5;
  EXPECT_THROW(cfg.validate(), Error);
}

}  // namespace
}  // namespace qembench
