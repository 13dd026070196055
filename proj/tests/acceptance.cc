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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracle.h"
#include "qembench/benchmarks.h"
#include "qembench/engine.h"
#include "qembench/harness.h"
#include "qembench/metrics.h"
#include "qembench/pec.h"
#include "qembench/ptm.h"
#include "qembench/transforms.h"
#include "qembench/zne.h"

using namespace qembench;
namespace fs = std::filesystem;

namespace {

const std::string kDataDir = QEMBENCH_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

bool commute(int i, int j) {
  int anti = 0;
  for (int k = 0; k < 2; ++k) {
    const int a = k == 0 ? i / 4 : i % 4;
    const int b = k == 0 ? j / 4 : j % 4;
    anti += (a != 0 && b != 0 && a != b);
  }
  return anti % 2 == 0;
}

Outcome pec_ptm_exactness() {
  double worst = 0.0;
  static const GateKind kPauli[] = {GateKind::kI, GateKind::kX, GateKind::kY, GateKind::kZ};
  for (double p : {0.001, 0.01, 0.05, 0.1}) {
    for (GateKind kind : {GateKind::kCNOT, GateKind::kCZ}) {
      const Gate g = Gate::two(kind, 0, 1);
      const auto rep = represent_2q_gate(g, p);
      const oracle::Ptm ideal = oracle::ptm_of_kraus({oracle::fragment_unitary({g})});
      const oracle::Ptm noise = oracle::ptm_of_kraus(oracle::local_depolarizing_kraus(p));
      oracle::Ptm sum = oracle::Ptm::Zero();
      for (const auto& t : rep.terms) {
        const std::vector<Gate> corr{Gate::one(kPauli[static_cast<int>(t.first)], 0),
                                     Gate::one(kPauli[static_cast<int>(t.second)], 1)};
        sum += t.coefficient * oracle::ptm_of_kraus({oracle::fragment_unitary(corr)}) * noise * ideal;
      }
      worst = std::max(worst, (sum - ideal).cwiseAbs().maxCoeff());
      worst = std::max(worst, (reconstruct_ptm(rep) - ideal).cwiseAbs().maxCoeff());
    }
  }
  return {worst < 1e-10, "max entry error " + fmt("%.2e", worst)};
}

Outcome one_norm() {
  const double p = 0.01;
  const double closed = std::pow((1 + 2 * p / 3) / (1 - 4 * p / 3), 2);
  const oracle::Ptm inv = oracle::ptm_of_kraus(oracle::local_depolarizing_kraus(p)).inverse();
  double brute = 0.0;
  for (int a = 0; a < 16; ++a) {
    double q = 0.0;
    for (int b = 0; b < 16; ++b) q += (commute(a, b) ? 1.0 : -1.0) * inv(b, b) / 16.0;
    brute += std::abs(q);
  }
  const double lib = represent_2q_gate(Gate::two(GateKind::kCNOT, 0, 1), p).one_norm;
  const bool ok = std::abs(lib - 1.04095) < 1e-4 && std::abs(closed - 1.04095) < 1e-4 &&
                  std::abs(brute - lib) < 1e-12 && std::abs(closed - lib) < 1e-12;
  return {ok, "gamma " + fmt("%.6f", lib) + ", brute force " + fmt("%.6f", brute)};
}

Outcome richardson() {
  const std::vector<double> nodes{1, 2, 3};
  const auto eta = richardson_coefficients(nodes);
  bool ok = eta.size() == 3 && eta[0] == 3.0 && eta[1] == -3.0 && eta[2] == 1.0;
  Rng rng(303);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + rng.below(4);
    std::vector<double> lam;
    for (std::size_t i = 0; i < k; ++i) lam.push_back(1.0 + static_cast<double>(i) + 0.9 * rng.uniform());
    const auto e = richardson_coefficients(lam);
    for (std::size_t m = 0; m < k; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += e[i] * std::pow(lam[i], static_cast<double>(m));
      worst = std::max(worst, std::abs(s - (m == 0 ? 1.0 : 0.0)));
    }
  }
  ok = ok && worst < 1e-10;
  return {ok, "eta(1,2,3) = (" + fmt("%g", eta[0]) + ", " + fmt("%g", eta[1]) + ", " + fmt("%g", eta[2]) +
                  "), nodal residual " + fmt("%.2e", worst)};
}

Outcome extrapolator_exactness() {
  BenchmarkInstance inst;
  inst.circuit = Circuit(2);
  for (int i = 0; i < 4; ++i) inst.circuit.append(Gate::two(GateKind::kCNOT, 0, 1));
  inst.target_bitstring = "00";
  auto poly = [](double a, double b, double c) -> Executor {
    return [=](const Circuit& circ, std::uint64_t shots, Rng&) {
      const double lam = static_cast<double>(circ.size()) / 4.0;
      return ExpectationEstimate{a + b * lam + c * lam * lam, shots, 0.0};
    };
  };
  ZneConfig r;
  Rng rng(404);
  double worst_r = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(), b = rng.uniform() - 0.5, c = 0.2 * (rng.uniform() - 0.5);
    worst_r = std::max(worst_r, std::abs(execute_zne(inst, poly(a, b, c), r, rng).value - a));
  }
  ZneConfig l;
  l.extrapolator = Extrapolator::kLinear;
  double worst_l = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(), b = rng.uniform() - 0.5;
    worst_l = std::max(worst_l, std::abs(execute_zne(inst, poly(a, b, 0.0), l, rng).value - a));
  }
  return {worst_r < 1e-9 && worst_l < 1e-12,
          "richardson error " + fmt("%.2e", worst_r) + ", linear error " + fmt("%.2e", worst_l)};
}

Outcome pec_unbiasedness() {
  const NoiseModel model = build_depolarizing_model(0.01, 2);
  BenchmarkInstance inst;
  inst.circuit = Circuit(2);
  for (int i = 0; i < 5; ++i) inst.circuit.append(Gate::two(GateKind::kCNOT, 0, 1));
  inst.circuit.append(Gate::measure(0));
  inst.circuit.append(Gate::measure(1));
  inst.target_bitstring = "00";
  const Executor exec = [&](const Circuit& c, std::uint64_t shots, Rng& r) {
    return estimate_expectation(run_shots(c, model, shots, r), "00");
  };
  PecConfig cfg;
  cfg.samples = 100;
  cfg.shots = 100 * 100;
  std::vector<double> mitigated, noisy;
  const Rng root(505);
  for (int rep = 0; rep < 200; ++rep) {
    Rng r = root.split(rep, 0);
    mitigated.push_back(execute_pec(inst, exec, model, cfg, r).value);
    Rng n = root.split(rep, 1);
    noisy.push_back(exec(inst.circuit, cfg.shots, n).value);
  }
  const double mm = mean(mitigated), ms = stderr_of(mitigated);
  const double nm = mean(noisy), ns = stderr_of(noisy);
  const bool ok = std::abs(mm - 1.0) < 4 * ms && (1.0 - nm) > 10 * ns;
  return {ok, "mean A_PEC " + fmt("%.5f", mm) + " +- " + fmt("%.5f", ms) + ", mean noisy " + fmt("%.5f", nm) +
                  " +- " + fmt("%.5f", ns)};
}

Outcome depolarizing_reproduction() {
  const std::vector<std::size_t> depths{1, 3, 5, 7, 9};
  std::vector<double> mu_sum(depths.size(), 0.0);
  std::vector<std::vector<double>> noisy(depths.size());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ExperimentConfig c;
    c.n_qubits = 3;
    c.depths = depths;
    c.seed = seed;
    const auto rec = run_experiment(c);
    const Summary s = summarize(rec);
    for (std::size_t i = 0; i < depths.size(); ++i) {
      mu_sum[i] += s.rows[i].mu.unbounded ? 1e9 : s.rows[i].mu.value;
      for (double v : rec.noisy_values[i]) noisy[i].push_back(v);
    }
  }
  bool ok = true;
  std::string detail = "mean mu:";
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const double m = mu_sum[i] / 5.0;
    detail += " " + fmt("%.2f", m);
    if (depths[i] >= 3 && !(m > 1.0)) ok = false;
  }
  detail += "; noisy:";
  for (std::size_t i = 0; i < depths.size(); ++i) {
    detail += " " + fmt("%.4f", mean(noisy[i]));
    if (i > 0) {
      const double slack = 2 * std::hypot(stderr_of(noisy[i]), stderr_of(noisy[i - 1]));
      if (mean(noisy[i]) > mean(noisy[i - 1]) + slack) ok = false;
    }
  }
  return {ok, detail};
}

Outcome backend_equivalence() {
  const NoiseModel model = build_depolarizing_model(0.01, 4);
  Rng gen(707);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto inst = generate_mirror_circuit(4, 1 + i % 5, gen);
    Rng a = gen.split(i, 0), b = gen.split(i, 1);
    const auto ta = run_shots(inst.circuit, model, 10000, a);
    const auto sv = run_statevector(inst.circuit, model, 10000, b);
    worst = std::max(worst, total_variation_distance(ta, sv));
  }
  return {worst < 0.05, "max TVD " + fmt("%.4f", worst)};
}

Outcome noiseless_correctness() {
  Rng gen(808);
  const std::size_t widths[] = {3, 5, 12};
  int checked = 0, failures = 0;
  for (int kind = 0; kind < 2; ++kind) {
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = widths[i % 3];
      const std::size_t d = 1 + (i / 3) % 12;
      const auto inst = kind == 0 ? generate_rb_circuit(n, d, gen) : generate_mirror_circuit(n, d, gen);
      const NoiseModel quiet = build_depolarizing_model(0.0, n);
      for (double lam : {0.0, 1.0, 2.0, 3.0}) {
        const Circuit c = lam == 0.0 ? inst.circuit : fold_global(inst.circuit, lam);
        Rng r = gen.split(i, kind, static_cast<int>(lam));
        const auto res = run_shots(c, quiet, 64, r);
        ++checked;
        if (res.counts.size() != 1 || res.counts.begin()->first != inst.target_bitstring ||
            ideal_bitstring(c) != inst.target_bitstring) {
          ++failures;
        }
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " circuits, " + std::to_string(failures) + " failures"};
}

Outcome barrier_demonstration() {
  Rng gen(909);
  const std::size_t depths[] = {1, 3, 5, 7, 9};
  double worst_plain = 0.0, worst_ratio = 1e9;
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const auto inst = generate_rb_circuit(3, depths[i % 5], gen);
    const double original = static_cast<double>(gate_counts(inst.circuit).two_qubit);
    const Circuit folded = fold_global(inst.circuit, 3.0);
    const double plain = static_cast<double>(gate_counts(cancel_inverses(folded)).two_qubit);
    const auto blocked = insert_rotation_barriers(folded, 1e-4, gen);
    const double kept = static_cast<double>(gate_counts(cancel_inverses(blocked.circuit)).two_qubit);
    if (original == 0) continue;
    const double dev = std::abs(plain - original) / original;
    worst_plain = std::max(worst_plain, dev);
    worst_ratio = std::min(worst_ratio, kept / original);
    if (dev > 0.05 || kept < 2.9 * original) ok = false;
  }
  return {ok, "max deviation without barriers " + fmt("%.3f", worst_plain) + ", min ratio with barriers " +
                  fmt("%.3f", worst_ratio)};
}

Outcome gate_count_scaling() {
  struct Row {
    BenchmarkKind kind;
    std::size_t n;
    std::vector<double> reference;  // d = 1, 3, 5, 7, 9, 12
  };
  const std::vector<Row> rows = {
      {BenchmarkKind::kRB, 3, {3, 6, 9, 12, 15, 18}},
      {BenchmarkKind::kRB, 5, {7, 11, 18, 24, 31, 37}},
      {BenchmarkKind::kRB, 12, {19, 36, 53, 73, 89, 115}},
      {BenchmarkKind::kMirror, 2, {2, 6, 10, 14, 18, 24}},
      {BenchmarkKind::kMirror, 5, {4, 12, 20, 28, 36, 48}},
      {BenchmarkKind::kMirror, 12, {10, 30, 51, 72, 92, 121}},
  };
  const std::size_t depths[] = {1, 3, 5, 7, 9, 12};
  Rng gen(1010);
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (const auto& row : rows) {
    double prev = -1.0;
    for (std::size_t j = 0; j < 6; ++j) {
      double total = 0.0;
      for (int i = 0; i < 10; ++i) {
        const auto inst = row.kind == BenchmarkKind::kRB ? generate_rb_circuit(row.n, depths[j], gen)
                                                         : generate_mirror_circuit(row.n, depths[j], gen);
        total += static_cast<double>(gate_counts(inst.circuit).two_qubit);
      }
      const double avg = total / 10.0;
      const double rel = std::abs(avg - row.reference[j]) / row.reference[j];
      worst = std::max(worst, rel);
      if (rel > 0.5 || avg <= prev) {
        ok = false;
        detail += benchmark_kind_name(row.kind) + " n=" + std::to_string(row.n) + " d=" +
                  std::to_string(depths[j]) + " avg " + fmt("%.1f", avg) + "; ";
      }
      prev = avg;
    }
  }
  return {ok, detail + "max relative deviation " + fmt("%.3f", worst)};
}

Outcome kolkata_scale() {
  bool ok = true;
  std::string detail;
  for (Technique t : {Technique::kZneLinear, Technique::kZneRichardson}) {
    ExperimentConfig c;
    c.n_qubits = 12;
    c.depths = {1, 5, 9};
    c.technique = t;
    c.noise.kind = NoiseSpec::Kind::kCalibration;
    c.noise.calibration_path = kDataDir + "/kolkata12.cal";
    c.seed = 1111;
    const Summary s = summarize(run_experiment(c));
    if (!detail.empty()) detail += "; ";
    detail += technique_name(t) + " mu:";
    for (const auto& row : s.rows) {
      detail += " " + (row.mu.unbounded ? std::string("inf") : fmt("%.2f", row.mu.value));
      if (!row.mu.unbounded && row.mu.value < 0.8) ok = false;
    }
  }
  return {ok, detail};
}

std::size_t count_files(const fs::path& dir) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.is_regular_file();
  return n;
}

Outcome persistence() {
  const fs::path root = fs::temp_directory_path() / "qembench_acceptance_data";
  fs::remove_all(root);
  bool ok = true;
  std::string detail;

  ExperimentConfig z;
  z.n_qubits = 3;
  z.shots = 10000;
  z.seed = 1212;
  const auto zrec = run_experiment(z);
  const fs::path zdir = persist_record(zrec, root);
  const fs::path want = root / "software" / "zne" / "rb" / "depolarizing" / "depolarizing_zne_rb_3_1_9_10000_4";
  if (zdir != want) {
    ok = false;
    detail += "unexpected directory " + zdir.string() + "; ";
  }
  const std::string label = "depolarizing_zne_rb_3_1_9_10000_4";
  for (const char* prefix : {"cnot_counts", "noise_scaled_expectation_values", "noisy_values", "oneq_counts",
                             "true_values", "mitigated_values"}) {
    if (!fs::exists(zdir / (std::string(prefix) + "_" + label + ".csv"))) {
      ok = false;
      detail += std::string("missing ") + prefix + "; ";
    }
  }
  const std::size_t zfiles = count_files(zdir);
  if (!(load_record(zdir) == zrec)) {
    ok = false;
    detail += "zne round trip differs; ";
  }

  ExperimentConfig p = z;
  p.technique = Technique::kPec;
  p.depths = {1, 3};
  const auto prec = run_experiment(p);
  const fs::path pdir = persist_record(prec, root);
  if (pdir.filename() != "depolarizing_pec_rb_3_1_3_10000_4") {
    ok = false;
    detail += "unexpected pec directory; ";
  }
  const std::size_t pfiles = count_files(pdir);
  if (!(load_record(pdir) == prec)) {
    ok = false;
    detail += "pec round trip differs; ";
  }
  if (zfiles != 6 || pfiles != 5) ok = false;
  detail += "zne files " + std::to_string(zfiles) + ", pec files " + std::to_string(pfiles);
  fs::remove_all(root);
  return {ok, detail};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "PEC representation exactness", 1, pec_ptm_exactness},
      {2, "one-norm at p = 0.01", 0, one_norm},
      {3, "Richardson coefficients and nodal identities", 0, richardson},
      {4, "extrapolator exactness", 0, extrapolator_exactness},
      {5, "PEC unbiasedness end to end", 60, pec_unbiasedness},
      {6, "depolarizing-simulator reproduction", 300, depolarizing_reproduction},
      {7, "tableau vs statevector equivalence", 300, backend_equivalence},
      {8, "noiseless correctness", 0, noiseless_correctness},
      {9, "rotation barrier demonstration", 0, barrier_demonstration},
      {10, "gate-count scaling", 0, gate_count_scaling},
      {11, "12-qubit calibration scale test", 600, kolkata_scale},
      {12, "persistence conformance", 0, persistence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      out.ok = false;
      out.detail += "; over time budget";
    }
    failed += !out.ok;
    std::printf("%s criterion %2d: %s (%s; %.2fs)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
