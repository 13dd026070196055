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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qembench/errors.h"
#include "qembench/harness.h"
#include "qembench/noise.h"
#include "qembench/pec.h"
#include "qembench/ptm.h"
#include "qembench/rng.h"
#include "qembench/zne.h"

namespace fs = std::filesystem;
using namespace qembench;

namespace {

int exit_code(const Error& e) { return static_cast<int>(e.category()); }

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<Check> selftest_checks() {
  std::vector<Check> out;
  double worst = 0.0;
  for (double p : {0.001, 0.01, 0.05, 0.1}) {
    for (auto kind : {GateKind::kCNOT, GateKind::kCZ}) {
      const Gate g = Gate::two(kind, 0, 1);
      const auto rep = represent_2q_gate(g, p);
      const Ptm diff = reconstruct_ptm(rep) - ptm_of_unitary(two_qubit_unitary(g));
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  out.push_back({"pec representation reproduces the ideal PTM", worst < 1e-10,
                 "max entry error " + std::to_string(worst)});

  const double p = 0.01;
  const double gamma = represent_2q_gate(Gate::two(GateKind::kCNOT, 0, 1), p).one_norm;
  const double closed = std::pow((1 + 2 * p / 3) / (1 - 4 * p / 3), 2);
  out.push_back({"one-norm matches closed form", std::abs(gamma - closed) < 1e-12,
                 "gamma " + std::to_string(gamma)});

  const std::vector<double> nodes{1.0, 2.0, 3.0};
  const auto eta = richardson_coefficients(nodes);
  out.push_back({"richardson coefficients for {1,2,3}",
                 eta.size() == 3 && std::abs(eta[0] - 3) < 1e-12 && std::abs(eta[1] + 3) < 1e-12 &&
                     std::abs(eta[2] - 1) < 1e-12,
                 ""});

  Rng rng(2024);
  double nodal = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> lam;
    const std::size_t k = 2 + rng.below(4);
    for (std::size_t i = 0; i < k; ++i) lam.push_back(1.0 + i + 0.9 * rng.uniform());
    const auto e = richardson_coefficients(lam);
    for (std::size_t m = 0; m < k; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += e[i] * std::pow(lam[i], static_cast<double>(m));
      nodal = std::max(nodal, std::abs(s - (m == 0 ? 1.0 : 0.0)));
    }
  }
  out.push_back({"richardson nodal identities", nodal < 1e-10, "max residual " + std::to_string(nodal)});

  const std::vector<double> line{0.9 - 0.1, 0.9 - 0.2, 0.9 - 0.3};
  out.push_back({"linear extrapolation of exact line",
                 std::abs(linear_intercept(nodes, line) - 0.9) < 1e-12, ""});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark quantum error mitigation on simulated devices"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string config_path, out_dir = "data", circuit, qem, noise, calibration, layout, backend, depths;
  std::string scale_factors;
  std::size_t qubits = 0, instances = 0, trials = 0, pec_samples = 0, threads = 0;
  std::uint64_t shots = 0, seed = 0;
  bool optimize = false;
  std::string barriers;

  auto* run = app.add_subcommand("run", "Run an experiment and persist its data files");
  run->add_option("--config", config_path, "key=value settings file");
  run->add_option("--circuit", circuit, "rb or mirror");
  run->add_option("--qem", qem, "none, zne-linear, zne-richardson or pec");
  run->add_option("--qubits", qubits, "Number of qubits");
  run->add_option("--depths", depths, "Comma separated Clifford depths");
  run->add_option("--shots", shots, "Shot budget per problem");
  run->add_option("--instances", instances, "Random circuits per depth");
  run->add_option("--trials", trials, "Trials per circuit");
  run->add_option("--noise", noise, "depolarizing[:p] or none");
  run->add_option("--calibration", calibration, "Device calibration file");
  run->add_option("--layout", layout, "Comma separated physical qubit labels");
  run->add_option("--backend", backend, "tableau or statevector");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--scale-factors", scale_factors, "ZNE scale factors");
  run->add_option("--pec-samples", pec_samples, "PEC circuit samples");
  run->add_flag("--optimize", optimize, "Cancel adjacent inverses before execution");
  run->add_option("--barriers", barriers, "Rotation barriers (on/off)");
  run->add_option("--threads", threads, "Worker threads");
  run->add_option("--out", out_dir, "Output root directory");

  std::string dir;
  bool as_json = false, as_csv = false;
  auto* summarize_cmd = app.add_subcommand("summarize", "Improvement factors of a persisted run");
  summarize_cmd->add_option("dir", dir, "Run directory")->required();
  summarize_cmd->add_flag("--json", as_json, "Print JSON");
  summarize_cmd->add_flag("--csv", as_csv, "Print CSV");

  auto* validate_cmd = app.add_subcommand("validate", "Check a persisted run for consistency");
  validate_cmd->add_option("dir", dir, "Run directory")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Check PTM and extrapolation invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCategory::kConfig);
  }

  try {
    if (*run) {
      if (!config_path.empty()) config = load_config(config_path);
      auto set = [&](const char* key, const std::string& v) {
        if (!v.empty()) apply_config_setting(config, key, v);
      };
      set("circuit", circuit);
      set("qem", qem);
      set("depths", depths);
      set("noise", noise);
      set("calibration", calibration);
      set("layout", layout);
      set("backend", backend);
      set("scale-factors", scale_factors);
      set("barriers", barriers);
      if (run->count("--qubits")) config.n_qubits = qubits;
      if (run->count("--shots")) config.shots = shots;
      if (run->count("--instances")) config.instances = instances;
      if (run->count("--trials")) config.trials = trials;
      if (run->count("--seed")) config.seed = seed;
      if (run->count("--pec-samples")) config.pec_samples = pec_samples;
      if (run->count("--threads")) config.threads = threads;
      if (optimize) config.optimize = true;
      const ExperimentRecord record = run_experiment(config);
      const fs::path where = persist_record(record, out_dir);
      std::cout << where.string() << "\n";
      std::cout << summarize(record).to_table();
    } else if (*summarize_cmd) {
      const Summary s = summarize(load_record(dir));
      if (as_json) {
        std::cout << s.to_json() << "\n";
      } else if (as_csv) {
        std::cout << s.to_csv();
      } else {
        std::cout << s.to_table();
      }
    } else if (*validate_cmd) {
      const auto issues = validate_record(load_record(dir));
      for (const auto& issue : issues) std::cout << issue << "\n";
      if (!issues.empty()) return static_cast<int>(ErrorCategory::kIo);
      std::cout << "ok\n";
    } else if (*selftest_cmd) {
      bool all = true;
      for (const auto& c : selftest_checks()) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        all = all && c.ok;
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
