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

#ifndef QEMBENCH_HARNESS_H_
#define QEMBENCH_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qembench/benchmarks.h"
#include "qembench/engine.h"
#include "qembench/metrics.h"
#include "qembench/noise.h"

namespace qembench {

enum class Technique { kNone, kZneLinear, kZneRichardson, kPec };

std::string technique_name(Technique t);
Technique technique_from_name(const std::string& name);

struct NoiseSpec {
  enum class Kind { kDepolarizing, kCalibration };
  Kind kind = Kind::kDepolarizing;
  double p = 0.01;
  std::string calibration_path;
  std::vector<std::string> layout;  // physical labels; empty: first n qubits of the file

  std::string describe() const;
};

struct ExperimentConfig {
  BenchmarkKind circuit = BenchmarkKind::kRB;
  Technique technique = Technique::kZneRichardson;
  std::size_t n_qubits = 3;
  std::vector<std::size_t> depths{1, 3, 5, 7, 9};
  std::size_t instances = 4;  // |C|
  std::size_t trials = 1;     // t
  std::uint64_t shots = 10000;
  NoiseSpec noise;
  Backend backend = Backend::kTableau;
  std::uint64_t seed = 0;

  std::vector<double> scale_factors{1.0, 2.0, 3.0};
  std::size_t pec_samples = 100;
  std::optional<double> pec_p;  // mismatch mode
  bool pec_average = false;
  bool optimize = false;            // run cancel_inverses on submitted circuits
  std::optional<bool> barriers;     // default: on exactly when optimize is on
  double barrier_angle = 1e-4;
  std::string platform;             // empty: derived from the noise spec
  std::size_t threads = 1;

  void validate() const;
  std::string platform_name() const;
  std::string qem_token() const;
  bool barriers_enabled() const { return barriers.value_or(optimize); }
};

/// Applies one `key=value` setting; keys match the CLI long option names.
void apply_config_setting(ExperimentConfig& config, const std::string& key, const std::string& value);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

using Matrix = std::vector<std::vector<double>>;

/// Rows are depths; columns are the instances x trials evaluations
/// (column = instance * trials + trial). Noise-scaled values hold k entries
/// per column, at column * k + i for scale factor i.
struct ExperimentRecord {
  std::string type = "software";
  std::string qem;       // pec, zne, zne-linear or none
  std::string circuit;   // rb or mirror
  std::string platform;
  std::string technique;
  std::size_t n_qubits = 0;
  std::vector<std::size_t> depths;
  std::size_t instances = 0;
  std::size_t trials = 0;
  std::uint64_t shots = 0;
  std::uint64_t mitigated_shots = 0;
  std::vector<double> scale_factors;  // ZNE only
  std::size_t pec_samples = 0;        // PEC only
  std::string noise;
  std::string backend;
  std::uint64_t seed = 0;

  Matrix true_values;
  Matrix noisy_values;
  Matrix mitigated_values;
  Matrix noise_scaled_values;  // ZNE only
  Matrix cnot_counts;
  Matrix oneq_counts;

  std::size_t columns() const { return instances * trials; }
  bool is_zne() const { return !scale_factors.empty(); }

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

ExperimentRecord run_experiment(const ExperimentConfig& config);

/// root/TYPE/QEM/CIRCUIT/PLATFORM/PLATFORM_QEM_CIRCUIT_QUBITS_MIN_MAX_SHOTS_TRIALS
std::filesystem::path record_directory(const std::filesystem::path& root, const ExperimentRecord& record);

/// Writes the CSV files into record_directory(root, record) and the run
/// manifest next to it as `<directory>.json`. Returns the directory.
std::filesystem::path persist_record(const ExperimentRecord& record, const std::filesystem::path& root);
ExperimentRecord load_record(const std::filesystem::path& directory);

/// Problems of one depth row: one ProblemResult per instance, trials pooled.
std::vector<ProblemResult> problems_at_depth(const ExperimentRecord& record, std::size_t row);

/// Consistency problems found in a record; empty when valid.
std::vector<std::string> validate_record(const ExperimentRecord& record);

struct SummaryRow {
  std::size_t depth = 0;
  Improvement mu;
  double noisy_mean = 0.0;
  double mitigated_mean = 0.0;
};

struct Summary {
  std::string label;
  std::vector<SummaryRow> rows;
  Improvement aggregate;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_table() const;
};

Summary summarize(const ExperimentRecord& record);

}  // namespace qembench

#endif  // QEMBENCH_HARNESS_H_
