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

#include "qembench/harness.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#include "qembench/errors.h"
#include "qembench/pec.h"
#include "qembench/zne.h"

namespace qembench {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kFormatVersion = 1;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kConfig, key + ": expected a number, got '" + text + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kConfig, key + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw Error(ErrorCode::kConfig, key + ": expected a boolean, got '" + text + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

NoiseModel build_model(const ExperimentConfig& config) {
  if (config.noise.kind == NoiseSpec::Kind::kDepolarizing) {
    return build_depolarizing_model(config.noise.p, config.n_qubits);
  }
  const CalibrationData cal = load_calibration(config.noise.calibration_path);
  std::vector<std::string> layout = config.noise.layout;
  if (layout.empty()) {
    if (cal.qubits.size() < config.n_qubits) {
      throw Error(ErrorCode::kIncompleteCalibration,
                  "calibration '" + cal.name + "' has " + std::to_string(cal.qubits.size()) +
                      " qubits, need " + std::to_string(config.n_qubits));
    }
    for (std::size_t i = 0; i < config.n_qubits; ++i) layout.push_back(cal.qubits[i].label);
  }
  if (layout.size() != config.n_qubits) {
    throw Error(ErrorCode::kConfig, "layout names " + std::to_string(layout.size()) +
                                        " qubits but the circuit has " +
                                        std::to_string(config.n_qubits));
  }
  return build_calibration_model(cal, layout);
}

BenchmarkInstance make_instance(const ExperimentConfig& config, const NoiseModel& model,
                                std::size_t depth, Rng& rng) {
  if (config.circuit == BenchmarkKind::kRB) return generate_rb_circuit(config.n_qubits, depth, rng);
  MirrorOptions options;
  if (config.noise.kind == NoiseSpec::Kind::kCalibration) options.connectivity = model.edges();
  return generate_mirror_circuit(config.n_qubits, depth, rng, options);
}

Matrix zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<double>(cols, 0.0));
}

void write_csv(const fs::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

Matrix read_csv(const fs::path& path, std::size_t rows, std::size_t cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "missing file " + path.string());
  Matrix m;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split_list(line)) row.push_back(parse_double(path.filename().string(), cell));
    if (row.size() != cols) {
      throw Error(ErrorCode::kParse, path.filename().string() + " row " + std::to_string(m.size() + 1) +
                                         ": expected " + std::to_string(cols) + " columns, got " +
                                         std::to_string(row.size()));
    }
    m.push_back(std::move(row));
  }
  if (m.size() != rows) {
    throw Error(ErrorCode::kParse, path.filename().string() + ": expected " + std::to_string(rows) +
                                       " rows, got " + std::to_string(m.size()));
  }
  return m;
}

std::string prefix_of(const ExperimentRecord& r) {
  const std::size_t lo = r.depths.empty() ? 0 : *std::min_element(r.depths.begin(), r.depths.end());
  const std::size_t hi = r.depths.empty() ? 0 : *std::max_element(r.depths.begin(), r.depths.end());
  return r.platform + "_" + r.qem + "_" + r.circuit + "_" + std::to_string(r.n_qubits) + "_" +
         std::to_string(lo) + "_" + std::to_string(hi) + "_" + std::to_string(r.shots) + "_" +
         std::to_string(r.columns());
}

fs::path csv_name(const std::string& kind, const std::string& prefix) {
  return kind + "_" + prefix + ".csv";
}

Json improvement_json(const Improvement& mu) {
  Json j;
  j["mu"] = mu.unbounded ? Json(nullptr) : Json(mu.value);
  j["unbounded"] = mu.unbounded;
  return j;
}

std::string improvement_text(const Improvement& mu) {
  return mu.unbounded ? std::string("unbounded") : format_double(mu.value);
}

}  // namespace

std::string technique_name(Technique t) {
  switch (t) {
    case Technique::kNone: return "none";
    case Technique::kZneLinear: return "zne-linear";
    case Technique::kZneRichardson: return "zne-richardson";
    case Technique::kPec: return "pec";
  }
  return "none";
}

Technique technique_from_name(const std::string& name) {
  if (name == "none") return Technique::kNone;
  if (name == "zne-linear" || name == "linear") return Technique::kZneLinear;
  if (name == "zne-richardson" || name == "zne" || name == "richardson") return Technique::kZneRichardson;
  if (name == "pec") return Technique::kPec;
  throw Error(ErrorCode::kConfig, "unknown technique '" + name + "'");
}

std::string NoiseSpec::describe() const {
  if (kind == Kind::kDepolarizing) return "depolarizing:" + format_double(p);
  std::string s = "calibration:" + fs::path(calibration_path).filename().string();
  if (!layout.empty()) {
    s += "@";
    for (std::size_t i = 0; i < layout.size(); ++i) s += (i ? "," : "") + layout[i];
  }
  return s;
}

void ExperimentConfig::validate() const {
  if (n_qubits < 1) throw Error(ErrorCode::kConfig, "qubits must be at least 1");
  if (n_qubits > 64) throw Error(ErrorCode::kUnsupportedWidth, "at most 64 qubits are supported");
  if (depths.empty()) throw Error(ErrorCode::kConfig, "no depths given");
  for (auto d : depths) {
    if (d < 1) throw Error(ErrorCode::kConfig, "depths must be at least 1");
  }
  if (instances < 1) throw Error(ErrorCode::kConfig, "instances must be at least 1");
  if (trials < 1) throw Error(ErrorCode::kConfig, "trials must be at least 1");
  if (shots < 1) throw Error(ErrorCode::kConfig, "shots must be at least 1");
  if (threads < 1) throw Error(ErrorCode::kConfig, "threads must be at least 1");
  if (noise.kind == NoiseSpec::Kind::kDepolarizing && !(noise.p >= 0.0 && noise.p < 1.0)) {
    throw Error(ErrorCode::kConfig, "depolarizing p must lie in [0, 1)");
  }
  if (noise.kind == NoiseSpec::Kind::kCalibration && noise.calibration_path.empty()) {
    throw Error(ErrorCode::kConfig, "calibration noise needs a file");
  }
  if (backend == Backend::kStatevector && n_qubits > kStatevectorMaxQubits) {
    throw Error(ErrorCode::kSizeLimit, "statevector backend is limited to " +
                                           std::to_string(kStatevectorMaxQubits) + " qubits");
  }
  if (technique == Technique::kZneLinear || technique == Technique::kZneRichardson) {
    ZneConfig z;
    z.scale_factors = scale_factors;
    z.shots = shots;
    z.barrier_angle = barrier_angle;
    z.validate();
  }
  if (technique == Technique::kPec) {
    PecConfig p;
    p.samples = pec_samples;
    p.shots = shots;
    p.override_p = pec_p;
    p.validate();
  }
}

std::string ExperimentConfig::platform_name() const {
  if (!platform.empty()) return platform;
  if (noise.kind == NoiseSpec::Kind::kDepolarizing) return noise.p == 0.0 ? "noiseless" : "depolarizing";
  static const std::map<std::string, std::string> known = {
      {"lima", "fake_lima"}, {"kolkata12", "fake_kolkata"}, {"kolkata", "fake_kolkata"},
      {"aspen_m2", "fake_aspen_m2"}};
  const std::string stem = fs::path(noise.calibration_path).stem().string();
  const auto it = known.find(stem);
  return it != known.end() ? it->second : "fake_" + stem;
}

std::string ExperimentConfig::qem_token() const {
  switch (technique) {
    case Technique::kNone: return "none";
    case Technique::kZneLinear: return "zne-linear";
    case Technique::kZneRichardson: return "zne";
    case Technique::kPec: return "pec";
  }
  return "none";
}

void apply_config_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "circuit") {
    c.circuit = benchmark_kind_from_name(value);
  } else if (key == "qem" || key == "technique") {
    c.technique = technique_from_name(value);
  } else if (key == "qubits") {
    c.n_qubits = parse_uint(key, value);
  } else if (key == "depths") {
    c.depths.clear();
    for (const auto& d : split_list(value)) c.depths.push_back(parse_uint(key, d));
  } else if (key == "instances") {
    c.instances = parse_uint(key, value);
  } else if (key == "trials") {
    c.trials = parse_uint(key, value);
  } else if (key == "shots") {
    c.shots = parse_uint(key, value);
  } else if (key == "noise") {
    if (value == "none" || value == "noiseless") {
      c.noise.kind = NoiseSpec::Kind::kDepolarizing;
      c.noise.p = 0.0;
    } else if (value.rfind("depolarizing", 0) == 0) {
      c.noise.kind = NoiseSpec::Kind::kDepolarizing;
      const auto colon = value.find(':');
      c.noise.p = colon == std::string::npos ? 0.01 : parse_double(key, value.substr(colon + 1));
    } else {
      throw Error(ErrorCode::kConfig, "noise: expected depolarizing[:p] or none, got '" + value + "'");
    }
  } else if (key == "calibration") {
    c.noise.kind = NoiseSpec::Kind::kCalibration;
    c.noise.calibration_path = value;
  } else if (key == "layout") {
    c.noise.layout = split_list(value);
  } else if (key == "backend") {
    c.backend = backend_from_name(value);
  } else if (key == "seed") {
    c.seed = parse_uint(key, value);
  } else if (key == "scale-factors") {
    c.scale_factors.clear();
    for (const auto& s : split_list(value)) c.scale_factors.push_back(parse_double(key, s));
  } else if (key == "pec-samples") {
    c.pec_samples = parse_uint(key, value);
  } else if (key == "pec-p") {
    c.pec_p = parse_double(key, value);
  } else if (key == "pec-average") {
    c.pec_average = parse_bool(key, value);
  } else if (key == "optimize") {
    c.optimize = parse_bool(key, value);
  } else if (key == "barriers") {
    c.barriers = parse_bool(key, value);
  } else if (key == "barrier-angle") {
    c.barrier_angle = parse_double(key, value);
  } else if (key == "platform") {
    c.platform = value;
  } else if (key == "threads") {
    c.threads = parse_uint(key, value);
  } else {
    throw Error(ErrorCode::kConfig, "unknown setting '" + key + "'");
  }
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(number) + ": expected key=value");
    }
    try {
      apply_config_setting(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw e.with_context("line " + std::to_string(number));
    }
  }
  return config;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ExperimentRecord run_experiment(const ExperimentConfig& config) {
  config.validate();
  const NoiseModel model = build_model(config);
  const bool zne = config.technique == Technique::kZneLinear || config.technique == Technique::kZneRichardson;
  const std::size_t k = config.scale_factors.size();

  ExperimentRecord rec;
  rec.qem = config.qem_token();
  rec.circuit = benchmark_kind_name(config.circuit);
  rec.platform = config.platform_name();
  rec.technique = technique_name(config.technique);
  rec.n_qubits = config.n_qubits;
  rec.depths = config.depths;
  rec.instances = config.instances;
  rec.trials = config.trials;
  rec.shots = config.shots;
  rec.noise = config.noise.describe();
  rec.backend = backend_name(config.backend);
  rec.seed = config.seed;
  if (zne) {
    rec.scale_factors = config.scale_factors;
    rec.mitigated_shots = k * (config.shots / k);
  } else if (config.technique == Technique::kPec) {
    rec.pec_samples = config.pec_samples;
    rec.mitigated_shots = config.pec_samples * (config.shots / config.pec_samples);
  } else {
    rec.mitigated_shots = config.shots;
  }

  const std::size_t rows = config.depths.size();
  const std::size_t cols = rec.columns();
  rec.true_values = zeros(rows, cols);
  rec.noisy_values = zeros(rows, cols);
  rec.mitigated_values = zeros(rows, cols);
  rec.cnot_counts = zeros(rows, cols);
  rec.oneq_counts = zeros(rows, cols);
  if (zne) rec.noise_scaled_values = zeros(rows, cols * k);

  ZneConfig zcfg;
  zcfg.scale_factors = config.scale_factors;
  zcfg.extrapolator =
      config.technique == Technique::kZneLinear ? Extrapolator::kLinear : Extrapolator::kRichardson;
  zcfg.shots = config.shots;
  zcfg.barriers = config.barriers_enabled();
  zcfg.barrier_angle = config.barrier_angle;
  zcfg.optimize = config.optimize;

  PecConfig pcfg;
  pcfg.samples = config.pec_samples;
  pcfg.shots = config.shots;
  pcfg.override_p = config.pec_p;
  pcfg.uniform_average = config.pec_average;

  EngineOptions engine;
  engine.angle_clip = 1e-3;
  engine.threads = 1;

  const Rng master(config.seed);
  const Backend backend = config.backend;

  auto task = [&](std::size_t di, std::size_t c) {
    const std::size_t depth = config.depths[di];
    try {
      Rng gen = master.split(1, di, c);
      const BenchmarkInstance inst = make_instance(config, model, depth, gen);
      const GateCounts counts = gate_counts(inst.circuit);
      const Bitstring target = inst.target_bitstring;
      const Executor exec = [&](const Circuit& circ, std::uint64_t shots, Rng& r) {
        return estimate_expectation(run_backend(backend, circ, model, shots, r, engine), target);
      };
      for (std::size_t t = 0; t < config.trials; ++t) {
        const std::size_t col = c * config.trials + t;
        rec.true_values[di][col] = 1.0;
        rec.cnot_counts[di][col] = static_cast<double>(counts.two_qubit);
        rec.oneq_counts[di][col] = static_cast<double>(counts.single_qubit);
        Rng noisy_rng = master.split(2, di, c, t);
        const double noisy = exec(inst.circuit, config.shots, noisy_rng).value;
        rec.noisy_values[di][col] = noisy;
        Rng qem_rng = master.split(3, di, c, t);
        if (zne) {
          const ZneOutcome z = execute_zne(inst, exec, zcfg, qem_rng);
          rec.mitigated_values[di][col] = z.value;
          for (std::size_t i = 0; i < k; ++i) rec.noise_scaled_values[di][col * k + i] = z.scaled_values[i];
        } else if (config.technique == Technique::kPec) {
          rec.mitigated_values[di][col] = execute_pec(inst, exec, model, pcfg, qem_rng).value;
        } else {
          rec.mitigated_values[di][col] = noisy;
        }
      }
    } catch (const Error& e) {
      throw e.with_context("depth " + std::to_string(depth) + ", circuit " + std::to_string(c));
    }
  };

  const std::size_t n_tasks = rows * config.instances;
  const std::size_t workers = std::min(config.threads, n_tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) task(i / config.instances, i % config.instances);
    return rec;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  std::size_t failed_at = n_tasks;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= n_tasks) return;
          i = next++;
        }
        try {
          task(i / config.instances, i % config.instances);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (i < failed_at) {
            failed_at = i;
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rec;
}

fs::path record_directory(const fs::path& root, const ExperimentRecord& r) {
  return root / r.type / r.qem / r.circuit / r.platform / prefix_of(r);
}

fs::path persist_record(const ExperimentRecord& r, const fs::path& root) {
  const fs::path dir = record_directory(root, r);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  const std::string prefix = prefix_of(r);
  write_csv(dir / csv_name("cnot_counts", prefix), r.cnot_counts);
  write_csv(dir / csv_name("oneq_counts", prefix), r.oneq_counts);
  write_csv(dir / csv_name("true_values", prefix), r.true_values);
  write_csv(dir / csv_name("noisy_values", prefix), r.noisy_values);
  write_csv(dir / csv_name("mitigated_values", prefix), r.mitigated_values);
  if (r.is_zne()) write_csv(dir / csv_name("noise_scaled_expectation_values", prefix), r.noise_scaled_values);

  Json j;
  j["format_version"] = kFormatVersion;
  j["type"] = r.type;
  j["qem"] = r.qem;
  j["circuit"] = r.circuit;
  j["platform"] = r.platform;
  j["technique"] = r.technique;
  j["qubits"] = r.n_qubits;
  j["depths"] = r.depths;
  j["instances"] = r.instances;
  j["trials"] = r.trials;
  j["columns"] = r.columns();
  j["shots"] = r.shots;
  j["mitigated_shots"] = r.mitigated_shots;
  j["scale_factors"] = r.scale_factors;
  j["pec_samples"] = r.pec_samples;
  j["noise"] = r.noise;
  j["backend"] = r.backend;
  j["seed"] = r.seed;
  const fs::path manifest = dir.parent_path() / (prefix + ".json");
  std::ofstream out(manifest, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + manifest.string());
  out << j.dump(2) << '\n';
  return dir;
}

ExperimentRecord load_record(const fs::path& directory) {
  fs::path dir = directory;
  if (dir.filename().empty()) dir = dir.parent_path();
  const fs::path manifest = dir.parent_path() / (dir.filename().string() + ".json");
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::kIo, "missing manifest " + manifest.string());
  ExperimentRecord r;
  const std::string prefix = dir.filename().string();
  try {
    const Json j = Json::parse(in);
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported format version in " + manifest.string());
    }
    r.type = j.at("type").get<std::string>();
    r.qem = j.at("qem").get<std::string>();
    r.circuit = j.at("circuit").get<std::string>();
    r.platform = j.at("platform").get<std::string>();
    r.technique = j.at("technique").get<std::string>();
    r.n_qubits = j.at("qubits").get<std::size_t>();
    r.depths = j.at("depths").get<std::vector<std::size_t>>();
    r.instances = j.at("instances").get<std::size_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.shots = j.at("shots").get<std::uint64_t>();
    r.mitigated_shots = j.at("mitigated_shots").get<std::uint64_t>();
    r.scale_factors = j.at("scale_factors").get<std::vector<double>>();
    r.pec_samples = j.at("pec_samples").get<std::size_t>();
    r.noise = j.at("noise").get<std::string>();
    r.backend = j.at("backend").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, manifest.string() + ": " + e.what());
  }
  const std::size_t rows = r.depths.size();
  const std::size_t cols = r.columns();
  r.cnot_counts = read_csv(dir / csv_name("cnot_counts", prefix), rows, cols);
  r.oneq_counts = read_csv(dir / csv_name("oneq_counts", prefix), rows, cols);
  r.true_values = read_csv(dir / csv_name("true_values", prefix), rows, cols);
  r.noisy_values = read_csv(dir / csv_name("noisy_values", prefix), rows, cols);
  r.mitigated_values = read_csv(dir / csv_name("mitigated_values", prefix), rows, cols);
  if (r.is_zne()) {
    r.noise_scaled_values =
        read_csv(dir / csv_name("noise_scaled_expectation_values", prefix), rows, cols * r.scale_factors.size());
  }
  return r;
}

std::vector<ProblemResult> problems_at_depth(const ExperimentRecord& r, std::size_t row) {
  std::vector<ProblemResult> out;
  for (std::size_t c = 0; c < r.instances; ++c) {
    ProblemResult p;
    p.ideal = r.true_values[row][c * r.trials];
    p.shots = r.shots;
    p.mitigated_shots = r.mitigated_shots;
    for (std::size_t t = 0; t < r.trials; ++t) {
      p.noisy.push_back(r.noisy_values[row][c * r.trials + t]);
      p.mitigated.push_back(r.mitigated_values[row][c * r.trials + t]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> validate_record(const ExperimentRecord& r) {
  std::vector<std::string> issues;
  const std::size_t rows = r.depths.size();
  const std::size_t cols = r.columns();
  auto check_shape = [&](const char* name, const Matrix& m, std::size_t want_cols) {
    if (m.size() != rows) {
      issues.push_back(std::string(name) + ": " + std::to_string(m.size()) + " rows, expected " +
                       std::to_string(rows));
      return false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != want_cols) {
        issues.push_back(std::string(name) + " row " + std::to_string(i + 1) + ": " +
                         std::to_string(m[i].size()) + " columns, expected " + std::to_string(want_cols));
        return false;
      }
    }
    return true;
  };
  if (rows == 0) issues.push_back("no depths recorded");
  if (cols == 0) issues.push_back("no circuit columns recorded");
  const bool shapes = check_shape("true_values", r.true_values, cols) &
                      check_shape("noisy_values", r.noisy_values, cols) &
                      check_shape("mitigated_values", r.mitigated_values, cols) &
                      check_shape("cnot_counts", r.cnot_counts, cols) &
                      check_shape("oneq_counts", r.oneq_counts, cols) &
                      (!r.is_zne() || check_shape("noise_scaled_expectation_values", r.noise_scaled_values,
                                                  cols * r.scale_factors.size()));
  if (r.shots == 0) issues.push_back("shots must be positive");
  std::uint64_t want_qem = r.shots;
  if (r.is_zne() && !r.scale_factors.empty()) {
    want_qem = r.scale_factors.size() * (r.shots / r.scale_factors.size());
  } else if (r.qem == "pec" && r.pec_samples > 0) {
    want_qem = r.pec_samples * (r.shots / r.pec_samples);
  }
  if (r.mitigated_shots != want_qem) {
    issues.push_back("mitigated_shots " + std::to_string(r.mitigated_shots) + " does not match the budget " +
                     std::to_string(want_qem));
  }
  if (!shapes) return issues;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string at = " at depth " + std::to_string(r.depths[i]) + ", column " + std::to_string(j);
      if (r.true_values[i][j] != 1.0) issues.push_back("true value is not 1" + at);
      const double noisy = r.noisy_values[i][j];
      if (!(noisy >= 0.0 && noisy <= 1.0)) issues.push_back("noisy value outside [0, 1]" + at);
      if (!std::isfinite(r.mitigated_values[i][j])) issues.push_back("mitigated value not finite" + at);
      for (const Matrix* m : {&r.cnot_counts, &r.oneq_counts}) {
        const double v = (*m)[i][j];
        if (!(v >= 0.0) || v != std::floor(v)) issues.push_back("gate count not a non-negative integer" + at);
      }
    }
  }
  return issues;
}

Summary summarize(const ExperimentRecord& r) {
  const auto issues = validate_record(r);
  if (!issues.empty()) throw Error(ErrorCode::kAggregation, "invalid record: " + issues.front());
  Summary s;
  s.label = prefix_of(r);
  std::vector<ProblemResult> all;
  for (std::size_t i = 0; i < r.depths.size(); ++i) {
    const auto problems = problems_at_depth(r, i);
    SummaryRow row;
    row.depth = r.depths[i];
    row.mu = improvement_factor_aggregate(problems);
    double ns = 0.0, ms = 0.0;
    for (std::size_t j = 0; j < r.columns(); ++j) {
      ns += r.noisy_values[i][j];
      ms += r.mitigated_values[i][j];
    }
    row.noisy_mean = ns / static_cast<double>(r.columns());
    row.mitigated_mean = ms / static_cast<double>(r.columns());
    s.rows.push_back(row);
    all.insert(all.end(), problems.begin(), problems.end());
  }
  s.aggregate = improvement_factor_aggregate(all);
  return s;
}

std::string Summary::to_json() const {
  Json j;
  j["label"] = label;
  Json rows_json = Json::array();
  for (const auto& row : rows) {
    Json e;
    e["depth"] = row.depth;
    const Json mu = improvement_json(row.mu);
    e["mu"] = mu["mu"];
    e["unbounded"] = mu["unbounded"];
    e["noisy_mean"] = row.noisy_mean;
    e["mitigated_mean"] = row.mitigated_mean;
    rows_json.push_back(e);
  }
  j["rows"] = rows_json;
  j["aggregate"] = improvement_json(aggregate);
  return j.dump(2);
}

std::string Summary::to_csv() const {
  std::string out = "depth,mu,unbounded,noisy_mean,mitigated_mean\n";
  for (const auto& row : rows) {
    out += std::to_string(row.depth) + "," + (row.mu.unbounded ? "" : format_double(row.mu.value)) + "," +
           (row.mu.unbounded ? "1" : "0") + "," + format_double(row.noisy_mean) + "," +
           format_double(row.mitigated_mean) + "\n";
  }
  out += "all," + (aggregate.unbounded ? std::string() : format_double(aggregate.value)) + "," +
         (aggregate.unbounded ? "1" : "0") + ",,\n";
  return out;
}

std::string Summary::to_table() const {
  std::ostringstream out;
  out << label << "\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%6s  %12s  %12s  %12s\n", "depth", "mu", "noisy", "mitigated");
  out << buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%6zu  %12s  %12.6f  %12.6f\n", row.depth,
                  row.mu.unbounded ? "unbounded" : std::to_string(row.mu.value).c_str(), row.noisy_mean,
                  row.mitigated_mean);
    out << buf;
  }
  out << "aggregate mu: " << improvement_text(aggregate) << "\n";
  return out.str();
}

}  // namespace qembench
