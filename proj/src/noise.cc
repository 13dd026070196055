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

#include "qembench/noise.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qembench/errors.h"

namespace qembench {

PauliChannel PauliChannel::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kDomain, "depolarizing probability must lie in [0, 1]");
  }
  return PauliChannel{1.0 - p, p / 3.0, p / 3.0, p / 3.0};
}

Pauli PauliChannel::sample(double u) const {
  if (u < p_i) return Pauli::kI;
  u -= p_i;
  if (u < p_x) return Pauli::kX;
  u -= p_x;
  if (u < p_y) return Pauli::kY;
  if (p_z > 0.0) return Pauli::kZ;
  // Rounding residue lands on the last nonzero outcome.
  if (p_y > 0.0) return Pauli::kY;
  if (p_x > 0.0) return Pauli::kX;
  return Pauli::kI;
}

void PauliChannel::validate() const {
  for (double v : {p_i, p_x, p_y, p_z}) {
    if (!(v >= 0.0)) throw Error(ErrorCode::kDomain, "Pauli channel probability is negative");
  }
  if (std::abs(p_i + p_x + p_y + p_z - 1.0) > 1e-12) {
    throw Error(ErrorCode::kDomain, "Pauli channel probabilities do not sum to 1");
  }
}

NoiseModel::NoiseModel(std::size_t n_qubits)
    : n_qubits_(n_qubits), one_qubit_(n_qubits), readout_(n_qubits, 0.0) {}

void NoiseModel::check(Qubit q) const {
  if (q >= n_qubits_) {
    throw Error(ErrorCode::kIncompleteCalibration,
                "noise model '" + name_ + "' covers " + std::to_string(n_qubits_) +
                    " qubits; qubit " + std::to_string(q) + " has no entry");
  }
}

std::string NoiseModel::label(Qubit q) const {
  if (q < labels_.size()) return labels_[q];
  return std::to_string(q);
}

void NoiseModel::set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

void NoiseModel::set_after_1q(Qubit q, const PauliChannel& channel) {
  check(q);
  channel.validate();
  one_qubit_[q] = channel;
}

namespace {
Edge ordered(Qubit a, Qubit b) { return a < b ? Edge{a, b} : Edge{b, a}; }

TwoQubitNoise local_depolarizing(double p) {
  if (!(p >= 0.0) || p >= 0.75) {
    throw Error(ErrorCode::kNonInvertibleChannel,
                "local depolarizing parameter must lie in [0, 3/4), got " + std::to_string(p));
  }
  const PauliChannel d = PauliChannel::depolarizing(p);
  return TwoQubitNoise{p, d, d};
}
}  // namespace

void NoiseModel::set_edge(Qubit a, Qubit b, double local_p) {
  check(a);
  check(b);
  edges_[ordered(a, b)] = local_depolarizing(local_p);
}

void NoiseModel::set_uniform_2q(double local_p) { uniform_ = local_depolarizing(local_p); }

void NoiseModel::set_readout_flip(Qubit q, double p) {
  check(q);
  if (!(p >= 0.0 && p < 1.0)) throw Error(ErrorCode::kDomain, "readout flip must lie in [0, 1)");
  readout_[q] = p;
}

const PauliChannel* NoiseModel::after_1q(Qubit q) const {
  check(q);
  const auto& c = one_qubit_[q];
  return (c && !c->is_identity()) ? &*c : nullptr;
}

bool NoiseModel::has_edge(Qubit a, Qubit b) const {
  return uniform_.has_value() || edges_.count(ordered(a, b)) > 0;
}

const TwoQubitNoise* NoiseModel::after_2q(Qubit a, Qubit b) const {
  check(a);
  check(b);
  if (auto it = edges_.find(ordered(a, b)); it != edges_.end()) return &it->second;
  if (uniform_) return &*uniform_;
  throw Error(ErrorCode::kIncompleteCalibration,
              "no two-qubit calibration for edge " + label(a) + "-" + label(b) + " in '" + name_ +
                  "'");
}

double NoiseModel::readout_flip(Qubit q) const {
  check(q);
  return readout_[q];
}

double NoiseModel::two_qubit_local_p(Qubit a, Qubit b) const { return after_2q(a, b)->local_p; }

double NoiseModel::average_two_qubit_local_p() const {
  if (edges_.empty()) return uniform_ ? uniform_->local_p : 0.0;
  double sum = 0.0;
  for (const auto& [edge, noise] : edges_) sum += noise.local_p;
  return sum / static_cast<double>(edges_.size());
}

bool NoiseModel::is_noiseless() const {
  for (const auto& c : one_qubit_) {
    if (c && !c->is_identity()) return false;
  }
  for (const auto& [edge, noise] : edges_) {
    if (noise.local_p > 0.0) return false;
  }
  if (uniform_ && uniform_->local_p > 0.0) return false;
  return std::all_of(readout_.begin(), readout_.end(), [](double p) { return p == 0.0; });
}

std::vector<Edge> NoiseModel::edges() const {
  std::vector<Edge> out;
  for (const auto& [edge, noise] : edges_) out.push_back(edge);
  return out;
}

double local_depol_param(double p_two_qubit) {
  if (!(p_two_qubit >= 0.0) || p_two_qubit >= 1.0) {
    throw Error(ErrorCode::kDomain, "two-qubit error probability must lie in [0, 1)");
  }
  return 1.0 - std::sqrt(1.0 - p_two_qubit);
}

NoiseModel build_depolarizing_model(double p, std::size_t n_qubits) {
  if (!(p >= 0.0)) throw Error(ErrorCode::kDomain, "depolarizing probability must be >= 0");
  if (p >= 0.75) {
    throw Error(ErrorCode::kNonInvertibleChannel,
                "depolarizing probability must be < 3/4 for an invertible channel");
  }
  NoiseModel model(n_qubits);
  model.set_name("depolarizing");
  model.set_uniform_2q(p);
  return model;
}

const QubitCalibration* CalibrationData::find_qubit(std::string_view label) const {
  for (const auto& q : qubits) {
    if (q.label == label) return &q;
  }
  return nullptr;
}

const EdgeCalibration* CalibrationData::find_edge(std::string_view a, std::string_view b) const {
  for (const auto& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return &e;
  }
  return nullptr;
}

void CalibrationData::validate() const {
  auto prob = [](double v, const std::string& what) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw Error(ErrorCode::kParse, what + " must lie in [0, 1), got " + std::to_string(v));
    }
  };
  for (const auto& q : qubits) {
    prob(q.error_1q, "qubit " + q.label + " single-qubit error");
    prob(q.error_readout, "qubit " + q.label + " readout error");
    if (q.error_cx) prob(*q.error_cx, "qubit " + q.label + " CNOT error");
  }
  for (const auto& e : edges) {
    prob(e.error_cx, "edge " + e.a + "-" + e.b + " CNOT error");
    if (!find_qubit(e.a) || !find_qubit(e.b)) {
      throw Error(ErrorCode::kParse, "edge " + e.a + "-" + e.b + " names an unknown qubit");
    }
  }
}

CalibrationData parse_calibration(std::string_view text, std::string name) {
  CalibrationData cal;
  cal.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  enum class Section { kNone, kQubits, kEdges } section = Section::kNone;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::kParse, cal.name + ":" + std::to_string(line_no) + ": " + msg);
  };
  auto number = [&](const std::string& token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) fail("bad number '" + token + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + token + "'");
    }
    return 0.0;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0].front() == '[') {
      if (tokens[0] == "[qubits]") {
        section = Section::kQubits;
      } else if (tokens[0] == "[edges]") {
        section = Section::kEdges;
      } else {
        fail("unknown section " + tokens[0]);
      }
      continue;
    }
    switch (section) {
      case Section::kNone:
        fail("entry outside of a [qubits] or [edges] section");
        break;
      case Section::kQubits: {
        if (tokens.size() != 3 && tokens.size() != 4) fail("expected 'label eps_1q eps_m [eps_cx]'");
        if (cal.find_qubit(tokens[0])) fail("duplicate qubit " + tokens[0]);
        QubitCalibration q{tokens[0], number(tokens[1]), number(tokens[2]), std::nullopt};
        if (tokens.size() == 4) q.error_cx = number(tokens[3]);
        cal.qubits.push_back(std::move(q));
        break;
      }
      case Section::kEdges: {
        if (tokens.size() != 2) fail("expected 'a-b eps_cx'");
        const auto dash = tokens[0].find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tokens[0].size()) {
          fail("bad edge '" + tokens[0] + "'");
        }
        EdgeCalibration e{tokens[0].substr(0, dash), tokens[0].substr(dash + 1), number(tokens[1])};
        if (e.a == e.b) fail("self-loop edge " + tokens[0]);
        if (cal.find_edge(e.a, e.b)) fail("duplicate edge " + tokens[0]);
        cal.edges.push_back(std::move(e));
        break;
      }
    }
  }
  cal.validate();
  return cal;
}

CalibrationData load_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open calibration file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_calibration(buffer.str(), path.stem().string());
}

NoiseModel build_calibration_model(const CalibrationData& cal, const std::vector<std::string>& layout) {
  std::vector<std::string> labels = layout;
  if (labels.empty()) {
    for (const auto& q : cal.qubits) labels.push_back(q.label);
  }
  NoiseModel model(labels.size());
  model.set_name(cal.name);
  model.set_labels(labels);
  for (Qubit i = 0; i < labels.size(); ++i) {
    const QubitCalibration* q = cal.find_qubit(labels[i]);
    if (!q) {
      throw Error(ErrorCode::kIncompleteCalibration,
                  "calibration '" + cal.name + "' has no entry for qubit " + labels[i]);
    }
    if (q->error_1q > 0.0) model.set_after_1q(i, PauliChannel::depolarizing(q->error_1q));
    model.set_readout_flip(i, q->error_readout);
    for (Qubit j = 0; j < i; ++j) {
      if (const EdgeCalibration* e = cal.find_edge(labels[j], labels[i])) {
        model.set_edge(j, i, local_depol_param(e->error_cx));
      }
    }
  }
  return model;
}

}  // namespace qembench
