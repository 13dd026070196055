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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>
#include <vector>

#include "qembench/benchmarks.h"
#include "qembench/circuit.h"
#include "qembench/engine.h"
#include "qembench/errors.h"
#include "qembench/harness.h"
#include "qembench/metrics.h"
#include "qembench/noise.h"
#include "qembench/pec.h"
#include "qembench/transforms.h"
#include "qembench/zne.h"

namespace py = pybind11;
using namespace qembench;

namespace {

ExperimentConfig config_from(const std::map<std::string, std::string>& settings) {
  ExperimentConfig c;
  for (const auto& [k, v] : settings) apply_config_setting(c, k, v);
  return c;
}

py::dict improvement_dict(const Improvement& mu) {
  py::dict d;
  d["mu"] = mu.unbounded ? py::object(py::none()) : py::object(py::float_(mu.value));
  d["unbounded"] = mu.unbounded;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum error mitigation benchmarking core";

  static py::exception<Error> error_type(m, "QembenchError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type(e.what());
    }
  });

  py::class_<Circuit>(m, "Circuit")
      .def_static("from_text", [](const std::string& text) { return circuit_from_text(text); })
      .def("to_text", [](const Circuit& c) { return to_text(c); })
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def("__len__", &Circuit::size)
      .def("gate_counts",
           [](const Circuit& c) {
             const GateCounts k = gate_counts(c);
             return std::make_pair(k.two_qubit, k.single_qubit);
           },
           "(two_qubit, single_qubit) gate counts")
      .def("inverse", &Circuit::inverse)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  py::class_<BenchmarkInstance>(m, "BenchmarkInstance")
      .def_readonly("circuit", &BenchmarkInstance::circuit)
      .def_readonly("target", &BenchmarkInstance::target_bitstring)
      .def_readonly("depth", &BenchmarkInstance::clifford_depth);

  m.def("rb_circuit", [](std::size_t n, std::size_t depth, std::uint64_t seed) {
        Rng rng(seed);
        return generate_rb_circuit(n, depth, rng);
      }, py::arg("n_qubits"), py::arg("depth"), py::arg("seed") = 0);
  m.def("mirror_circuit",
        [](std::size_t n, std::size_t depth, std::uint64_t seed, std::vector<Edge> connectivity) {
          Rng rng(seed);
          MirrorOptions opts;
          opts.connectivity = std::move(connectivity);
          return generate_mirror_circuit(n, depth, rng, opts);
        },
        py::arg("n_qubits"), py::arg("depth"), py::arg("seed") = 0,
        py::arg("connectivity") = std::vector<Edge>{});

  m.def("fold_global", &fold_global, py::arg("circuit"), py::arg("scale_factor"));
  m.def("cancel_inverses", &cancel_inverses);
  m.def("insert_rotation_barriers", [](const Circuit& c, double angle, std::uint64_t seed) {
        Rng rng(seed);
        return insert_rotation_barriers(c, angle, rng).circuit;
      }, py::arg("circuit"), py::arg("angle") = 1e-4, py::arg("seed") = 0);

  py::class_<NoiseModel>(m, "NoiseModel")
      .def_property_readonly("n_qubits", &NoiseModel::n_qubits)
      .def_property_readonly("name", &NoiseModel::name)
      .def("edges", &NoiseModel::edges)
      .def("readout_flip", &NoiseModel::readout_flip);
  m.def("depolarizing_model", &build_depolarizing_model, py::arg("p"), py::arg("n_qubits"));
  m.def("calibration_model", [](const std::string& path, std::vector<std::string> layout) {
        return build_calibration_model(load_calibration(path), layout);
      }, py::arg("path"), py::arg("layout") = std::vector<std::string>{});
  m.def("local_depol_param", &local_depol_param);

  m.def("run", [](const Circuit& c, const NoiseModel& model, std::uint64_t shots, std::uint64_t seed,
                  const std::string& backend) {
        Rng rng(seed);
        return run_backend(backend_from_name(backend), c, model, shots, rng).counts;
      }, py::arg("circuit"), py::arg("model"), py::arg("shots"), py::arg("seed") = 0,
      py::arg("backend") = "tableau");

  m.def("richardson_coefficients", [](const std::vector<double>& x) { return richardson_coefficients(x); });
  m.def("linear_coefficients", [](const std::vector<double>& x) { return linear_coefficients(x); });
  m.def("linear_intercept", [](const std::vector<double>& x, const std::vector<double>& y) {
    return linear_intercept(x, y);
  });
  m.def("pec_one_norm", [](double p) {
    return represent_2q_gate(Gate::two(GateKind::kCNOT, 0, 1), p).one_norm;
  });

  m.def("improvement_factor", [](const std::vector<double>& noisy, const std::vector<double>& mitigated,
                                 double ideal, std::uint64_t shots, std::uint64_t mitigated_shots) {
        ProblemResult r{ideal, noisy, mitigated, shots, mitigated_shots};
        return improvement_dict(improvement_factor_problem(r));
      }, py::arg("noisy"), py::arg("mitigated"), py::arg("ideal") = 1.0, py::arg("shots") = 10000,
      py::arg("mitigated_shots") = 10000);

  py::class_<ExperimentRecord>(m, "ExperimentRecord")
      .def_readonly("qem", &ExperimentRecord::qem)
      .def_readonly("circuit", &ExperimentRecord::circuit)
      .def_readonly("platform", &ExperimentRecord::platform)
      .def_readonly("depths", &ExperimentRecord::depths)
      .def_readonly("shots", &ExperimentRecord::shots)
      .def_readonly("mitigated_shots", &ExperimentRecord::mitigated_shots)
      .def_readonly("true_values", &ExperimentRecord::true_values)
      .def_readonly("noisy_values", &ExperimentRecord::noisy_values)
      .def_readonly("mitigated_values", &ExperimentRecord::mitigated_values)
      .def_readonly("noise_scaled_values", &ExperimentRecord::noise_scaled_values)
      .def_readonly("cnot_counts", &ExperimentRecord::cnot_counts)
      .def_readonly("oneq_counts", &ExperimentRecord::oneq_counts)
      .def("__eq__", [](const ExperimentRecord& a, const ExperimentRecord& b) { return a == b; });

  m.def("run_experiment", [](const std::map<std::string, std::string>& settings) {
        return run_experiment(config_from(settings));
      }, py::arg("settings") = std::map<std::string, std::string>{},
      "Run an experiment; settings use the same keys as the config file.");
  m.def("persist", &persist_record, py::arg("record"), py::arg("root"));
  m.def("load", &load_record, py::arg("directory"));
  m.def("validate", &validate_record);
  m.def("summarize_json", [](const ExperimentRecord& r) { return summarize(r).to_json(); });
}
