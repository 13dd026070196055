# Copyright 2026 The qembench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Benchmark quantum error mitigation on simulated noisy devices."""

import json as _json

from ._core import (
    BenchmarkInstance,
    Circuit,
    ExperimentRecord,
    NoiseModel,
    QembenchError,
    calibration_model,
    cancel_inverses,
    depolarizing_model,
    fold_global,
    improvement_factor,
    insert_rotation_barriers,
    linear_coefficients,
    linear_intercept,
    load,
    local_depol_param,
    mirror_circuit,
    pec_one_norm,
    persist,
    rb_circuit,
    richardson_coefficients,
    run,
    run_experiment,
    summarize_json,
    validate,
)


def summarize(record):
    """Per-depth and aggregate improvement factors as a dict."""
    return _json.loads(summarize_json(record))


__all__ = [
    "BenchmarkInstance",
    "Circuit",
    "ExperimentRecord",
    "NoiseModel",
    "QembenchError",
    "calibration_model",
    "cancel_inverses",
    "depolarizing_model",
    "fold_global",
    "improvement_factor",
    "insert_rotation_barriers",
    "linear_coefficients",
    "linear_intercept",
    "load",
    "local_depol_param",
    "mirror_circuit",
    "pec_one_norm",
    "persist",
    "rb_circuit",
    "richardson_coefficients",
    "run",
    "run_experiment",
    "summarize",
    "summarize_json",
    "validate",
]
