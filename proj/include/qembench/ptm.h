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

#ifndef QEMBENCH_PTM_H_
#define QEMBENCH_PTM_H_

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qembench/circuit.h"
#include "qembench/pec.h"

namespace qembench {

/// Real 16x16 Pauli transfer matrix of a two-qubit channel, in the basis
/// P_i = sigma_{i / 4} (qubit 0) x sigma_{i % 4} (qubit 1).
using Ptm = Eigen::Matrix<double, 16, 16>;
using Unitary2 = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Unitary of a Clifford or rotation gate on local qubits 0 and 1.
Unitary2 two_qubit_unitary(const Gate& gate);
Ptm ptm_of_unitary(const Unitary2& u);
/// D_p x D_p.
Ptm ptm_local_depolarizing(double p);
/// PTM of the gate sequence, optionally with D_p x D_p after each
/// two-qubit gate.
Ptm ptm_of_fragment(const std::vector<Gate>& fragment, double noise_p = 0.0);
/// Sum over terms of eta_alpha * PTM(noisy fragment_alpha), with the lower
/// gate qubit relabelled to local qubit 0 and the higher to 1.
Ptm reconstruct_ptm(const OperationRepresentation& rep);

}  // namespace qembench

#endif  // QEMBENCH_PTM_H_
