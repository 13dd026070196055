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

#ifndef QEMBENCH_TRANSFORMS_H_
#define QEMBENCH_TRANSFORMS_H_

#include <cstddef>
#include <string>

#include "qembench/circuit.h"
#include "qembench/rng.h"

namespace qembench {

/// Global unitary folding. For odd integer scale factors the result is
/// C (C^dagger C)^((scale-1)/2). Otherwise m = floor((scale-1)/2) whole folds
/// are followed by C_R^dagger C_R, with C_R the last
/// s = round((scale - (2m+1)) / 2 * |C|) gates. Trailing measurements are
/// stripped and re-appended. Every fold-block boundary is recorded as a
/// barrier.
Circuit fold_global(const Circuit& circuit, double scale_factor);

struct BarrierInsertion {
  Circuit circuit;
  std::size_t layers_inserted = 0;
  bool missing_boundaries = false;  // input had no barrier metadata; no-op
};

/// At every recorded boundary inserts RX(a) RY(b) RZ(c) on each qubit with
/// a, b, c drawn uniformly from {+angle_magnitude, -angle_magnitude}.
BarrierInsertion insert_rotation_barriers(const Circuit& folded, double angle_magnitude, Rng& rng);

/// Removes adjacent inverse pairs until a fixed point is reached. Two gates
/// are adjacent when no remaining gate between them touches any of their
/// qubits. Rotations are never cancelled.
Circuit cancel_inverses(const Circuit& circuit);

}  // namespace qembench

#endif  // QEMBENCH_TRANSFORMS_H_
