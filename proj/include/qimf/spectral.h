// Copyright 2026 The qimf Authors
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

#ifndef QIMF_SPECTRAL_H
#define QIMF_SPECTRAL_H

#include <cstddef>
#include <span>

#include "qimf/state.h"

namespace qimf {

/// Unitary 2D transform with kernel (1/sqrt(N1 N2)) e^{+2 pi i (u i / N1 + v j / N2)}.
/// Output is in natural frequency order.
StateVector qft2d(const StateVector &state);
StateVector iqft2d(const StateVector &state);

enum class Direction { kForward, kInverse };

/// Same transform applied in place to a raw rows x cols grid (no norm check).
void transform2d(std::span<Complex> grid, std::size_t rows, std::size_t cols, Direction dir);

struct QftGateCounts {
  std::size_t hadamards = 0;
  std::size_t controlled_phases = 0;
  std::size_t swaps = 0;

  std::size_t total() const { return hadamards + controlled_phases + swaps; }
  bool operator==(const QftGateCounts &) const = default;
};

/// Textbook circuit: m Hadamards, m(m-1)/2 controlled phases and floor(m/2)
/// swaps per m-qubit register, summed over both registers.
QftGateCounts qft_gate_counts(int n1, int n2);

}  // namespace qimf

#endif  // QIMF_SPECTRAL_H
