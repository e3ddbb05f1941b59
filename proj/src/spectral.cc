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

#include "qimf/spectral.h"

#include <cmath>
#include <vector>

#include "qimf/error.h"
#include "qimf/kernels.h"

namespace qimf {

void transform2d(std::span<Complex> grid, std::size_t rows, std::size_t cols, Direction dir) {
  if (grid.size() != rows * cols) throw Error(ErrorCode::kDimensionMismatch, "grid size");
  const bool inverse = dir == Direction::kInverse;
  if (cols > 1) kernels::omp::fft_rows(grid, rows, cols, kernels::FftPlan(cols), inverse);
  if (rows > 1) kernels::omp::fft_cols(grid, rows, cols, kernels::FftPlan(rows), inverse);
  kernels::omp::scale(grid, Complex{1.0 / std::sqrt(static_cast<double>(rows * cols)), 0.0});
}

namespace {

StateVector transform_state(const StateVector &state, Direction dir) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  transform2d(amps, state.rows(), state.cols(), dir);
  return StateVector::adopt(std::move(amps), state.n1(), state.n2());
}

}  // namespace

StateVector qft2d(const StateVector &state) { return transform_state(state, Direction::kForward); }

StateVector iqft2d(const StateVector &state) { return transform_state(state, Direction::kInverse); }

QftGateCounts qft_gate_counts(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::kInvalidArgument, "register sizes must be >= 1");
  QftGateCounts counts;
  for (int m : {n1, n2}) {
    const auto mm = static_cast<std::size_t>(m);
    counts.hadamards += mm;
    counts.controlled_phases += mm * (mm - 1) / 2;
    counts.swaps += mm / 2;
  }
  return counts;
}

}  // namespace qimf
