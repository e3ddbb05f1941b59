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

#include "qimf/state.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qimf/error.h"
#include "qimf/kernels.h"

namespace qimf {

namespace {

void check_dims(std::size_t length, int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > 40) {
    throw Error(ErrorCode::kDimensionMismatch, "register sizes out of range");
  }
  if (length != (std::size_t{1} << (n1 + n2))) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + std::to_string(length) + " amplitudes for " +
                    std::to_string(n1 + n2) + " qubits");
  }
}

void check_same_shape(const StateVector &a, const StateVector &b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::kDimensionMismatch, "dimension mismatch");
}

}  // namespace

StateVector::Normalized StateVector::from_values(std::span<const Complex> values, int n1,
                                                 int n2) {
  check_dims(values.size(), n1, n2);
  const double m = kernels::omp::norm_sq(values);
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::kUnnormalizable, "unnormalizable: zero vector");
  }
  std::vector<Complex> amps(values.begin(), values.end());
  kernels::omp::scale(amps, 1.0 / std::sqrt(m));
  return {StateVector(std::move(amps), n1, n2), m};
}

StateVector StateVector::basis(std::uint64_t index, int n1, int n2) {
  const std::size_t n = std::size_t{1} << (n1 + n2);
  if (index >= n) throw Error(ErrorCode::kOutOfRange, "basis index out of range");
  std::vector<Complex> amps(n, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(std::move(amps), n1, n2);
}

StateVector StateVector::adopt(std::vector<Complex> amplitudes, int n1, int n2) {
  check_dims(amplitudes.size(), n1, n2);
  const double m = kernels::omp::norm_sq(amplitudes);
  if (std::abs(m - 1.0) > kNormTolerance * 10.0) {
    throw Error(ErrorCode::kUnnormalizable,
                "amplitudes are not normalized (norm^2 = " + std::to_string(m) + ")");
  }
  return StateVector(std::move(amplitudes), n1, n2);
}

Complex inner_product(const StateVector &a, const StateVector &b) {
  check_same_shape(a, b);
  return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

StateVector apply_rank_one_phase(const StateVector &state, const StateVector &axis, double theta,
                                 PhaseSign sign) {
  check_same_shape(state, axis);
  const double s = sign == PhaseSign::kPlus ? theta : -theta;
  const Complex overlap = kernels::omp::inner_product(axis.amplitudes(), state.amplitudes());
  const Complex coeff = -(1.0 - std::polar(1.0, s)) * overlap;
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  kernels::omp::axpy(coeff, axis.amplitudes(), out);
  return StateVector::adopt(std::move(out), state.n1(), state.n2());
}

StateVector apply_diagonal_phase(const StateVector &state, std::span<const std::uint8_t> mask,
                                 double phase_in, double phase_out) {
  if (mask.size() != state.size()) throw Error(ErrorCode::kDimensionMismatch, "mask length");
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  kernels::omp::diagonal_phase(out, mask, std::polar(1.0, phase_in), std::polar(1.0, phase_out));
  return StateVector::adopt(std::move(out), state.n1(), state.n2());
}

double global_phase_distance(const StateVector &a, const StateVector &b) {
  // Equals sqrt(2 - 2|<a|b>|), but that form loses half the digits near zero,
  // so the aligned difference is summed explicitly.
  const Complex overlap = inner_product(a, b);
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? std::conj(overlap) / mag : Complex{1.0, 0.0};
  std::vector<Complex> diff(a.amplitudes().begin(), a.amplitudes().end());
  kernels::omp::axpy(-phase, b.amplitudes(), diff);
  return std::sqrt(kernels::omp::norm_sq(diff));
}

double fidelity(const StateVector &a, const StateVector &b) {
  return std::norm(inner_product(a, b));
}

}  // namespace qimf
