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

#ifndef QIMF_STATE_H
#define QIMF_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qimf {

using Complex = std::complex<double>;

/// One flag per basis index; nonzero means the index is marked.
using BasisMask = std::vector<std::uint8_t>;

inline constexpr double kNormTolerance = 1e-10;

/// Normalized amplitude vector over a two-register system. The row register
/// holds the high n1 bits of the basis index, so k = i * 2^n2 + j.
class StateVector {
 public:
  struct Normalized;

  /// Normalizes `values` and also returns the squared norm M.
  static Normalized from_values(std::span<const Complex> values, int n1, int n2);
  static StateVector basis(std::uint64_t index, int n1, int n2);
  /// Takes ownership of amplitudes that must already have unit norm.
  static StateVector adopt(std::vector<Complex> amplitudes, int n1, int n2);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int num_qubits() const { return n1_ + n2_; }
  std::size_t rows() const { return std::size_t{1} << n1_; }
  std::size_t cols() const { return std::size_t{1} << n2_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex &operator[](std::size_t k) const { return amplitudes_[k]; }

  bool same_shape(const StateVector &other) const {
    return n1_ == other.n1_ && n2_ == other.n2_;
  }

 private:
  StateVector(std::vector<Complex> amplitudes, int n1, int n2)
      : amplitudes_(std::move(amplitudes)), n1_(n1), n2_(n2) {}

  std::vector<Complex> amplitudes_;
  int n1_;
  int n2_;
};

struct StateVector::Normalized {
  StateVector state;
  double norm_sq;  // M
};

enum class PhaseSign { kPlus, kMinus };

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector &a, const StateVector &b);

/// (I - (1 - e^{+-i theta}) |axis><axis|) state.
StateVector apply_rank_one_phase(const StateVector &state, const StateVector &axis, double theta,
                                 PhaseSign sign);

/// Multiplies amplitude k by e^{i phase_in} where mask[k] is set, e^{i phase_out} elsewhere.
StateVector apply_diagonal_phase(const StateVector &state, std::span<const std::uint8_t> mask,
                                 double phase_in, double phase_out);

/// min over phi of || a - e^{i phi} b ||.
double global_phase_distance(const StateVector &a, const StateVector &b);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

}  // namespace qimf

#endif  // QIMF_STATE_H
