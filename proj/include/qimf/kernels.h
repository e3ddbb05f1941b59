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

#ifndef QIMF_KERNELS_H
#define QIMF_KERNELS_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Low-level amplitude kernels. Every kernel exists twice with the same
// signature: `serial` is the plain reference loop kept for testing, `omp`
// is the OpenMP-parallel version used by the public API. Both must agree to
// rounding on identical inputs (tests/kernels_test.cc).

namespace qimf::kernels {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2

/// Twiddle table for a radix-2 transform of length n with kernel e^{+2 pi i k / n}.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t log2_size() const { return log2n_; }
  /// e^{+2 pi i k / n} for k < n/2.
  std::span<const Complex> twiddles() const { return twiddles_; }

  /// In-place unnormalized transform of `n` elements spaced `stride` apart.
  /// `inverse` conjugates the kernel.
  void execute(Complex *data, std::size_t stride, bool inverse) const;

 private:
  std::size_t n_;
  std::size_t log2n_;
  std::vector<Complex> twiddles_;
  std::vector<std::uint32_t> bit_reverse_;
};

#define QIMF_KERNEL_DECLS                                                                    \
  double norm_sq(std::span<const Complex> x);                                                \
  Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);             \
  double masked_norm_sq(std::span<const Complex> x, std::span<const std::uint8_t> mask);     \
  void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);                \
  void scale(std::span<Complex> x, Complex factor);                                          \
  void diagonal_phase(std::span<Complex> x, std::span<const std::uint8_t> mask, Complex in,  \
                      Complex out);                                                          \
  void fft_rows(std::span<Complex> grid, std::size_t rows, std::size_t cols,                 \
                const FftPlan &plan, bool inverse);                                          \
  void fft_cols(std::span<Complex> grid, std::size_t rows, std::size_t cols,                 \
                const FftPlan &plan, bool inverse);                                          \
  void region_mask(std::span<std::uint8_t> mask, std::size_t rows, std::size_t cols,         \
                   std::int64_t lo_sq, std::int64_t hi_sq);                                  \
  void modular_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t rows,  \
                     std::size_t cols, std::size_t drow, std::size_t dcol);                  \
  void apply_gate(std::span<Complex> x, unsigned target, std::uint64_t control_mask,         \
                  std::uint64_t control_values, const Mat2 &m);

namespace serial {
QIMF_KERNEL_DECLS
}  // namespace serial

namespace omp {
QIMF_KERNEL_DECLS
}  // namespace omp

#undef QIMF_KERNEL_DECLS

/// Squared distance from (u, v) to the nearest of the four zero-frequency
/// corners of a rows x cols frequency grid.
inline std::int64_t corner_distance_sq(std::size_t u, std::size_t v, std::size_t rows,
                                       std::size_t cols) {
  const auto du = static_cast<std::int64_t>(u < rows - u ? u : rows - u);
  const auto dv = static_cast<std::int64_t>(v < cols - v ? v : cols - v);
  return du * du + dv * dv;
}

}  // namespace qimf::kernels

#endif  // QIMF_KERNELS_H
