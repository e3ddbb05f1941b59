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

#include "qimf/kernels.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "qimf/error.h"

namespace qimf::kernels {

FftPlan::FftPlan(std::size_t n) : n_(n), log2n_(0) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw Error(ErrorCode::kInvalidArgument, "fft length must be a power of two");
  }
  log2n_ = static_cast<std::size_t>(std::countr_zero(n));
  twiddles_.resize(n / 2);
  // Each entry is evaluated directly; a running product would drift at large n.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
  }
  bit_reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = 0;
    for (std::size_t b = 0; b < log2n_; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::uint32_t{1} << (log2n_ - 1 - b);
    }
    bit_reverse_[i] = r;
  }
}

void FftPlan::execute(Complex *data, std::size_t stride, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i * stride], data[j * stride]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * step];
        if (inverse) w = std::conj(w);
        Complex &a = data[(start + k) * stride];
        Complex &b = data[(start + k + half) * stride];
        const Complex t = w * b;
        b = a - t;
        a += t;
      }
    }
  }
}

namespace serial {

double norm_sq(std::span<const Complex> x) {
  double acc = 0.0;
  for (const Complex &c : x) acc += std::norm(c);
  return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double masked_norm_sq(std::span<const Complex> x, std::span<const std::uint8_t> mask) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (mask[k]) acc += std::norm(x[k]);
  }
  return acc;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

void scale(std::span<Complex> x, Complex factor) {
  for (Complex &c : x) c *= factor;
}

void diagonal_phase(std::span<Complex> x, std::span<const std::uint8_t> mask, Complex in,
                    Complex out) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] *= mask[k] ? in : out;
}

void fft_rows(std::span<Complex> grid, std::size_t rows, std::size_t cols, const FftPlan &plan,
              bool inverse) {
  for (std::size_t r = 0; r < rows; ++r) plan.execute(grid.data() + r * cols, 1, inverse);
}

void fft_cols(std::span<Complex> grid, std::size_t /*rows*/, std::size_t cols,
              const FftPlan &plan, bool inverse) {
  for (std::size_t c = 0; c < cols; ++c) plan.execute(grid.data() + c, cols, inverse);
}

void region_mask(std::span<std::uint8_t> mask, std::size_t rows, std::size_t cols,
                 std::int64_t lo_sq, std::int64_t hi_sq) {
  for (std::size_t u = 0; u < rows; ++u) {
    for (std::size_t v = 0; v < cols; ++v) {
      const std::int64_t d = corner_distance_sq(u, v, rows, cols);
      mask[u * cols + v] = (d >= lo_sq && d <= hi_sq) ? 1 : 0;
    }
  }
}

void modular_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t rows,
                   std::size_t cols, std::size_t drow, std::size_t dcol) {
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t ti = (i + drow) & (rows - 1);
    for (std::size_t j = 0; j < cols; ++j) {
      out[ti * cols + ((j + dcol) & (cols - 1))] = in[i * cols + j];
    }
  }
}

void apply_gate(std::span<Complex> x, unsigned target, std::uint64_t control_mask,
                std::uint64_t control_values, const Mat2 &m) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t k = 0; k < x.size(); ++k) {
    if (k & bit) continue;
    if ((k & control_mask) != control_values) continue;
    const Complex a0 = x[k];
    const Complex a1 = x[k | bit];
    x[k] = m[0] * a0 + m[1] * a1;
    x[k | bit] = m[2] * a0 + m[3] * a1;
  }
}

}  // namespace serial
}  // namespace qimf::kernels
