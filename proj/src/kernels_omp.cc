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

#include <vector>

#include "qimf/kernels.h"

namespace qimf::kernels::omp {

namespace {
// Below this many elements the thread team costs more than the loop.
constexpr std::int64_t kParallelThreshold = 1 << 12;

std::int64_t ssize(std::size_t n) { return static_cast<std::int64_t>(n); }
}  // namespace

double norm_sq(std::span<const Complex> x) {
  const std::int64_t n = ssize(x.size());
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) acc += std::norm(x[k]);
  return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  const std::int64_t n = ssize(a.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) {
    const Complex p = std::conj(a[k]) * b[k];
    re += p.real();
    im += p.imag();
  }
  return {re, im};
}

double masked_norm_sq(std::span<const Complex> x, std::span<const std::uint8_t> mask) {
  const std::int64_t n = ssize(x.size());
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) {
    if (mask[k]) acc += std::norm(x[k]);
  }
  return acc;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const std::int64_t n = ssize(x.size());
#pragma omp parallel for simd schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void scale(std::span<Complex> x, Complex factor) {
  const std::int64_t n = ssize(x.size());
#pragma omp parallel for simd schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) x[k] *= factor;
}

void diagonal_phase(std::span<Complex> x, std::span<const std::uint8_t> mask, Complex in,
                    Complex out) {
  const std::int64_t n = ssize(x.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) x[k] *= mask[k] ? in : out;
}

void fft_rows(std::span<Complex> grid, std::size_t rows, std::size_t cols, const FftPlan &plan,
              bool inverse) {
  const std::int64_t nrows = ssize(rows);
#pragma omp parallel for schedule(static) if (ssize(grid.size()) > kParallelThreshold)
  for (std::int64_t r = 0; r < nrows; ++r) plan.execute(grid.data() + r * cols, 1, inverse);
}

void fft_cols(std::span<Complex> grid, std::size_t rows, std::size_t cols, const FftPlan &plan,
              bool inverse) {
  const std::int64_t ncols = ssize(cols);
  // Strided columns thrash the cache; each thread transforms a contiguous copy.
#pragma omp parallel if (ssize(grid.size()) > kParallelThreshold)
  {
    std::vector<Complex> column(rows);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < ncols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) column[r] = grid[r * cols + c];
      plan.execute(column.data(), 1, inverse);
      for (std::size_t r = 0; r < rows; ++r) grid[r * cols + c] = column[r];
    }
  }
}

void region_mask(std::span<std::uint8_t> mask, std::size_t rows, std::size_t cols,
                 std::int64_t lo_sq, std::int64_t hi_sq) {
  const std::int64_t nrows = ssize(rows);
#pragma omp parallel for schedule(static) if (ssize(mask.size()) > kParallelThreshold)
  for (std::int64_t u = 0; u < nrows; ++u) {
    for (std::size_t v = 0; v < cols; ++v) {
      const std::int64_t d = corner_distance_sq(u, v, rows, cols);
      mask[u * cols + v] = (d >= lo_sq && d <= hi_sq) ? 1 : 0;
    }
  }
}

void modular_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t rows,
                   std::size_t cols, std::size_t drow, std::size_t dcol) {
  const std::int64_t nrows = ssize(rows);
#pragma omp parallel for schedule(static) if (ssize(in.size()) > kParallelThreshold)
  for (std::int64_t i = 0; i < nrows; ++i) {
    const std::size_t ti = (i + drow) & (rows - 1);
    for (std::size_t j = 0; j < cols; ++j) {
      out[ti * cols + ((j + dcol) & (cols - 1))] = in[i * cols + j];
    }
  }
}

void apply_gate(std::span<Complex> x, unsigned target, std::uint64_t control_mask,
                std::uint64_t control_values, const Mat2 &m) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  const std::uint64_t low = bit - 1;
  const std::int64_t pairs = ssize(x.size() / 2);
  // Enumerate pair index p by inserting a zero at the target bit.
#pragma omp parallel for schedule(static) if (pairs > kParallelThreshold)
  for (std::int64_t p = 0; p < pairs; ++p) {
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    const std::uint64_t k = ((up & ~low) << 1) | (up & low);
    if ((k & control_mask) != control_values) continue;
    const Complex a0 = x[k];
    const Complex a1 = x[k | bit];
    x[k] = m[0] * a0 + m[1] * a1;
    x[k | bit] = m[2] * a0 + m[3] * a1;
  }
}

}  // namespace qimf::kernels::omp
