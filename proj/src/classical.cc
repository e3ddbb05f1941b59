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

#include "qimf/classical.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "qimf/encoding.h"
#include "qimf/error.h"
#include "qimf/spectral.h"

namespace qimf {

namespace {

void check_frame(const ImageBuffer &image, const RegionSpec &spec) {
  if (image.rows() != spec.rows() || image.cols() != spec.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "region frame does not match image");
  }
}

}  // namespace

ImageBuffer ideal_bandpass_filter(const ImageBuffer &image, const RegionSpec &spec) {
  check_frame(image, spec);
  std::vector<Complex> grid(image.pixels().begin(), image.pixels().end());
  transform2d(grid, image.rows(), image.cols(), Direction::kForward);
  const BasisMask mask = region_mask(spec);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!mask[k]) grid[k] = 0.0;
  }
  transform2d(grid, image.rows(), image.cols(), Direction::kInverse);

  std::vector<double> pixels(grid.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    pixels[k] = std::abs(grid[k]);
    peak = std::max(peak, pixels[k]);
  }
  // Anything at rounding level is an empty band, not signal.
  if (peak <= 1e-12 * std::sqrt(static_cast<double>(grid.size()))) {
    std::fill(pixels.begin(), pixels.end(), 0.0);
  } else {
    for (double &p : pixels) p = std::min(1.0, p / peak);
  }
  return ImageBuffer(image.rows(), image.cols(), std::move(pixels));
}

StateVector reference_state(const ImageBuffer &image, const RegionSpec &spec) {
  check_frame(image, spec);
  const StateVector freq = qft2d(encode_image(image).state);
  return iqft2d(target_state(freq, region_mask(spec)));
}

double mse(const ImageBuffer &a, const ImageBuffer &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "image dimensions differ");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a.pixels()[k] - b.pixels()[k];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double psnr(const ImageBuffer &a, const ImageBuffer &b) {
  const double e = mse(a, b);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / e);
}

ClassicalOpCount classical_op_count(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  const auto log2n = static_cast<std::size_t>(std::bit_width(n) - 1);
  return {n * log2n, n};
}

}  // namespace qimf
