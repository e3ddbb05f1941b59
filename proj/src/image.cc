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

#include "qimf/image.h"

#include <bit>
#include <string>

#include "qimf/error.h"

namespace qimf {

namespace {

void check_extent(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2 || !std::has_single_bit(rows) || !std::has_single_bit(cols)) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be powers of two >= 2 (got " + std::to_string(rows) +
                    "x" + std::to_string(cols) + "); pad or crop required");
  }
}

void check_pixel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "pixel value outside [0, 1]");
  }
}

}  // namespace

ImageBuffer::ImageBuffer(std::size_t rows, std::size_t cols, std::vector<double> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  check_extent(rows, cols);
  if (pixels_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "pixel count does not match dimensions");
  }
  for (double p : pixels_) check_pixel(p);
}

ImageBuffer::ImageBuffer(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), pixels_(rows * cols, fill) {
  check_extent(rows, cols);
  check_pixel(fill);
}

int ImageBuffer::n1() const { return std::countr_zero(rows_); }
int ImageBuffer::n2() const { return std::countr_zero(cols_); }

void ImageBuffer::set(std::size_t i, std::size_t j, double value) {
  check_pixel(value);
  pixels_.at(i * cols_ + j) = value;
}

}  // namespace qimf
