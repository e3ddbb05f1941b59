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

#ifndef QIMF_IMAGE_H
#define QIMF_IMAGE_H

#include <cstddef>
#include <span>
#include <vector>

namespace qimf {

/// Grayscale image with power-of-two dimensions and pixels in [0, 1], stored
/// row-major. `rows` is N1 (index i), `cols` is N2 (index j).
class ImageBuffer {
 public:
  ImageBuffer(std::size_t rows, std::size_t cols, std::vector<double> pixels);
  ImageBuffer(std::size_t rows, std::size_t cols, double fill = 0.0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int n1() const;
  int n2() const;
  std::size_t size() const { return pixels_.size(); }

  double operator()(std::size_t i, std::size_t j) const { return pixels_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> pixels() const { return pixels_; }

  bool operator==(const ImageBuffer &) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> pixels_;
};

}  // namespace qimf

#endif  // QIMF_IMAGE_H
