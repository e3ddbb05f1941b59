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

#ifndef QIMF_CLASSICAL_H
#define QIMF_CLASSICAL_H

#include <cstddef>

#include "qimf/image.h"
#include "qimf/region.h"
#include "qimf/state.h"

namespace qimf {

/// FFT, zero every coefficient outside the region, inverse FFT, modulus,
/// max-rescale. Uses the same transform convention as qft2d. An empty band
/// yields an all-zero image.
ImageBuffer ideal_bandpass_filter(const ImageBuffer &image, const RegionSpec &spec);

/// iqft2d(|t>) for the encoded image: the state an ideal filter run reaches.
StateVector reference_state(const ImageBuffer &image, const RegionSpec &spec);

double mse(const ImageBuffer &a, const ImageBuffer &b);

/// 10 log10(1 / mse); +infinity for identical images.
double psnr(const ImageBuffer &a, const ImageBuffer &b);

struct ClassicalOpCount {
  std::size_t fft_ops = 0;   // N log2 N butterflies
  std::size_t mask_ops = 0;  // one membership test per coefficient
};

ClassicalOpCount classical_op_count(std::size_t rows, std::size_t cols);

}  // namespace qimf

#endif  // QIMF_CLASSICAL_H
