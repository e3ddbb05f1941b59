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

#ifndef QIMF_PGM_H
#define QIMF_PGM_H

#include <filesystem>
#include <string>

#include "qimf/image.h"

namespace qimf {

/// Reads P2 (ASCII) or P5 (binary, 8- or 16-bit big-endian) graymaps. Pixel
/// values become p / maxval. Dimensions must be powers of two.
ImageBuffer read_pgm(const std::filesystem::path &path);
ImageBuffer parse_pgm(const std::string &bytes);

/// Always P5, maxval 255, round half up.
void write_pgm(const ImageBuffer &image, const std::filesystem::path &path);
std::string format_pgm(const ImageBuffer &image);

}  // namespace qimf

#endif  // QIMF_PGM_H
