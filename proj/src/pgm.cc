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

#include "qimf/pgm.h"

#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qimf/error.h"

namespace qimf {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::string &bytes) : bytes_(bytes) {}

  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
           bytes_[pos_] != '#') {
      out.push_back(bytes_[pos_++]);
    }
    if (out.empty()) throw Error(ErrorCode::kFormat, "malformed PGM header: truncated");
    return out;
  }

  long number() {
    const std::string t = token();
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kFormat, "malformed PGM header: expected integer, got '" + t + "'");
      }
    }
    if (t.size() > 9) throw Error(ErrorCode::kFormat, "malformed PGM header: value too large");
    return std::stol(t);
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string &bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer parse_pgm(const std::string &bytes) {
  HeaderReader reader(bytes);
  const std::string magic = reader.token();
  if (magic != "P2" && magic != "P5") {
    throw Error(ErrorCode::kFormat, "not a PGM file (magic '" + magic + "')");
  }
  const long width = reader.number();
  const long height = reader.number();
  const long maxval = reader.number();
  if (width <= 0 || height <= 0) throw Error(ErrorCode::kFormat, "PGM dimensions must be positive");
  if (maxval <= 0 || maxval > 65535) throw Error(ErrorCode::kFormat, "PGM maxval out of range");
  const auto rows = static_cast<std::size_t>(height);
  const auto cols = static_cast<std::size_t>(width);
  if (rows < 2 || cols < 2 || !std::has_single_bit(rows) || !std::has_single_bit(cols)) {
    throw Error(ErrorCode::kFormat, "PGM is " + std::to_string(width) + "x" +
                                        std::to_string(height) +
                                        ": dimensions must be powers of two; pad or crop required");
  }

  std::vector<double> pixels(rows * cols);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (magic == "P2") {
    for (double &p : pixels) {
      const long v = reader.number();
      if (v > maxval) throw Error(ErrorCode::kFormat, "PGM sample exceeds maxval");
      p = static_cast<double>(v) * scale;
    }
  } else {
    reader.advance(1);  // single whitespace byte after maxval
    const std::size_t width_bytes = maxval < 256 ? 1 : 2;
    if (bytes.size() < reader.pos() + pixels.size() * width_bytes) {
      throw Error(ErrorCode::kFormat, "PGM raster truncated");
    }
    const auto *data = reinterpret_cast<const unsigned char *>(bytes.data() + reader.pos());
    for (std::size_t k = 0; k < pixels.size(); ++k) {
      long v = data[k * width_bytes];
      if (width_bytes == 2) v = (v << 8) | data[k * 2 + 1];
      if (v > maxval) throw Error(ErrorCode::kFormat, "PGM sample exceeds maxval");
      pixels[k] = static_cast<double>(v) * scale;
    }
  }
  return ImageBuffer(rows, cols, std::move(pixels));
}

ImageBuffer read_pgm(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading " + path.string());
  return parse_pgm(buffer.str());
}

std::string format_pgm(const ImageBuffer &image) {
  std::string out = "P5\n" + std::to_string(image.cols()) + " " + std::to_string(image.rows()) +
                    "\n255\n";
  out.reserve(out.size() + image.size());
  for (double p : image.pixels()) {
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::floor(p * 255.0 + 0.5))));
  }
  return out;
}

void write_pgm(const ImageBuffer &image, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  const std::string bytes = format_pgm(image);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

}  // namespace qimf
