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

#include "qimf/encoding.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "qimf/error.h"
#include "test_util.h"

namespace qimf {
namespace {

constexpr double kTol = 1e-10;

std::vector<Complex> direct_uniform(std::uint64_t c, int n) {
  std::vector<Complex> v(std::size_t{1} << n, Complex(0.0));
  for (std::uint64_t j = 0; j <= c; ++j) v[j] = 1.0 / std::sqrt(static_cast<double>(c + 1));
  return v;
}

TEST(EncodeImage, Examples) {
  const auto top = encode_image(ImageBuffer(2, 2, {1, 1, 0, 0}));
  EXPECT_DOUBLE_EQ(top.norm_sq, 2.0);
  EXPECT_NEAR(top.state[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(top.state[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(top.state[2], Complex(0.0));

  const auto corner = encode_image(ImageBuffer(2, 2, {1, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(corner.norm_sq, 1.0);
  EXPECT_EQ(corner.state[0], Complex(1.0));
}

TEST(EncodeImage, RowRampMatchesDirectSum) {
  ImageBuffer img(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) img.set(i, j, static_cast<double>(i) / 3.0);
  double m = 0.0;
  for (double p : img.pixels()) m += p * p;
  const auto enc = encode_image(img);
  EXPECT_NEAR(enc.norm_sq, m, 1e-14);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(enc.state[i * 4 + j].real(), img(i, j) / std::sqrt(m), 1e-15);
}

TEST(EncodeImage, AllZeroIsUnnormalizable) {
  try {
    encode_image(ImageBuffer(4, 4, 0.0));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnnormalizable);
  }
}

TEST(DecodeState, RoundTripUpToScale) {
  std::mt19937_64 rng(21);
  const ImageBuffer img = testing::random_image(rng, 8, 16);
  const ImageBuffer back = decode_state(encode_image(img).state);
  const double peak = *std::max_element(img.pixels().begin(), img.pixels().end());
  for (std::size_t k = 0; k < img.size(); ++k) {
    EXPECT_NEAR(back.pixels()[k], img.pixels()[k] / peak, 1e-12);
  }
}

TEST(DecodeState, BasisAndPhaseDiscarded) {
  const ImageBuffer img = decode_state(StateVector::basis(0, 1, 1));
  EXPECT_EQ(img, ImageBuffer(2, 2, {1, 0, 0, 0}));
  const std::vector<Complex> v{Complex(0, 1), Complex(-0.5, 0), 0, 0};
  const ImageBuffer phased = decode_state(StateVector::from_values(v, 1, 1).state);
  EXPECT_NEAR(phased(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(phased(0, 1), 0.5, 1e-15);
}

TEST(IntervalPartition, Examples) {
  using B = IntervalBlock;
  EXPECT_EQ(interval_partition(5).blocks, (std::vector<B>{{0, 4}, {4, 1}, {5, 1}}));
  EXPECT_EQ(interval_partition(7).blocks, (std::vector<B>{{0, 4}, {4, 2}, {6, 1}, {7, 1}}));
  EXPECT_EQ(interval_partition(0).blocks, (std::vector<B>{{0, 1}}));
}

TEST(IntervalPartition, CoversContiguouslyWithLogarithmicBlockCount) {
  for (std::uint64_t c = 0; c <= 1024; ++c) {
    const IntervalPartition p = interval_partition(c);
    std::uint64_t next = 0;
    std::uint64_t total = 0;
    for (const IntervalBlock &b : p.blocks) {
      ASSERT_EQ(b.start, next) << "C=" << c;
      ASSERT_TRUE(std::has_single_bit(b.size)) << "C=" << c;
      next += b.size;
      total += b.size;
    }
    ASSERT_EQ(total, c + 1);
    ASSERT_EQ(p.blocks.size(), static_cast<std::size_t>(std::popcount(c)) + 1);
    if (c >= 1) {
      const std::size_t bound = static_cast<std::size_t>(std::bit_width(c));  // floor(log2 C) + 1
      ASSERT_LE(p.blocks.size(), bound + 1) << "C=" << c;
      // The tighter bound holds unless every digit of C is 1.
      if (!std::has_single_bit(c + 1)) {
        ASSERT_LE(p.blocks.size(), bound) << "C=" << c;
      }
    }
  }
}

TEST(RotationAngles, Examples) {
  const auto one = rotation_angles(interval_partition(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0], std::numbers::pi / 2.0, 1e-15);

  const auto five = rotation_angles(interval_partition(5));
  ASSERT_EQ(five.size(), 2u);
  EXPECT_NEAR(five[0], 2.0 * std::acos(std::sqrt(4.0 / 6.0)), 1e-15);
  EXPECT_NEAR(five[1], 2.0 * std::acos(std::sqrt(1.0 / 2.0)), 1e-15);

  EXPECT_TRUE(rotation_angles(interval_partition(0)).empty());
  for (std::uint64_t c = 0; c < 200; ++c) {
    for (double a : rotation_angles(interval_partition(c))) {
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, std::numbers::pi);
    }
  }
}

TEST(PrepareUniformRange, Examples) {
  const StateVector full = prepare_uniform_range(7, 3);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(full[k].real(), 1.0 / std::sqrt(8.0), kTol);
  const StateVector zero = prepare_uniform_range(0, 3);
  EXPECT_LT(testing::max_abs_diff(zero.amplitudes(), StateVector::basis(0, 3, 0).amplitudes()), kTol);
  const StateVector five = prepare_uniform_range(5, 3);
  EXPECT_LT(testing::max_abs_diff(five.amplitudes(), direct_uniform(5, 3)), kTol);
  EXPECT_NEAR(std::abs(five[6]), 0.0, kTol);
  EXPECT_NEAR(std::abs(five[7]), 0.0, kTol);
}

TEST(PrepareUniformRange, EqualsDirectStateForAllSmallC) {
  for (std::uint64_t c = 0; c < 64; ++c) {
    const int n = std::max(1, static_cast<int>(std::bit_width(c)));
    EXPECT_LT(testing::max_abs_diff(prepare_uniform_range(c, n).amplitudes(), direct_uniform(c, n)),
              kTol)
        << "C=" << c;
    // Padding qubits above the minimal width stay |0>.
    EXPECT_LT(testing::max_abs_diff(prepare_uniform_range(c, n + 2).amplitudes(),
                                    direct_uniform(c, n + 2)),
              kTol);
  }
}

TEST(PrepareUniformRange, RejectsOutOfRange) {
  try {
    prepare_uniform_range(8, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(UniformRangeCircuit, UsesOneRotationPerSetDigit) {
  const Circuit c = uniform_range_circuit(0b101101, 6);
  const EncoderCost cost = circuit_cost(c);
  EXPECT_EQ(cost.rotations, 4u);
  // Hadamards cover the free digits below each set digit: 5 + 3 + 2 + 0.
  EXPECT_EQ(cost.hadamards, 10u);
}

TEST(ModularShift, Examples) {
  std::mt19937_64 rng(22);
  const StateVector psi = testing::random_state(rng, 2, 2);
  EXPECT_EQ(testing::max_abs_diff(modular_shift(psi, 0, 0).amplitudes(), psi.amplitudes()), 0.0);
  EXPECT_EQ(testing::max_abs_diff(modular_shift(psi, 4, 4).amplitudes(), psi.amplitudes()), 0.0);
  const StateVector moved = modular_shift(StateVector::basis(0, 2, 2), 1, 2);
  EXPECT_EQ(moved[6], Complex(1.0));
  const StateVector back = modular_shift(moved, -1, -2);
  EXPECT_EQ(back[0], Complex(1.0));
}

TEST(ModularShift, PreservesAmplitudeMultisetExactly) {
  std::mt19937_64 rng(23);
  const StateVector psi = testing::random_state(rng, 3, 4);
  const StateVector moved = modular_shift(psi, 5, 11);
  auto key = [](const Complex &a, const Complex &b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::vector<Complex> a(psi.amplitudes().begin(), psi.amplitudes().end());
  std::vector<Complex> b(moved.amplitudes().begin(), moved.amplitudes().end());
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  EXPECT_EQ(a, b);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      EXPECT_EQ(moved[((i + 5) % 8) * 16 + (j + 11) % 16], psi[i * 16 + j]);
}

TEST(PrepareRectangle, Examples) {
  const StateVector block = prepare_rectangle({1, 1, 0, 0, 2, 2});
  for (std::size_t k : {0u, 1u, 4u, 5u}) EXPECT_NEAR(block[k].real(), 0.5, kTol);
  EXPECT_NEAR(testing::max_abs_diff(block.amplitudes(),
                                    encode_image(rasterize_rectangle({1, 1, 0, 0, 2, 2})).state.amplitudes()),
              0.0, kTol);

  const StateVector pixel = prepare_rectangle({0, 0, 2, 3, 2, 2});
  EXPECT_LT(testing::max_abs_diff(pixel.amplitudes(), StateVector::basis(2 * 4 + 3, 2, 2).amplitudes()),
            kTol);
}

TEST(PrepareRectangle, MatchesDenseEncodingOnRandomSpecs) {
  std::mt19937_64 rng(24);
  for (int n : {4, 6}) {
    const std::size_t side = std::size_t{1} << n;
    for (int trial = 0; trial < 100; ++trial) {
      RectangleSpec spec;
      spec.n1 = spec.n2 = n;
      spec.w = std::uniform_int_distribution<std::size_t>(0, side - 1)(rng);
      spec.h = std::uniform_int_distribution<std::size_t>(0, side - 1)(rng);
      spec.x1 = std::uniform_int_distribution<std::size_t>(0, side - 1 - spec.w)(rng);
      spec.y1 = std::uniform_int_distribution<std::size_t>(0, side - 1 - spec.h)(rng);
      const auto dense = encode_image(rasterize_rectangle(spec)).state;
      ASSERT_LT(testing::max_abs_diff(prepare_rectangle(spec).amplitudes(), dense.amplitudes()), kTol)
          << "w=" << spec.w << " h=" << spec.h << " x1=" << spec.x1 << " y1=" << spec.y1;
    }
  }
}

TEST(PrepareRectangle, FullScaleReferenceGeometry) {
  const RectangleSpec spec{50, 50, 103, 103, 8, 8};
  const auto dense = encode_image(rasterize_rectangle(spec));
  EXPECT_DOUBLE_EQ(dense.norm_sq, 51.0 * 51.0);
  EXPECT_LT(testing::max_abs_diff(prepare_rectangle(spec).amplitudes(), dense.state.amplitudes()), kTol);
}

TEST(PrepareRectangle, NonSquareFrame) {
  const RectangleSpec spec{2, 9, 1, 5, 2, 4};
  const auto dense = encode_image(rasterize_rectangle(spec)).state;
  EXPECT_LT(testing::max_abs_diff(prepare_rectangle(spec).amplitudes(), dense.amplitudes()), kTol);
}

TEST(PrepareRectangle, OutOfFrame) {
  try {
    prepare_rectangle({3, 0, 1, 0, 2, 2});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(RectangleEncoderCost, GrowsPolynomiallyInQubits) {
  // Rectangles scaled with the frame: side N, w = h = N/5, placed at N/3.
  std::vector<double> log_n, log_cost;
  for (int n : {4, 6, 8, 10}) {
    const std::size_t side = std::size_t{1} << n;
    const RectangleSpec spec{side / 5, side / 5, side / 3, side / 3, n, n};
    const double qubits = 2.0 * n;
    log_n.push_back(std::log(qubits));
    log_cost.push_back(std::log(static_cast<double>(rectangle_encoder_cost(spec).total())));
  }
  for (std::size_t k = 1; k < log_n.size(); ++k) {
    const double slope = (log_cost[k] - log_cost[k - 1]) / (log_n[k] - log_n[k - 1]);
    EXPECT_LE(slope, 3.0) << "segment " << k;
  }
}

}  // namespace
}  // namespace qimf
