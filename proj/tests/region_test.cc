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

#include "qimf/region.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qimf/error.h"
#include "test_util.h"

namespace qimf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance to the nearest of the four frame corners, evaluated in floating point.
double corner_oracle(std::size_t u, std::size_t v, std::size_t rows, std::size_t cols) {
  const double corners[4][2] = {{0.0, 0.0},
                                {0.0, static_cast<double>(cols)},
                                {static_cast<double>(rows), 0.0},
                                {static_cast<double>(rows), static_cast<double>(cols)}};
  double best = kInf;
  for (const auto &c : corners) {
    best = std::min(best, std::hypot(static_cast<double>(u) - c[0], static_cast<double>(v) - c[1]));
  }
  return best;
}

TEST(ZeroDistance, Examples) {
  EXPECT_EQ(zero_distance(0, 0, 256, 256), 0.0);
  EXPECT_EQ(zero_distance(255, 0, 256, 256), 1.0);
  EXPECT_NEAR(zero_distance(128, 128, 256, 256), 181.019336, 1e-6);
  EXPECT_NEAR(zero_distance(3, 60, 8, 64), std::hypot(3.0, 4.0), 1e-12);
  EXPECT_THROW(zero_distance(256, 0, 256, 256), Error);
}

TEST(InRegion, Examples) {
  const RegionSpec low(0.0, 35.0, 256, 256);
  EXPECT_TRUE(in_region(250, 4, low));
  EXPECT_TRUE(in_region(0, 0, low));
  EXPECT_FALSE(in_region(128, 128, low));
  EXPECT_TRUE(in_region(0, 35, low));
  EXPECT_FALSE(in_region(0, 36, low));
  const RegionSpec band(80.0, 140.0, 256, 256);
  EXPECT_FALSE(in_region(0, 0, band));
  EXPECT_TRUE(in_region(0, 80, band));
  EXPECT_TRUE(in_region(90, 90, band));
  EXPECT_FALSE(in_region(128, 128, band));
}

TEST(RegionSpec, RejectsBadBounds) {
  EXPECT_THROW(RegionSpec(5.0, 4.0, 8, 8), Error);
  EXPECT_THROW(RegionSpec(-1.0, 4.0, 8, 8), Error);
  EXPECT_THROW(RegionSpec(std::nan(""), 4.0, 8, 8), Error);
  EXPECT_THROW(RegionSpec(kInf, kInf, 8, 8), Error);
  EXPECT_NO_THROW(RegionSpec(3.0, kInf, 8, 8));
  try {
    RegionSpec(5.0, 4.0, 8, 8);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(RegionMask, Examples) {
  const BasisMask all = region_mask(RegionSpec(0.0, kInf, 16, 16));
  EXPECT_EQ(std::count(all.begin(), all.end(), 1), 256);
  const BasisMask dc = region_mask(RegionSpec(0.0, 0.0, 16, 16));
  EXPECT_EQ(std::count(dc.begin(), dc.end(), 1), 1);
  EXPECT_EQ(dc[0], 1);
  // d0 = 1 picks the four axis neighbours of each corner image: (0,1),(1,0),(0,15),(15,0).
  const BasisMask ring = region_mask(RegionSpec(1.0, 1.0, 16, 16));
  EXPECT_EQ(std::count(ring.begin(), ring.end(), 1), 4);
  EXPECT_EQ(ring[1], 1);
  EXPECT_EQ(ring[16], 1);
  EXPECT_EQ(ring[15], 1);
  EXPECT_EQ(ring[15 * 16], 1);
}

TEST(RegionMask, FractionalBoundsAreInclusive) {
  const double r2 = std::sqrt(2.0);
  EXPECT_TRUE(in_region(1, 1, RegionSpec(0.0, r2, 8, 8)));
  EXPECT_TRUE(in_region(1, 1, RegionSpec(r2, r2, 8, 8)));
  EXPECT_TRUE(in_region(1, 1, RegionSpec(r2, 2.0, 8, 8)));
  EXPECT_FALSE(in_region(1, 1, RegionSpec(0.0, 1.41, 8, 8)));
  EXPECT_FALSE(in_region(1, 1, RegionSpec(1.42, 2.0, 8, 8)));
}

TEST(RegionMask, ReflectionSymmetry) {
  for (const auto &[d1, d2] : std::vector<std::pair<double, double>>{{0, 5}, {3.5, 20}, {10, 30}, {40, 46}}) {
    const std::size_t n = 64;
    const BasisMask m = region_mask(RegionSpec(d1, d2, n, n));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        const auto at = [&](std::size_t a, std::size_t b) { return m[(a % n) * n + (b % n)]; };
        EXPECT_EQ(at(u, v), at(n - u, v));
        EXPECT_EQ(at(u, v), at(u, n - v));
        EXPECT_EQ(at(u, v), at(v, u));
      }
    }
  }
}

TEST(RegionMask, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pick(0.0, 50.0);
  for (int trial = 0; trial < 40; ++trial) {
    double d1 = pick(rng), d2 = pick(rng);
    if (d1 > d2) std::swap(d1, d2);
    const std::size_t rows = std::size_t{1} << (3 + trial % 4);
    const std::size_t cols = std::size_t{1} << (3 + (trial / 4) % 4);
    const BasisMask m = region_mask(RegionSpec(d1, d2, rows, cols));
    for (std::size_t u = 0; u < rows; ++u) {
      for (std::size_t v = 0; v < cols; ++v) {
        const double d0 = corner_oracle(u, v, rows, cols);
        if (std::abs(d0 - d1) < 1e-9 || std::abs(d0 - d2) < 1e-9) continue;
        EXPECT_EQ(m[u * cols + v] != 0, d1 <= d0 && d0 <= d2) << u << "," << v;
      }
    }
  }
}

TEST(OverlapStats, Examples) {
  const BasisMask mask{1, 0, 0, 0};
  const StateVector uniform = StateVector::from_values(std::vector<Complex>(4, 1.0), 1, 1).state;
  const OverlapStats s = overlap_stats(uniform, mask);
  EXPECT_NEAR(s.lambda, 0.25, 1e-15);
  EXPECT_NEAR(s.lambda_prime, 1.0 / 3.0, 1e-15);
  const OverlapStats scaled = overlap_stats(uniform, mask, 8.0);
  EXPECT_NEAR(scaled.m_d, 2.0, 1e-14);
  EXPECT_NEAR(scaled.m_prime_d, 6.0, 1e-14);
  const OverlapStats full = overlap_stats(uniform, BasisMask(4, 1));
  EXPECT_EQ(full.lambda, 1.0);
  EXPECT_TRUE(std::isinf(full.lambda_prime));
  EXPECT_EQ(overlap_stats(uniform, BasisMask(4, 0)).lambda, 0.0);
  EXPECT_THROW(overlap_stats(uniform, BasisMask(3, 1)), Error);
}

TEST(OverlapStats, Identities) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const StateVector s = testing::random_state(rng, 3, 3);
    const BasisMask mask = testing::random_mask(rng, s.size());
    const double total = 1.0 + trial;
    const OverlapStats st = overlap_stats(s, mask, total);
    EXPECT_NEAR(st.m_d + st.m_prime_d, total, 1e-12 * total);
    EXPECT_NEAR(st.lambda, st.m_d / total, 1e-14);
    EXPECT_NEAR(st.lambda_prime, st.lambda / (1.0 - st.lambda), 1e-10 * (1.0 + st.lambda_prime));
    EXPECT_GE(st.lambda, 0.0);
    EXPECT_LE(st.lambda, 1.0);
  }
}

TEST(TargetState, DecomposesSource) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector s = testing::random_state(rng, 2, 3);
    const BasisMask mask = testing::random_mask(rng, s.size());
    const StateVector t = target_state(s, mask);
    const StateVector c = complement_state(s, mask);
    EXPECT_NEAR(std::abs(inner_product(t, c)), 0.0, 1e-15);
    const double lambda = overlap_stats(s, mask).lambda;
    // s = sqrt(lambda) t + sqrt(1 - lambda) c, with real non-negative coefficients.
    const Complex a = inner_product(t, s);
    const Complex b = inner_product(c, s);
    EXPECT_NEAR(a.real(), std::sqrt(lambda), 1e-12);
    EXPECT_NEAR(a.imag(), 0.0, 1e-12);
    EXPECT_NEAR(b.real(), std::sqrt(1.0 - lambda), 1e-12);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (mask[k] == 0) EXPECT_EQ(t[k], Complex(0.0, 0.0));
      else EXPECT_EQ(c[k], Complex(0.0, 0.0));
    }
  }
}

TEST(TargetState, EmptyRestrictionIsAnError) {
  const StateVector e0 = StateVector::basis(0, 1, 1);
  try {
    target_state(e0, BasisMask{0, 1, 1, 1});
    FAIL() << "expected throw";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTarget);
  }
  EXPECT_THROW(complement_state(e0, BasisMask{1, 0, 0, 0}), Error);
}

}  // namespace
}  // namespace qimf
