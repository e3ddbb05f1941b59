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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qimf/error.h"
#include "qimf/kernels.h"

namespace qimf {

namespace {

// Half an ulp of x*x, so a bound like sqrt(2)^2 = 2.0000000000000004 still
// admits the lattice point at squared distance 2.
double half_ulp_of_square(double x) {
  const double sq = x * x;
  return 0.5 * (std::nextafter(sq, std::numeric_limits<double>::infinity()) - sq);
}

constexpr double kMaxExactSq = 9.0e15;  // below 2^53

}  // namespace

RegionSpec::RegionSpec(double d1, double d2, std::size_t rows, std::size_t cols)
    : d1_(d1), d2_(d2), rows_(rows), cols_(cols) {
  if (std::isnan(d1) || std::isnan(d2) || d1 < 0.0 || d1 > d2 || std::isinf(d1)) {
    throw Error(ErrorCode::kInvalidArgument, "region bounds must satisfy 0 <= d1 <= d2");
  }
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidArgument, "empty frame");
  const double lo = d1 * d1 - half_ulp_of_square(d1);
  lo_sq_ = lo <= 0.0 ? 0 : static_cast<std::int64_t>(std::ceil(lo));
  const double hi = std::isinf(d2) ? kMaxExactSq : d2 * d2 + half_ulp_of_square(d2);
  hi_sq_ = hi >= kMaxExactSq ? std::numeric_limits<std::int64_t>::max()
                             : static_cast<std::int64_t>(std::floor(hi));
}

double zero_distance(std::size_t u, std::size_t v, std::size_t rows, std::size_t cols) {
  if (u >= rows || v >= cols) throw Error(ErrorCode::kOutOfRange, "frequency index out of range");
  return std::sqrt(static_cast<double>(kernels::corner_distance_sq(u, v, rows, cols)));
}

bool in_region(std::size_t u, std::size_t v, const RegionSpec &spec) {
  if (u >= spec.rows() || v >= spec.cols()) {
    throw Error(ErrorCode::kOutOfRange, "frequency index out of range");
  }
  const std::int64_t d = kernels::corner_distance_sq(u, v, spec.rows(), spec.cols());
  return d >= spec.lo_sq() && d <= spec.hi_sq();
}

BasisMask region_mask(const RegionSpec &spec) {
  BasisMask mask(spec.rows() * spec.cols());
  kernels::omp::region_mask(mask, spec.rows(), spec.cols(), spec.lo_sq(), spec.hi_sq());
  return mask;
}

OverlapStats overlap_stats(const StateVector &freq_state, const BasisMask &mask,
                           double total_intensity) {
  if (mask.size() != freq_state.size()) throw Error(ErrorCode::kDimensionMismatch, "mask length");
  const double inside = kernels::omp::masked_norm_sq(freq_state.amplitudes(), mask);
  const double total = kernels::omp::norm_sq(freq_state.amplitudes());
  OverlapStats stats;
  stats.lambda = std::clamp(inside / total, 0.0, 1.0);
  stats.m_d = stats.lambda * total_intensity;
  stats.m_prime_d = total_intensity - stats.m_d;
  stats.lambda_prime = stats.m_prime_d > 0.0 ? stats.m_d / stats.m_prime_d
                                             : std::numeric_limits<double>::infinity();
  return stats;
}

namespace {

StateVector restrict_to(const StateVector &freq_state, const BasisMask &mask, bool keep_marked) {
  if (mask.size() != freq_state.size()) throw Error(ErrorCode::kDimensionMismatch, "mask length");
  std::vector<Complex> amps(freq_state.size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if ((mask[k] != 0) == keep_marked) amps[k] = freq_state[k];
  }
  try {
    return StateVector::from_values(amps, freq_state.n1(), freq_state.n2()).state;
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kUnnormalizable) throw;
    throw Error(ErrorCode::kEmptyTarget,
                keep_marked ? "empty target: no intensity inside the region"
                            : "empty complement: no intensity outside the region");
  }
}

}  // namespace

StateVector target_state(const StateVector &freq_state, const BasisMask &mask) {
  return restrict_to(freq_state, mask, true);
}

StateVector complement_state(const StateVector &freq_state, const BasisMask &mask) {
  return restrict_to(freq_state, mask, false);
}

}  // namespace qimf
