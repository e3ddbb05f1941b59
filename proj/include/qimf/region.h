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

#ifndef QIMF_REGION_H
#define QIMF_REGION_H

#include <cstddef>
#include <cstdint>

#include "qimf/state.h"

namespace qimf {

/// Annulus D = {(u, v) | d1 <= d0(u, v) <= d2}, inclusive at both ends, where
/// d0 is the distance to the nearest zero-frequency corner.
class RegionSpec {
 public:
  /// d2 may be +infinity. Throws unless 0 <= d1 <= d2.
  RegionSpec(double d1, double d2, std::size_t rows, std::size_t cols);

  double d1() const { return d1_; }
  double d2() const { return d2_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Integer bounds on the squared distance; membership is lo <= d0^2 <= hi.
  std::int64_t lo_sq() const { return lo_sq_; }
  std::int64_t hi_sq() const { return hi_sq_; }

 private:
  double d1_;
  double d2_;
  std::size_t rows_;
  std::size_t cols_;
  std::int64_t lo_sq_;
  std::int64_t hi_sq_;
};

double zero_distance(std::size_t u, std::size_t v, std::size_t rows, std::size_t cols);

bool in_region(std::size_t u, std::size_t v, const RegionSpec &spec);

BasisMask region_mask(const RegionSpec &spec);

struct OverlapStats {
  double m_d = 0.0;        // in-region intensity
  double m_prime_d = 0.0;  // out-of-region intensity
  double lambda = 0.0;     // M_D / M
  double lambda_prime = 0.0;  // M_D / M'_D, +infinity when M'_D == 0
};

/// Intensities are reported in units of `total_intensity` (the image's M);
/// the default expresses them as fractions of the unit-norm state.
OverlapStats overlap_stats(const StateVector &freq_state, const BasisMask &mask,
                           double total_intensity = 1.0);

/// |t>: mask-restricted, renormalized copy of the frequency state.
StateVector target_state(const StateVector &freq_state, const BasisMask &mask);
/// |t-bar>: the complementary restriction.
StateVector complement_state(const StateVector &freq_state, const BasisMask &mask);

}  // namespace qimf

#endif  // QIMF_REGION_H
