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

#include "qimf/amplification.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qimf/error.h"
#include "qimf/kernels.h"

namespace qimf {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
}

double arccot(double x) { return std::numbers::pi / 2.0 - std::atan(x); }

}  // namespace

SequenceLength min_sequence_length(double lambda_bound, double delta) {
  check_delta(delta);
  if (!(lambda_bound > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "no guarantee possible: lambda bound must be > 0");
  }
  if (lambda_bound > 1.0) throw Error(ErrorCode::kInvalidArgument, "lambda bound exceeds 1");
  const double bound = std::log(2.0 / delta) / std::sqrt(lambda_bound);
  auto length = static_cast<int>(std::ceil(bound));
  if (length % 2 == 0) ++length;
  if (length < 3) length = 3;
  return {(length - 1) / 2, length};
}

Schedule make_schedule(int l, double delta) {
  check_delta(delta);
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "schedule needs l >= 1");
  Schedule s;
  s.delta = delta;
  s.l = l;
  s.L = 2 * l + 1;
  s.gamma = 1.0 / std::cosh(std::acosh(1.0 / delta) / s.L);
  const double root = std::sqrt(1.0 - s.gamma * s.gamma);
  s.alphas.resize(l);
  s.betas.resize(l);
  for (int j = 1; j <= l; ++j) {
    s.alphas[j - 1] = 2.0 * arccot(std::tan(2.0 * std::numbers::pi * j / s.L) * root);
  }
  for (int j = 1; j <= l; ++j) s.betas[j - 1] = -s.alphas[l - j];
  return s;
}

double chebyshev_t(int degree, double x) {
  if (std::abs(x) <= 1.0) return std::cos(degree * std::acos(x));
  const double magnitude = std::cosh(degree * std::acosh(std::abs(x)));
  return (x < 0.0 && degree % 2 != 0) ? -magnitude : magnitude;
}

double predicted_success(const Schedule &schedule, double lambda) {
  const double x = std::sqrt(std::max(0.0, 1.0 - lambda)) / schedule.gamma;
  const double t = chebyshev_t(schedule.L, x);
  return 1.0 - schedule.delta * schedule.delta * t * t;
}

double guaranteed_lambda(const Schedule &schedule) {
  return 1.0 - schedule.gamma * schedule.gamma;
}

StateVector reflect_target(const StateVector &state, const BasisMask &mask, double beta) {
  return apply_diagonal_phase(state, mask, beta / 2.0, -beta / 2.0);
}

StateVector reflect_source(const StateVector &state, const StateVector &source, double alpha) {
  return apply_rank_one_phase(state, source, alpha, PhaseSign::kMinus);
}

StateVector grover_iteration(const StateVector &state, const StateVector &source,
                             const BasisMask &mask, double alpha, double beta) {
  const StateVector reflected = reflect_source(reflect_target(state, mask, beta), source, alpha);
  std::vector<Complex> out(reflected.amplitudes().begin(), reflected.amplitudes().end());
  kernels::omp::scale(out, Complex{-1.0, 0.0});
  return StateVector::adopt(std::move(out), state.n1(), state.n2());
}

StateVector run_iterations(const StateVector &source, const BasisMask &mask,
                           const Schedule &schedule) {
  if (mask.size() != source.size()) throw Error(ErrorCode::kDimensionMismatch, "mask length");
  if (!(kernels::omp::masked_norm_sq(source.amplitudes(), mask) > 0.0)) {
    throw Error(ErrorCode::kEmptyTarget, "nothing to amplify: no intensity inside the region");
  }
  StateVector state = source;
  for (int j = 0; j < schedule.l; ++j) {
    state = grover_iteration(state, source, mask, schedule.alphas[j], schedule.betas[j]);
  }
  return state;
}

}  // namespace qimf
