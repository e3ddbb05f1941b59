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

#ifndef QIMF_AMPLIFICATION_H
#define QIMF_AMPLIFICATION_H

#include <vector>

#include "qimf/state.h"

namespace qimf {

struct SequenceLength {
  int l;  // Grover iterations
  int L;  // 2l + 1
};

/// Smallest odd L >= ln(2/delta) / sqrt(lambda_bound), floored at L = 3.
SequenceLength min_sequence_length(double lambda_bound, double delta);

/// Fixed-point phase schedule. alphas[j-1] and betas[j-1] hold the angles of
/// iteration j, with beta_j = -alpha_{l-j+1}.
struct Schedule {
  double delta = 0.0;
  int l = 0;
  int L = 0;
  double gamma = 0.0;
  std::vector<double> alphas;
  std::vector<double> betas;
};

/// 1/gamma = cosh(arccosh(1/delta) / L) and
/// alpha_j = 2 arccot(tan(2 pi j / L) sqrt(1 - gamma^2)), arccot in (0, pi).
Schedule make_schedule(int l, double delta);

/// Chebyshev polynomial of the first kind, valid for any real x.
double chebyshev_t(int degree, double x);

/// Closed-form success probability 1 - delta^2 T_L(T_{1/L}(1/delta) sqrt(1 - lambda))^2
/// of the schedule on a problem with overlap lambda.
double predicted_success(const Schedule &schedule, double lambda);

/// Smallest overlap for which the schedule guarantees success >= 1 - delta^2.
double guaranteed_lambda(const Schedule &schedule);

/// Oracle form of S_t(beta): e^{i beta/2} on marked indices, e^{-i beta/2}
/// elsewhere. Equals I - (1 - e^{i beta})|t><t| up to the phase e^{-i beta/2}.
StateVector reflect_target(const StateVector &state, const BasisMask &mask, double beta);

/// S_f(alpha) = I - (1 - e^{-i alpha})|f><f|.
StateVector reflect_source(const StateVector &state, const StateVector &source, double alpha);

/// G(alpha, beta) = -S_f(alpha) S_t(beta).
StateVector grover_iteration(const StateVector &state, const StateVector &source,
                             const BasisMask &mask, double alpha, double beta);

/// Applies G(alpha_j, beta_j) for j = 1..l in order, starting from `source`.
StateVector run_iterations(const StateVector &source, const BasisMask &mask,
                           const Schedule &schedule);

}  // namespace qimf

#endif  // QIMF_AMPLIFICATION_H
