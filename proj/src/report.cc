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

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "qimf/pipeline.h"

namespace qimf {

namespace {

using nlohmann::ordered_json;

// Rounds to 12 significant digits; non-finite values become strings since
// JSON has no literal for them.
ordered_json num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

ordered_json nums(const std::vector<double> &xs) {
  ordered_json out = ordered_json::array();
  for (double x : xs) out.push_back(num(x));
  return out;
}

}  // namespace

std::string report_to_json(const FilterReport &r, bool include_timing) {
  ordered_json j;
  j["kind"] = to_string(r.kind);
  j["source"] = r.source;
  j["dims"] = {r.rows, r.cols};
  j["region"] = {{"d1", num(r.d1)}, {"d2", num(r.d2)}};
  j["delta"] = num(r.delta);
  j["norm_sq"] = num(r.norm_sq);
  j["m_d"] = num(r.m_d);
  j["m_prime_d"] = num(r.m_prime_d);
  j["lambda"] = num(r.lambda);
  j["lambda_prime"] = num(r.lambda_prime);
  j["lambda_floor"] = r.lambda_floor ? num(*r.lambda_floor) : ordered_json(nullptr);
  j["schedule"] = {{"auto", r.auto_l},
                   {"l", r.schedule.l},
                   {"L", r.schedule.L},
                   {"minimal_l", r.minimal_l},
                   {"guarantee_met", r.guarantee_met},
                   {"gamma", num(r.schedule.gamma)},
                   {"alphas", nums(r.schedule.alphas)},
                   {"betas", nums(r.schedule.betas)}};
  j["success_probability"] = num(r.success_probability);
  j["predicted_success"] = num(r.predicted_success);
  j["fidelity_to_reference"] = num(r.fidelity_to_reference);
  const ResourceReport &q = r.resources;
  j["quantum_resources"] = {
      {"encoder_calls", q.encoder_calls},
      {"oracle_calls", q.oracle_calls},
      {"qft2d_applications", q.qft2d_applications},
      {"encoder_model", q.encoder_model},
      {"encoder_gates", q.encoder_gates},
      {"qft_gates",
       {{"hadamards", q.qft_gates.hadamards},
        {"controlled_phases", q.qft_gates.controlled_phases},
        {"swaps", q.qft_gates.swaps}}},
      {"oracle_gates", q.oracle_gates},
      {"phase_gates", q.phase_gates},
      {"per_iteration_gates", q.per_iteration_gates},
      {"total_gates", q.total_quantum_gates}};
  j["classical_baseline"] = {{"fft_ops", q.classical.fft_ops},
                             {"mask_ops", q.classical.mask_ops}};
  if (include_timing) j["wall_time_seconds"] = num(r.wall_time_seconds);
  return j.dump(2);
}

}  // namespace qimf
