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

#ifndef QIMF_PIPELINE_H
#define QIMF_PIPELINE_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qimf/amplification.h"
#include "qimf/classical.h"
#include "qimf/encoding.h"
#include "qimf/image.h"
#include "qimf/spectral.h"
#include "qimf/state.h"

namespace qimf {

enum class FilterKind { kLowpass, kHighpass, kHomomorphic, kBand };

const char *to_string(FilterKind kind);
FilterKind parse_filter_kind(const std::string &name);

struct FilterConfig {
  std::string input_path;  // PGM file; when empty `builtin` is used
  std::string builtin = "rectangle";
  FilterKind kind = FilterKind::kBand;
  double d1 = 0.0;
  double d2 = std::numeric_limits<double>::infinity();
  double delta = 0.01;
  std::optional<int> l;  // nullopt selects the minimal guaranteed length
  std::optional<double> lambda_floor;
  std::uint64_t seed = 1;
  double noise_density = 0.1;  // used by the noisy builtin
  std::string out_path;
  std::string report_path;

  void validate() const;
};

/// Preset configurations: "lowpass", "highpass", "homomorphic", "rectangle".
FilterConfig demo_config(const std::string &name);
std::vector<std::string> demo_names();

// ---------------------------------------------------------------------------
// Input generators and image transforms.

/// The 256 x 256 rectangle with w = h = 50 at (103, 103).
RectangleSpec builtin_rectangle_spec();

/// "rectangle", "noisy-rectangle" or "illumination" (slow gradient times a
/// periodic texture). Only the noisy builtin consumes `seed` and `density`.
ImageBuffer make_builtin(const std::string &name, std::uint64_t seed = 1, double density = 0.1);
std::vector<std::string> builtin_names();

/// p -> ln(1 + p) / ln 2.
ImageBuffer homomorphic_pre(const ImageBuffer &image);
/// p -> 2^p - 1.
ImageBuffer homomorphic_post(const ImageBuffer &image);

/// Sets exactly floor(density * N) distinct pixels to 0 or 1 (equal odds).
/// Pixels are picked by a partial Fisher-Yates shuffle driven by
/// std::mt19937_64(seed) with rejection sampling, and the top bit of the next
/// draw chooses salt (1) or pepper (0), so output is identical on every platform.
ImageBuffer add_salt_pepper(const ImageBuffer &image, double density, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Resource accounting.

struct ResourceReport {
  int encoder_calls = 0;       // U_e and its inverse: 2l + 1
  int oracle_calls = 0;        // U_D: 2l
  int qft2d_applications = 0;  // 2l + 2
  std::string encoder_model;   // "rectangle-circuit" or "dense"
  std::size_t encoder_gates = 0;
  QftGateCounts qft_gates;  // per application
  std::size_t oracle_gates = 0;
  std::size_t phase_gates = 0;
  std::size_t per_iteration_gates = 0;
  std::size_t total_quantum_gates = 0;
  ClassicalOpCount classical;
};

/// Gate cost of the membership oracle: two squarings, the fold onto the
/// nearest corner and two comparisons.
std::size_t oracle_gate_count(int n1, int n2);

/// Generic amplitude-encoding cost for an image without a known efficient circuit.
std::size_t dense_encoder_gate_count(int n1, int n2);

ResourceReport resource_report(int n1, int n2, int l, std::size_t encoder_gates,
                               const std::string &encoder_model);

// ---------------------------------------------------------------------------
// End-to-end runs.

struct FilterReport {
  FilterKind kind = FilterKind::kBand;
  std::string source;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double d1 = 0.0;
  double d2 = 0.0;
  double delta = 0.0;
  double norm_sq = 0.0;  // M
  double m_d = 0.0;
  double m_prime_d = 0.0;
  double lambda = 0.0;
  double lambda_prime = 0.0;
  std::optional<double> lambda_floor;
  bool auto_l = false;
  int minimal_l = 0;  // for the measured lambda
  bool guarantee_met = false;
  Schedule schedule;
  double success_probability = 0.0;
  double predicted_success = 0.0;
  double fidelity_to_reference = 0.0;
  ResourceReport resources;
  double wall_time_seconds = 0.0;
};

struct FilterResult {
  ImageBuffer image;
  FilterReport report;
  StateVector input_state;   // |s>
  StateVector output_state;  // |s'>
  StateVector reference;     // iqft2d(|t>)
};

/// Encode, transform, measure lambda, amplify, transform back, decode. Throws
/// Error with kLambdaBelowFloor when the measured lambda is under the floor.
FilterResult run_filter(const FilterConfig &config);

/// run_filter, then writes the image and report when paths are set.
FilterResult run_and_write(const FilterConfig &config, bool include_timing = false);

/// 12 significant digits; wall time only when `include_timing`.
std::string report_to_json(const FilterReport &report, bool include_timing = false);

// ---------------------------------------------------------------------------
// Scaling study.

enum class SweepScaling {
  kProportional,    // rectangle and region both scale with the frame
  kFixedRectangle,  // 51 x 51 rectangle centred, region scales with the frame
};

struct SweepRow {
  std::size_t side = 0;
  std::size_t pixels = 0;
  int qubits = 0;
  double lambda = 0.0;
  int l = 0;
  std::size_t encoder_gates = 0;
  std::size_t per_iteration_gates = 0;
  std::size_t total_quantum_gates = 0;
  std::size_t classical_fft_ops = 0;
  std::size_t classical_mask_ops = 0;
};

/// The reference geometry (256 frame, w = h = 50 at 103, band [80, 140])
/// rescaled to each side length.
std::vector<SweepRow> run_sweep(const std::vector<std::size_t> &sides, double delta,
                                SweepScaling scaling = SweepScaling::kProportional);

std::string sweep_to_csv(const std::vector<SweepRow> &rows);

// ---------------------------------------------------------------------------
// Encoder equivalence suite.

struct EncoderCheckResult {
  std::size_t cases = 0;
  double max_rectangle_error = 0.0;  // circuit encoder vs dense encoding, max |diff|
  double max_uniform_error = 0.0;    // uniform-range circuit vs direct state
  bool passed(double tolerance = 1e-10) const {
    return max_rectangle_error <= tolerance && max_uniform_error <= tolerance;
  }
};

/// `random_specs` random rectangles on each of the 16 x 16 and 64 x 64 frames,
/// the 256 x 256 builtin rectangle, and every C in [0, 63].
EncoderCheckResult encoder_equivalence_check(std::uint64_t seed, std::size_t random_specs = 100);

}  // namespace qimf

#endif  // QIMF_PIPELINE_H
