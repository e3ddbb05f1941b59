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

#include "qimf/pipeline.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "qimf/error.h"
#include "qimf/pgm.h"
#include "qimf/region.h"

namespace qimf {

const char *to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::kLowpass:
      return "lowpass";
    case FilterKind::kHighpass:
      return "highpass";
    case FilterKind::kHomomorphic:
      return "homomorphic";
    case FilterKind::kBand:
      return "band";
  }
  return "band";
}

FilterKind parse_filter_kind(const std::string &name) {
  if (name == "lowpass") return FilterKind::kLowpass;
  if (name == "highpass") return FilterKind::kHighpass;
  if (name == "homomorphic") return FilterKind::kHomomorphic;
  if (name == "band") return FilterKind::kBand;
  throw Error(ErrorCode::kInvalidArgument, "unknown filter kind '" + name + "'");
}

void FilterConfig::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  if (std::isnan(d1) || std::isnan(d2) || d1 < 0.0 || d1 > d2) {
    throw Error(ErrorCode::kInvalidArgument, "region bounds must satisfy 0 <= d1 <= d2");
  }
  if (l && *l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be >= 1");
  if (lambda_floor && !(*lambda_floor > 0.0 && *lambda_floor <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda floor must lie in (0, 1]");
  }
  if (!(noise_density >= 0.0 && noise_density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise density must lie in [0, 1]");
  }
}

FilterConfig demo_config(const std::string &name) {
  FilterConfig c;
  c.delta = 0.01;
  c.seed = 7;
  if (name == "lowpass") {
    c.builtin = "noisy-rectangle";
    c.kind = FilterKind::kLowpass;
    c.d1 = 0.0;
    c.d2 = 35.0;
    c.l = 1;
  } else if (name == "highpass") {
    c.builtin = "rectangle";
    c.kind = FilterKind::kHighpass;
    c.d1 = 5.0;
    c.d2 = 60.0;
    c.l = 5;
  } else if (name == "homomorphic") {
    c.builtin = "illumination";
    c.kind = FilterKind::kHomomorphic;
    c.d1 = 75.0;
    c.d2 = 90.0;
    c.l = 2;
  } else if (name == "rectangle") {
    c.builtin = "rectangle";
    c.kind = FilterKind::kBand;
    c.d1 = 80.0;
    c.d2 = 140.0;
    c.l = 15;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown demo '" + name + "'");
  }
  return c;
}

std::vector<std::string> demo_names() { return {"lowpass", "highpass", "homomorphic", "rectangle"}; }

RectangleSpec builtin_rectangle_spec() { return {50, 50, 103, 103, 8, 8}; }

namespace {

constexpr std::size_t kBuiltinSide = 256;

ImageBuffer illumination_image() {
  // Horizontal illumination ramp times a texture at (60, 60) cycles, which
  // sits at d0 = 84.9, inside the homomorphic band.
  const std::size_t n = kBuiltinSide;
  std::vector<double> pixels(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double light = 0.15 + 0.85 * static_cast<double>(j) / static_cast<double>(n - 1);
      const double phase_i = 2.0 * std::numbers::pi * 60.0 * static_cast<double>(i) / n;
      const double phase_j = 2.0 * std::numbers::pi * 60.0 * static_cast<double>(j) / n;
      const double texture = 0.5 + 0.5 * std::cos(phase_i) * std::cos(phase_j);
      pixels[i * n + j] = light * texture;
    }
  }
  return ImageBuffer(n, n, std::move(pixels));
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

ImageBuffer make_builtin(const std::string &name, std::uint64_t seed, double density) {
  if (name == "rectangle") return rasterize_rectangle(builtin_rectangle_spec());
  if (name == "noisy-rectangle") {
    return add_salt_pepper(rasterize_rectangle(builtin_rectangle_spec()), density, seed);
  }
  if (name == "illumination") return illumination_image();
  throw Error(ErrorCode::kInvalidArgument, "unknown builtin image '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"rectangle", "noisy-rectangle", "illumination"}; }

ImageBuffer homomorphic_pre(const ImageBuffer &image) {
  std::vector<double> out(image.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::min(1.0, std::log1p(image.pixels()[k]) / std::numbers::ln2);
  }
  return ImageBuffer(image.rows(), image.cols(), std::move(out));
}

ImageBuffer homomorphic_post(const ImageBuffer &image) {
  std::vector<double> out(image.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::clamp(std::exp2(image.pixels()[k]) - 1.0, 0.0, 1.0);
  }
  return ImageBuffer(image.rows(), image.cols(), std::move(out));
}

ImageBuffer add_salt_pepper(const ImageBuffer &image, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise density must lie in [0, 1]");
  }
  const std::size_t n = image.size();
  const auto count = std::min(n, static_cast<std::size_t>(std::floor(density * n)));
  std::vector<double> pixels(image.pixels().begin(), image.pixels().end());
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t pick = k + uniform_below(rng, n - k);
    std::swap(order[k], order[pick]);
    pixels[order[k]] = (rng() >> 63) ? 1.0 : 0.0;
  }
  return ImageBuffer(image.rows(), image.cols(), std::move(pixels));
}

std::size_t oracle_gate_count(int n1, int n2) {
  const auto a = static_cast<std::size_t>(n1);
  const auto b = static_cast<std::size_t>(n2);
  return 2 * (a * a + b * b) + 4 * (a + b);
}

std::size_t dense_encoder_gate_count(int n1, int n2) {
  // Uniformly controlled rotation tree: about 2^(n+1) rotations and CNOTs.
  return std::size_t{1} << (n1 + n2 + 1);
}

ResourceReport resource_report(int n1, int n2, int l, std::size_t encoder_gates,
                               const std::string &encoder_model) {
  ResourceReport r;
  r.encoder_calls = 2 * l + 1;
  r.oracle_calls = 2 * l;
  r.qft2d_applications = 2 * l + 2;
  r.encoder_model = encoder_model;
  r.encoder_gates = encoder_gates;
  r.qft_gates = qft_gate_counts(n1, n2);
  r.oracle_gates = oracle_gate_count(n1, n2);
  // Per iteration: Z_beta on the ancilla and one n-controlled phase for the
  // reflection about |0> inside S_f.
  const auto n = static_cast<std::size_t>(n1 + n2);
  const std::size_t phase_per_iteration = 1 + (1 + 2 * n);
  r.phase_gates = static_cast<std::size_t>(l) * phase_per_iteration;
  r.per_iteration_gates =
      2 * encoder_gates + 2 * r.qft_gates.total() + 2 * r.oracle_gates + phase_per_iteration;
  r.total_quantum_gates = static_cast<std::size_t>(r.encoder_calls) * encoder_gates +
                          static_cast<std::size_t>(r.qft2d_applications) * r.qft_gates.total() +
                          static_cast<std::size_t>(r.oracle_calls) * r.oracle_gates +
                          r.phase_gates;
  r.classical = classical_op_count(std::size_t{1} << n1, std::size_t{1} << n2);
  return r;
}

namespace {

struct PreparedInput {
  ImageBuffer image;  // after any homomorphic pre-transform
  StateVector state;
  double norm_sq;
  std::size_t encoder_gates;
  std::string encoder_model;
  std::string source;
};

PreparedInput prepare_input(const FilterConfig &config) {
  const bool from_file = !config.input_path.empty();
  ImageBuffer image = from_file ? read_pgm(config.input_path)
                                : make_builtin(config.builtin, config.seed, config.noise_density);
  const std::string source = from_file ? config.input_path : "builtin:" + config.builtin;
  if (config.kind == FilterKind::kHomomorphic) image = homomorphic_pre(image);

  if (!from_file && config.builtin == "rectangle") {
    // The efficient circuit path; its state equals the dense encoding.
    const RectangleSpec spec = builtin_rectangle_spec();
    const double m = static_cast<double>((spec.w + 1) * (spec.h + 1));
    return {std::move(image), prepare_rectangle(spec), m, rectangle_encoder_cost(spec).total(),
            "rectangle-circuit", source};
  }
  EncodedImage encoded = encode_image(image);
  const std::size_t gates = dense_encoder_gate_count(image.n1(), image.n2());
  return {std::move(image), std::move(encoded.state), encoded.norm_sq, gates, "dense", source};
}

}  // namespace

FilterResult run_filter(const FilterConfig &config) {
  const auto started = std::chrono::steady_clock::now();
  config.validate();
  PreparedInput input = prepare_input(config);
  const StateVector &s = input.state;
  const RegionSpec region(config.d1, config.d2, s.rows(), s.cols());
  const BasisMask mask = region_mask(region);

  const StateVector f = qft2d(s);
  const OverlapStats stats = overlap_stats(f, mask, input.norm_sq);
  if (config.lambda_floor && stats.lambda < *config.lambda_floor) {
    throw Error(ErrorCode::kLambdaBelowFloor,
                "lambda " + std::to_string(stats.lambda) + " is below the floor " +
                    std::to_string(*config.lambda_floor) +
                    "; the filter may not distinguish signal from noise");
  }
  if (!(stats.lambda > 0.0)) {
    throw Error(ErrorCode::kEmptyTarget, "empty region: no intensity inside the band");
  }

  const int minimal_l = min_sequence_length(stats.lambda, config.delta).l;
  int l = minimal_l;
  if (config.l) {
    l = *config.l;
  } else if (config.lambda_floor) {
    l = min_sequence_length(*config.lambda_floor, config.delta).l;
  }
  const Schedule schedule = make_schedule(l, config.delta);

  const StateVector amplified = run_iterations(f, mask, schedule);
  const StateVector target = target_state(f, mask);
  StateVector output = iqft2d(amplified);
  StateVector reference = iqft2d(target);

  ImageBuffer image = decode_state(output);
  if (config.kind == FilterKind::kHomomorphic) image = homomorphic_post(image);

  FilterReport report;
  report.kind = config.kind;
  report.source = input.source;
  report.rows = s.rows();
  report.cols = s.cols();
  report.d1 = config.d1;
  report.d2 = config.d2;
  report.delta = config.delta;
  report.norm_sq = input.norm_sq;
  report.m_d = stats.m_d;
  report.m_prime_d = stats.m_prime_d;
  report.lambda = stats.lambda;
  report.lambda_prime = stats.lambda_prime;
  report.lambda_floor = config.lambda_floor;
  report.auto_l = !config.l.has_value();
  report.minimal_l = minimal_l;
  report.guarantee_met = l >= minimal_l;
  report.schedule = schedule;
  report.success_probability = std::clamp(fidelity(target, amplified), 0.0, 1.0);
  report.predicted_success = std::clamp(predicted_success(schedule, stats.lambda), 0.0, 1.0);
  report.fidelity_to_reference = std::clamp(fidelity(reference, output), 0.0, 1.0);
  report.resources =
      resource_report(s.n1(), s.n2(), l, input.encoder_gates, input.encoder_model);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  return {std::move(image), std::move(report), std::move(input.state), std::move(output),
          std::move(reference)};
}

FilterResult run_and_write(const FilterConfig &config, bool include_timing) {
  FilterResult result = run_filter(config);
  if (!config.out_path.empty()) write_pgm(result.image, config.out_path);
  if (!config.report_path.empty()) {
    std::ofstream out(config.report_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + config.report_path);
    out << report_to_json(result.report, include_timing) << '\n';
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + config.report_path);
  }
  return result;
}

std::vector<SweepRow> run_sweep(const std::vector<std::size_t> &sides, double delta,
                                SweepScaling scaling) {
  std::vector<SweepRow> rows;
  for (std::size_t side : sides) {
    if (side < 64 || !std::has_single_bit(side)) {
      throw Error(ErrorCode::kInvalidArgument, "sweep sides must be powers of two >= 64");
    }
    const double factor = static_cast<double>(side) / 256.0;
    const int n = std::countr_zero(side);
    RectangleSpec spec;
    spec.n1 = n;
    spec.n2 = n;
    if (scaling == SweepScaling::kProportional) {
      spec.w = spec.h = static_cast<std::size_t>(std::lround(50.0 * factor));
      spec.x1 = spec.y1 = static_cast<std::size_t>(std::lround(103.0 * factor));
    } else {
      spec.w = spec.h = 50;
      spec.x1 = spec.y1 = (side - 51) / 2;
    }
    const RegionSpec region(80.0 * factor, 140.0 * factor, side, side);
    const StateVector f = qft2d(prepare_rectangle(spec));
    const double lambda = overlap_stats(f, region_mask(region)).lambda;
    const int l = min_sequence_length(lambda, delta).l;
    const ResourceReport res =
        resource_report(n, n, l, rectangle_encoder_cost(spec).total(), "rectangle-circuit");
    rows.push_back({side, side * side, 2 * n, lambda, l, res.encoder_gates,
                    res.per_iteration_gates, res.total_quantum_gates, res.classical.fft_ops,
                    res.classical.mask_ops});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow> &rows) {
  std::string out =
      "side,N,qubits,lambda,l,encoder_gates,per_iteration_gates,total_quantum_gates,"
      "classical_fft_ops,classical_mask_ops\n";
  char buf[64];
  for (const SweepRow &r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", r.lambda);
    out += std::to_string(r.side) + "," + std::to_string(r.pixels) + "," +
           std::to_string(r.qubits) + "," + buf + "," + std::to_string(r.l) + "," +
           std::to_string(r.encoder_gates) + "," + std::to_string(r.per_iteration_gates) + "," +
           std::to_string(r.total_quantum_gates) + "," + std::to_string(r.classical_fft_ops) +
           "," + std::to_string(r.classical_mask_ops) + "\n";
  }
  return out;
}

namespace {

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace

EncoderCheckResult encoder_equivalence_check(std::uint64_t seed, std::size_t random_specs) {
  EncoderCheckResult result;
  std::mt19937_64 rng(seed);
  auto check = [&](const RectangleSpec &spec) {
    const StateVector circuit = prepare_rectangle(spec);
    const StateVector dense = encode_image(rasterize_rectangle(spec)).state;
    result.max_rectangle_error =
        std::max(result.max_rectangle_error, max_abs_diff(circuit.amplitudes(), dense.amplitudes()));
    ++result.cases;
  };
  for (int n : {4, 6}) {
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::size_t k = 0; k < random_specs; ++k) {
      RectangleSpec spec;
      spec.n1 = spec.n2 = n;
      spec.w = uniform_below(rng, side);
      spec.h = uniform_below(rng, side);
      spec.x1 = uniform_below(rng, side - spec.w);
      spec.y1 = uniform_below(rng, side - spec.h);
      check(spec);
    }
  }
  check(builtin_rectangle_spec());

  for (std::uint64_t c = 0; c < 64; ++c) {
    const int n = std::max(1, static_cast<int>(std::bit_width(c)));
    const StateVector prepared = prepare_uniform_range(c, n);
    std::vector<Complex> direct(prepared.size(), Complex{0.0, 0.0});
    for (std::uint64_t j = 0; j <= c; ++j) direct[j] = 1.0 / std::sqrt(static_cast<double>(c + 1));
    result.max_uniform_error =
        std::max(result.max_uniform_error, max_abs_diff(prepared.amplitudes(), direct));
    ++result.cases;
  }
  return result;
}

}  // namespace qimf
