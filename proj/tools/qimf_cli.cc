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

// Command-line front end: filter, demo, sweep, encode-check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qimf/error.h"
#include "qimf/pipeline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitLambdaFloor = 3;
constexpr int kExitIo = 4;

int exit_code_for(qimf::ErrorCode code) {
  switch (code) {
    case qimf::ErrorCode::kLambdaBelowFloor:
      return kExitLambdaFloor;
    case qimf::ErrorCode::kIo:
    case qimf::ErrorCode::kFormat:
      return kExitIo;
    default:
      return kExitConfig;
  }
}

double parse_distance(const std::string &text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw qimf::Error(qimf::ErrorCode::kInvalidArgument, "bad distance '" + text + "'");
  return value;
}

std::optional<int> parse_iterations(const std::string &text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size()) throw qimf::Error(qimf::ErrorCode::kInvalidArgument, "bad --l '" + text + "'");
  return value;
}

void print_summary(const qimf::FilterReport &r) {
  std::printf("lambda=%.6g lambda_prime=%.6g l=%d (minimal %d) success=%.10f fidelity=%.10f\n",
              r.lambda, r.lambda_prime, r.schedule.l, r.minimal_l, r.success_probability,
              r.fidelity_to_reference);
  std::fprintf(stderr, "wall time %.3f s\n", r.wall_time_seconds);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum image filtering simulator"};
  app.require_subcommand(1);

  // filter
  qimf::FilterConfig config;
  std::string kind = "band";
  std::string d1_text = "0";
  std::string d2_text = "inf";
  std::string l_text = "auto";
  double lambda_floor = 0.0;
  bool timing = false;
  auto *filter = app.add_subcommand("filter", "Run one filter configuration");
  auto *input_opt = filter->add_option("--input", config.input_path, "PGM input (P2 or P5)");
  filter->add_option("--builtin", config.builtin, "Builtin image: rectangle, noisy-rectangle, illumination")
      ->excludes(input_opt);
  filter->add_option("--kind", kind, "lowpass | highpass | homomorphic | band");
  filter->add_option("--d1", d1_text, "Inner band radius");
  filter->add_option("--d2", d2_text, "Outer band radius (or inf)");
  filter->add_option("--delta", config.delta, "Error threshold in (0, 1)");
  filter->add_option("--l", l_text, "Iteration count or 'auto'");
  auto *floor_opt = filter->add_option("--lambda-floor", lambda_floor, "Abort when lambda is below this");
  filter->add_option("--seed", config.seed, "Noise seed");
  filter->add_option("--noise-density", config.noise_density, "Salt-and-pepper density for noisy builtin");
  filter->add_option("--out", config.out_path, "Output PGM (P5)");
  filter->add_option("--report", config.report_path, "Output JSON report");
  filter->add_flag("--timing", timing, "Include wall time in the JSON report");

  // demo
  std::string demo_name;
  std::string demo_out;
  std::string demo_report;
  std::optional<std::uint64_t> demo_seed;
  bool demo_timing = false;
  auto *demo = app.add_subcommand("demo", "Run a preset: lowpass, highpass, homomorphic, rectangle");
  demo->add_option("name", demo_name)->required()->check(
      CLI::IsMember(qimf::demo_names()));
  demo->add_option("--out", demo_out, "Output PGM (P5)");
  demo->add_option("--report", demo_report, "Output JSON report");
  demo->add_option("--seed", demo_seed, "Override the preset seed");
  demo->add_flag("--timing", demo_timing, "Include wall time in the JSON report");

  // sweep
  std::vector<std::size_t> sides{64, 128, 256, 512};
  double sweep_delta = 0.01;
  std::string scaling = "proportional";
  std::string sweep_out;
  auto *sweep = app.add_subcommand("sweep", "Scaling study over frame sizes (CSV)");
  sweep->add_option("--sizes", sides, "Frame side lengths")->delimiter(',');
  sweep->add_option("--delta", sweep_delta, "Error threshold");
  sweep->add_option("--scaling", scaling, "proportional | fixed-rectangle")
      ->check(CLI::IsMember({"proportional", "fixed-rectangle"}));
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");

  // encode-check
  std::uint64_t check_seed = 2024;
  auto *encode_check = app.add_subcommand("encode-check", "Circuit encoders vs dense encoding");
  encode_check->add_option("--seed", check_seed, "Seed for random rectangles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*filter) {
      config.kind = qimf::parse_filter_kind(kind);
      config.d1 = parse_distance(d1_text);
      config.d2 = parse_distance(d2_text);
      config.l = parse_iterations(l_text);
      if (*floor_opt) config.lambda_floor = lambda_floor;
      print_summary(qimf::run_and_write(config, timing).report);
    } else if (*demo) {
      qimf::FilterConfig preset = qimf::demo_config(demo_name);
      if (demo_seed) preset.seed = *demo_seed;
      preset.out_path = demo_out;
      preset.report_path = demo_report;
      print_summary(qimf::run_and_write(preset, demo_timing).report);
    } else if (*sweep) {
      const auto mode = scaling == "proportional" ? qimf::SweepScaling::kProportional
                                                  : qimf::SweepScaling::kFixedRectangle;
      const std::string csv = qimf::sweep_to_csv(qimf::run_sweep(sides, sweep_delta, mode));
      if (sweep_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(sweep_out, std::ios::binary);
        if (!(out << csv)) throw qimf::Error(qimf::ErrorCode::kIo, "cannot write " + sweep_out);
      }
    } else if (*encode_check) {
      const qimf::EncoderCheckResult r = qimf::encoder_equivalence_check(check_seed);
      std::printf("cases=%zu max_rectangle_error=%.3g max_uniform_error=%.3g %s\n", r.cases,
                  r.max_rectangle_error, r.max_uniform_error, r.passed() ? "PASS" : "FAIL");
      return r.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const qimf::Error &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "error: bad numeric argument (%s)\n", e.what());
    return kExitConfig;
  } catch (const std::out_of_range &e) {
    std::fprintf(stderr, "error: numeric argument out of range (%s)\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
