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

// Serial versus OpenMP kernels on square frames.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qimf/kernels.h"

namespace {

using qimf::kernels::Complex;
using qimf::kernels::FftPlan;

std::vector<Complex> random_grid(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> out(n);
  for (Complex &c : out) c = {g(rng), g(rng)};
  return out;
}

std::vector<std::uint8_t> random_mask(std::size_t n) {
  std::mt19937_64 rng(2);
  std::vector<std::uint8_t> out(n);
  for (auto &m : out) m = static_cast<std::uint8_t>(rng() & 1);
  return out;
}

#define QIMF_BENCH_SET(ns)                                                                     \
  void ns##_norm_sq(benchmark::State &state) {                                                 \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    const auto x = random_grid(side * side);                                                   \
    for (auto _ : state) benchmark::DoNotOptimize(qimf::kernels::ns::norm_sq(x));              \
  }                                                                                            \
  void ns##_inner_product(benchmark::State &state) {                                           \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    const auto a = random_grid(side * side);                                                   \
    const auto b = random_grid(side * side);                                                   \
    for (auto _ : state) benchmark::DoNotOptimize(qimf::kernels::ns::inner_product(a, b));     \
  }                                                                                            \
  void ns##_diagonal_phase(benchmark::State &state) {                                          \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    auto x = random_grid(side * side);                                                         \
    const auto mask = random_mask(side * side);                                                \
    const Complex in = std::polar(1.0, 0.3), out = std::polar(1.0, -0.3);                     \
    for (auto _ : state) {                                                                     \
      qimf::kernels::ns::diagonal_phase(x, mask, in, out);                                     \
      benchmark::ClobberMemory();                                                              \
    }                                                                                          \
  }                                                                                            \
  void ns##_fft2d(benchmark::State &state) {                                                   \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    auto x = random_grid(side * side);                                                         \
    const FftPlan plan(side);                                                                  \
    for (auto _ : state) {                                                                     \
      qimf::kernels::ns::fft_rows(x, side, side, plan, false);                                 \
      qimf::kernels::ns::fft_cols(x, side, side, plan, false);                                 \
      benchmark::ClobberMemory();                                                              \
    }                                                                                          \
  }                                                                                            \
  void ns##_apply_gate(benchmark::State &state) {                                              \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    auto x = random_grid(side * side);                                                         \
    const double r = 1.0 / std::sqrt(2.0);                                                     \
    const qimf::kernels::Mat2 h{Complex{r}, Complex{r}, Complex{r}, Complex{-r}};              \
    for (auto _ : state) {                                                                     \
      qimf::kernels::ns::apply_gate(x, 3, 0b110000, 0b010000, h);                              \
      benchmark::ClobberMemory();                                                              \
    }                                                                                          \
  }                                                                                            \
  void ns##_region_mask(benchmark::State &state) {                                             \
    const std::size_t side = static_cast<std::size_t>(state.range(0));                         \
    std::vector<std::uint8_t> mask(side * side);                                               \
    const auto lo = static_cast<std::int64_t>(side * side / 16);                               \
    const auto hi = static_cast<std::int64_t>(side * side / 4);                                \
    for (auto _ : state) {                                                                     \
      qimf::kernels::ns::region_mask(mask, side, side, lo, hi);                                \
      benchmark::ClobberMemory();                                                              \
    }                                                                                          \
  }                                                                                            \
  BENCHMARK(ns##_norm_sq)->Arg(256)->Arg(1024);                                                \
  BENCHMARK(ns##_inner_product)->Arg(256)->Arg(1024);                                          \
  BENCHMARK(ns##_diagonal_phase)->Arg(256)->Arg(1024);                                         \
  BENCHMARK(ns##_fft2d)->Arg(256)->Arg(1024);                                                  \
  BENCHMARK(ns##_apply_gate)->Arg(256)->Arg(1024);                                             \
  BENCHMARK(ns##_region_mask)->Arg(256)->Arg(1024);

QIMF_BENCH_SET(serial)
QIMF_BENCH_SET(omp)

}  // namespace

BENCHMARK_MAIN();
