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

#include "qimf/encoding.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qimf/error.h"

namespace qimf {

EncodedImage encode_image(const ImageBuffer &image) {
  std::vector<Complex> values(image.pixels().begin(), image.pixels().end());
  try {
    auto [state, m] = StateVector::from_values(values, image.n1(), image.n2());
    return {std::move(state), m};
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kUnnormalizable) {
      throw Error(ErrorCode::kUnnormalizable, "unnormalizable: all-zero image");
    }
    throw;
  }
}

ImageBuffer decode_state(const StateVector &state) {
  std::vector<double> pixels(state.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    pixels[k] = std::abs(state[k]);
    peak = std::max(peak, pixels[k]);
  }
  if (peak > 0.0) {
    for (double &p : pixels) p = std::min(1.0, p / peak);
  }
  return ImageBuffer(state.rows(), state.cols(), std::move(pixels));
}

IntervalPartition interval_partition(std::uint64_t c) {
  IntervalPartition partition{c, {}};
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t digit = std::uint64_t{1} << bit;
    if (!(c & digit)) continue;
    // Prefix of C above this digit, digit cleared, lower digits free.
    const std::uint64_t prefix = bit == 63 ? 0 : (c >> (bit + 1)) << (bit + 1);
    partition.blocks.push_back({prefix, digit});
  }
  partition.blocks.push_back({c, 1});
  return partition;
}

std::vector<double> rotation_angles(const IntervalPartition &partition) {
  std::vector<double> angles;
  if (partition.blocks.size() < 2) return angles;
  double remaining = static_cast<double>(partition.upper) + 1.0;
  for (std::size_t j = 0; j + 1 < partition.blocks.size(); ++j) {
    const double size = static_cast<double>(partition.blocks[j].size);
    const double ratio = std::clamp(size / remaining, 0.0, 1.0);
    angles.push_back(2.0 * std::acos(std::sqrt(ratio)));
    remaining -= size;
  }
  return angles;
}

kernels::Mat2 ControlledGate::matrix() const {
  if (kind == Kind::kHadamard) {
    const double r = std::numbers::sqrt2 / 2.0;
    return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
}

int ControlledGate::num_controls() const { return std::popcount(control_mask); }

void Circuit::apply(std::span<Complex> amplitudes, unsigned qubit_offset) const {
  for (const ControlledGate &g : gates) {
    kernels::omp::apply_gate(amplitudes, g.target + qubit_offset,
                             g.control_mask << qubit_offset, g.control_values << qubit_offset,
                             g.matrix());
  }
}

EncoderCost &EncoderCost::operator+=(const EncoderCost &other) {
  rotations += other.rotations;
  hadamards += other.hadamards;
  control_wires += other.control_wires;
  adder_toffoli += other.adder_toffoli;
  adder_cnot += other.adder_cnot;
  adder_x += other.adder_x;
  return *this;
}

Circuit uniform_range_circuit(std::uint64_t c, int num_qubits) {
  if (num_qubits < 0 || num_qubits > 62 || c > (std::uint64_t{1} << num_qubits) - 1) {
    throw Error(ErrorCode::kOutOfRange, "C out of range for register size");
  }
  Circuit circuit{num_qubits, {}};
  const IntervalPartition partition = interval_partition(c);
  const std::vector<double> angles = rotation_angles(partition);

  // Branch j is reached when every earlier set digit reads 1.
  std::uint64_t path = 0;
  std::size_t stage = 0;
  for (int bit = num_qubits - 1; bit >= 0; --bit) {
    const std::uint64_t digit = std::uint64_t{1} << bit;
    if (!(c & digit)) continue;
    const auto target = static_cast<unsigned>(bit);
    circuit.gates.push_back(
        {ControlledGate::Kind::kRy, target, path, path, angles.at(stage)});
    for (unsigned q = 0; q < target; ++q) {
      circuit.gates.push_back(
          {ControlledGate::Kind::kHadamard, q, path | digit, path, 0.0});
    }
    path |= digit;
    ++stage;
  }
  return circuit;
}

EncoderCost circuit_cost(const Circuit &circuit) {
  EncoderCost cost;
  for (const ControlledGate &g : circuit.gates) {
    if (g.kind == ControlledGate::Kind::kRy) {
      ++cost.rotations;
    } else {
      ++cost.hadamards;
    }
    cost.control_wires += static_cast<std::size_t>(g.num_controls());
  }
  return cost;
}

EncoderCost adder_cost(int num_qubits) {
  EncoderCost cost;
  if (num_qubits <= 0) return cost;
  const auto m = static_cast<std::size_t>(num_qubits);
  cost.adder_toffoli = 2 * m - 1;
  cost.adder_cnot = 5 * m - 3;
  cost.adder_x = 2 * m;
  return cost;
}

StateVector prepare_uniform_range(std::uint64_t c, int num_qubits) {
  const Circuit circuit = uniform_range_circuit(c, num_qubits);
  std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps[0] = 1.0;
  circuit.apply(amps);
  return StateVector::adopt(std::move(amps), num_qubits, 0);
}

StateVector modular_shift(const StateVector &state, std::int64_t drow, std::int64_t dcol) {
  const auto rows = static_cast<std::int64_t>(state.rows());
  const auto cols = static_cast<std::int64_t>(state.cols());
  const auto dr = static_cast<std::size_t>(((drow % rows) + rows) % rows);
  const auto dc = static_cast<std::size_t>(((dcol % cols) + cols) % cols);
  std::vector<Complex> out(state.size());
  kernels::omp::modular_shift(state.amplitudes(), out, state.rows(), state.cols(), dr, dc);
  return StateVector::adopt(std::move(out), state.n1(), state.n2());
}

void RectangleSpec::validate() const {
  if (n1 < 1 || n2 < 1 || n1 > 20 || n2 > 20) {
    throw Error(ErrorCode::kInvalidArgument, "rectangle frame must be 2^n1 x 2^n2 with n >= 1");
  }
  const std::size_t rows = std::size_t{1} << n1;
  const std::size_t cols = std::size_t{1} << n2;
  if (x1 + w > rows - 1 || y1 + h > cols - 1) {
    throw Error(ErrorCode::kOutOfRange, "rectangle out of frame");
  }
}

ImageBuffer rasterize_rectangle(const RectangleSpec &spec) {
  spec.validate();
  ImageBuffer image(std::size_t{1} << spec.n1, std::size_t{1} << spec.n2, 0.0);
  for (std::size_t i = spec.x1; i <= spec.x1 + spec.w; ++i) {
    for (std::size_t j = spec.y1; j <= spec.y1 + spec.h; ++j) image.set(i, j, 1.0);
  }
  return image;
}

StateVector prepare_rectangle(const RectangleSpec &spec) {
  spec.validate();
  std::vector<Complex> amps(std::size_t{1} << (spec.n1 + spec.n2), Complex{0.0, 0.0});
  amps[0] = 1.0;
  uniform_range_circuit(spec.w, spec.n1).apply(amps, static_cast<unsigned>(spec.n2));
  uniform_range_circuit(spec.h, spec.n2).apply(amps, 0);
  const StateVector corner = StateVector::adopt(std::move(amps), spec.n1, spec.n2);
  return modular_shift(corner, static_cast<std::int64_t>(spec.x1),
                       static_cast<std::int64_t>(spec.y1));
}

EncoderCost rectangle_encoder_cost(const RectangleSpec &spec) {
  spec.validate();
  EncoderCost cost = circuit_cost(uniform_range_circuit(spec.w, spec.n1));
  cost += circuit_cost(uniform_range_circuit(spec.h, spec.n2));
  // One constant adder per register, charged whether or not the offset is zero.
  cost += adder_cost(spec.n1);
  cost += adder_cost(spec.n2);
  return cost;
}

}  // namespace qimf
