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

#ifndef QIMF_ENCODING_H
#define QIMF_ENCODING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qimf/image.h"
#include "qimf/kernels.h"
#include "qimf/state.h"

namespace qimf {

struct EncodedImage {
  StateVector state;
  double norm_sq;  // M = sum of squared pixels
};

/// Amplitude encoding: amplitude at k = i * N2 + j is F(i, j) / sqrt(M).
EncodedImage encode_image(const ImageBuffer &image);

/// Renders |amplitude| as a pixel, rescaled so the brightest pixel is 1.
/// A zero state renders as an all-zero image.
ImageBuffer decode_state(const StateVector &state);

// ---------------------------------------------------------------------------
// Uniform-range state preparation.

struct IntervalBlock {
  std::uint64_t start;
  std::uint64_t size;
  bool operator==(const IntervalBlock &) const = default;
};

/// Split of [0, C] into contiguous blocks, one per set binary digit of C
/// (that digit cleared, all lower digits free) followed by the singleton {C}.
struct IntervalPartition {
  std::uint64_t upper;  // C
  std::vector<IntervalBlock> blocks;
};

IntervalPartition interval_partition(std::uint64_t c);

/// theta_j = 2 acos(sqrt(M_j / R_{j-1})) for every block but the last, where
/// R_{j-1} counts the elements not yet assigned (R_0 = C + 1).
std::vector<double> rotation_angles(const IntervalPartition &partition);

/// Single-qubit gate with an arbitrary set of (positive or negative) controls.
struct ControlledGate {
  enum class Kind { kHadamard, kRy };

  Kind kind;
  unsigned target;
  std::uint64_t control_mask = 0;
  std::uint64_t control_values = 0;
  double angle = 0.0;

  kernels::Mat2 matrix() const;
  int num_controls() const;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<ControlledGate> gates;

  /// Runs the gates on `amplitudes`, with circuit qubit q mapped to bit q + offset.
  void apply(std::span<Complex> amplitudes, unsigned qubit_offset = 0) const;
};

/// Gate tally for an encoder. A gate with c controls is charged 1 + 2c
/// elementary gates (Toffoli-ladder decomposition with borrowed ancillas).
struct EncoderCost {
  std::size_t rotations = 0;
  std::size_t hadamards = 0;
  std::size_t control_wires = 0;
  std::size_t adder_toffoli = 0;
  std::size_t adder_cnot = 0;
  std::size_t adder_x = 0;

  std::size_t total() const {
    return rotations + hadamards + 2 * control_wires + adder_toffoli + adder_cnot + adder_x;
  }
  EncoderCost &operator+=(const EncoderCost &other);
};

/// Controlled-R_y cascade over the set digits of C, each branch finished by
/// Hadamards on its free digits. Requires C < 2^num_qubits.
Circuit uniform_range_circuit(std::uint64_t c, int num_qubits);

EncoderCost circuit_cost(const Circuit &circuit);

/// Ripple-carry adder of a classical constant into an m-qubit register.
EncoderCost adder_cost(int num_qubits);

/// Simulates `uniform_range_circuit(c, num_qubits)` on |0>. Result has n1 =
/// num_qubits, n2 = 0.
StateVector prepare_uniform_range(std::uint64_t c, int num_qubits);

/// Moves the amplitude at (i, j) to ((i + drow) mod N1, (j + dcol) mod N2).
StateVector modular_shift(const StateVector &state, std::int64_t drow, std::int64_t dcol);

/// Inclusive rectangle [x1, x1 + w] x [y1, y1 + h] in an N1 x N2 frame; x runs
/// along rows (i), y along columns (j).
struct RectangleSpec {
  std::size_t w = 0;
  std::size_t h = 0;
  std::size_t x1 = 0;
  std::size_t y1 = 0;
  int n1 = 1;
  int n2 = 1;

  void validate() const;
};

/// White rectangle on a black background.
ImageBuffer rasterize_rectangle(const RectangleSpec &spec);

/// U_w (x) U_h on |0>|0>, then the modular translation to (x1, y1).
StateVector prepare_rectangle(const RectangleSpec &spec);

EncoderCost rectangle_encoder_cost(const RectangleSpec &spec);

}  // namespace qimf

#endif  // QIMF_ENCODING_H
