// Copyright 2026 The eaqecc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "eaqecc/bitvec.hpp"
#include "eaqecc/pauli.hpp"
#include "eaqecc/rng.hpp"

namespace eaqecc {

/// Qubit Pauli channel: rho -> sum_i p_i sigma_i rho sigma_i.
struct PauliChannel {
  std::array<double, 4> p;  // (p_I, p_X, p_Y, p_Z)

  PauliChannel(double p_i, double p_x, double p_y, double p_z);

  double p_identity() const { return p[0]; }
};

/// Positions are erased i.i.d. with probability epsilon; erasure locations
/// are flagged classically and known to the decoder.
struct ErasureChannel {
  double epsilon;

  explicit ErasureChannel(double eps);
};

/// The state (I (x) Lambda)|Phi+><Phi+| of a single-qubit channel:
/// 4x4 Hermitian, unit trace, PSD (all within 1e-10).
class ChoiState {
 public:
  explicit ChoiState(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

  /// Eigenvalues in decreasing order (clamped to >= 0 at 1e-12 scale).
  std::array<double, 4> eigenvalues() const;

 private:
  Eigen::Matrix4cd m_;
};

/// Total non-identity probability p split evenly: (1-p, p/3, p/3, p/3).
PauliChannel depolarizing(double p);

/// (1-p, 0, 0, p); dephasing(0.5) is the total dephasing channel.
PauliChannel dephasing(double p);

/// Bell-diagonal Choi state whose eigenvalues are the Pauli probabilities.
ChoiState choi(const PauliChannel& ch);

/// Von Neumann entropy in bits; eigenvalues below 1e-14 contribute zero.
double entropy(const ChoiState& rho);

/// Shannon entropy of a probability vector (see numeric.hpp).
double entropy(std::span<const double> probs);

/// I.i.d. per-qubit Pauli sample.
PauliOperator sample_error(const PauliChannel& ch, uint32_t n, PhiloxRng& rng);

/// I.i.d. erased-position set.
BitVec sample_erasure(const ErasureChannel& ch, uint32_t n, PhiloxRng& rng);

/// log2 bound on the typical-error count: n*S(choi(ch)) + 2*n*delta.
double typical_set_log_size(const PauliChannel& ch, uint32_t n, double delta);

/// Erasure analogue: 2*n*epsilon + 2*n*delta.
double typical_set_log_size(const ErasureChannel& ch, uint32_t n, double delta);

/// PPT criterion on the Choi state (exact for two qubits). For Pauli
/// channels this reduces to max_i p_i <= 1/2.
bool is_entanglement_breaking(const PauliChannel& ch);
bool is_entanglement_breaking(const ChoiState& rho);

using ChannelVariant = std::variant<PauliChannel, ErasureChannel>;

struct ParsedChannel {
  ChannelVariant channel;
  std::string descriptor;  // canonical spec string
};

/// Parses "depolarizing:p", "dephasing:p", "erasure:eps" or
/// "pauli:pI,pX,pY,pZ". Throws std::invalid_argument on malformed input.
ParsedChannel parse_channel_spec(std::string_view spec);

std::string channel_descriptor(const ChannelVariant& ch);

}  // namespace eaqecc
