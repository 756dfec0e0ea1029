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
#include <string>
#include <vector>

#include "eaqecc/channel.hpp"
#include "eaqecc/stabilizer.hpp"
#include "eaqecc/statevector.hpp"

namespace eaqecc {

/// Entanglement-assisted code: k message qubits, m e-bits and a unentangled
/// ancillas are encoded into n_send = k + m + a transmitted qubits. The
/// receiver halves of the e-bits are the last m qubits of the extended
/// code and never see channel noise.
///
/// Transmitted-qubit layout of the canonical construction: message qubits
/// first, then e-bit sender halves, then unentangled ancillas.
struct EACode {
  uint32_t n_send;
  uint32_t k;
  uint32_t m;
  uint32_t a;
  StabilizerCode extended;  // n_send + m qubits, k logical, 2m + a generators

  uint32_t n_extended() const { return n_send + m; }
};

/// Canonical construction: per e-bit j the pair X_j X_Bj, Z_j Z_Bj; per
/// unentangled ancilla a single Z generator; logical X/Z on the message
/// qubits. Requires k+m+a > 0.
EACode canonical_ea(uint32_t k, uint32_t m, uint32_t a);

/// canonical_ea conjugated by a random sender-local tableau transformation
/// (a mixing sequence of 2*n_send^2 sign-tracked transvections, see the
/// module notes). Deterministic for a fixed seed.
EACode random_ea(uint32_t k, uint32_t m, uint32_t a, uint64_t seed);

/// The entanglement-assisted repetition code (k=1, m=2, a=0): corrects any
/// single bit flip on the transmitted qubits together with any phase
/// pattern on transmitted qubits 1 and 2, while Z on qubit 0 is a logical
/// error.
EACode three_qubit_ea();

/// The 16-element claim set of three_qubit_ea: {<=1 bit flip} x {Z patterns
/// on transmitted qubits 1, 2}.
std::vector<PauliOperator> three_qubit_ea_error_set();

struct FiveQubitResult {
  StateVector codeword0;  // encoded |0>, 5 qubits (3 sent + 2 receiver)
  StateVector codeword1;  // encoded |1>
  StabilizerCode code;    // reconstructed from the codewords
  /// Observed eigenvalue sign of each sender-only stabilizer element
  /// (operators given on the 3 transmitted qubits).
  std::vector<std::pair<std::string, int>> unassisted_signs;
};

/// Builds the five-qubit code by applying the 8-line basis-change unitary
/// to |k> (x) two e-bit halves, reconstructs its stabilizer group from the
/// two codewords, and records the sender-only stabilizer signs.
FiveQubitResult five_qubit_from_basis_change();

/// Rate-1/2 code built on the teleportation protocol: two label qubits are
/// transmitted, the payload qubit stays with the receiver. Any Z pattern on
/// the label qubits is corrected exactly; the code protects only against
/// the dephasing error set.
class TeleportCode {
 public:
  uint32_t n_send() const { return 2; }
  uint32_t k() const { return 1; }
  uint32_t m() const { return 1; }
  uint32_t a() const { return 0; }
  double rate() const { return 0.5; }

  /// |Phi>> = (1/2) sum_b |b> (x) sigma_b |psi> over the four 2-bit labels,
  /// with sigma_00..sigma_11 = I, sigma_x, sigma_y, sigma_z (Hermitian).
  StateVector encode(const Eigen::Vector2cd& psi) const;

  /// Applies a 2-qubit Pauli to the transmitted label qubits.
  StateVector apply_label_error(const StateVector& encoded, const PauliOperator& err) const;

  struct DecodeBranch {
    double probability;       // outcome probability of the label measurement
    Eigen::Vector2cd payload; // corrected payload state (normalized)
  };

  /// Measures the two label qubits and applies the matching correction to
  /// the payload, branch by branch.
  std::array<DecodeBranch, 4> decode(const StateVector& encoded) const;

  /// True iff decode(encode(psi)) returns psi (up to global phase) on every
  /// branch, for every input state.
  bool corrects(const PauliOperator& label_error) const;

  /// Sum of channel probabilities of the uncorrected 2-qubit label errors.
  double exact_fail_prob(const PauliChannel& ch) const;
};

/// Pairwise error distinguishability: every same-syndrome pair must differ
/// by a stabilizer element. Errors are given on the transmitted qubits (or
/// pre-embedded on the extended code with empty receiver support).
bool correctable(const EACode& code, const std::vector<PauliOperator>& errors);

struct DegeneracyParams {
  uint64_t stabilizer_size;  // elements of the extended group trivial on receiver halves
  double degeneracy_ratio;   // a / n_send
};

/// Structural count of extended-stabilizer elements acting as identity on
/// the receiver halves; equals 2^a for the canonical and random
/// constructions.
DegeneracyParams degeneracy_params(const EACode& code);

/// Enumeration cross-check of degeneracy_params (requires 2m+a <= 20).
uint64_t count_receiver_trivial_elements(const EACode& code);

/// EACode bookkeeping plus extended-code validation. Also checks the
/// structural stabilizer size against 2^a.
ValidationReport validate_ea(const EACode& code);

/// Embeds a transmitted-qubit error into the extended code, rejecting any
/// support on the receiver halves.
PauliOperator embed_sender_error(const EACode& code, const PauliOperator& error);

}  // namespace eaqecc
