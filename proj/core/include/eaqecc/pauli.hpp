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

#include <cstdint>
#include <string>
#include <string_view>

#include "eaqecc/bitvec.hpp"

namespace eaqecc {

/// Sign-tracked n-qubit Pauli in symplectic (x-mask, z-mask) form.
///
/// The group convention is X = sigma_x, Z = sigma_z and Y = X*Z (the real
/// matrix [[0,-1],[1,0]]), so every group product carries a plain +/-1 sign
/// and no imaginary phase can ever appear. Per-qubit bit encoding:
/// (x=0,z=0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
///
/// Note Y*Y = -I under this convention: an operator squares to +I exactly
/// when it contains an even number of Y factors (see even_y_parity()).
class PauliOperator {
 public:
  PauliOperator() = default;

  PauliOperator(BitVec x, BitVec z, bool negative = false);

  static PauliOperator identity(uint32_t n_qubits);

  /// Builds a weight<=1 operator: kind is one of 'I','X','Y','Z'.
  static PauliOperator single(uint32_t n_qubits, uint32_t qubit, char kind);

  /// Parses the text form: optional leading '-' (or '+'), then one of
  /// {I,X,Y,Z} per qubit, leftmost character = qubit 0. '1' is accepted as
  /// an alias for I on input; printing always uses 'I'.
  static PauliOperator from_string(std::string_view s);

  std::string str() const;

  uint32_t n_qubits() const { return n_qubits_; }
  const BitVec& x_mask() const { return x_; }
  const BitVec& z_mask() const { return z_; }

  int sign() const { return negative_ ? -1 : +1; }
  bool is_negative() const { return negative_; }

  /// True when both masks are zero regardless of sign.
  bool is_identity_mask() const { return x_.none() && z_.none(); }

  /// Number of qubits with a non-identity tensor factor.
  uint32_t weight() const;

  bool x_bit(uint32_t q) const { return x_.get(q); }
  bool z_bit(uint32_t q) const { return z_.get(q); }
  char pauli_char(uint32_t q) const;

  /// Even number of Y factors <=> the operator squares to +I.
  bool even_y_parity() const;

  PauliOperator negated() const;

  /// Same masks, sign forced positive.
  PauliOperator abs() const;

  /// Pads with identity factors up to new_n qubits, original qubit q
  /// landing at offset+q.
  PauliOperator embedded(uint32_t new_n, uint32_t offset = 0) const;

  /// Restriction to qubits [begin, end); sign is preserved.
  PauliOperator restricted(uint32_t begin, uint32_t end) const;

  /// True when all non-identity factors lie in [begin, end).
  bool supported_within(uint32_t begin, uint32_t end) const;

  bool operator==(const PauliOperator& o) const {
    return n_qubits_ == o.n_qubits_ && negative_ == o.negative_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliOperator& o) const { return !(*this == o); }

 private:
  uint32_t n_qubits_ = 0;
  BitVec x_;
  BitVec z_;
  bool negative_ = false;
};

/// Group product with exact +/-1 sign: masks XOR, and the sign picks up
/// (-1)^popcount(z_p & x_q) from commuting Z factors of p past X factors
/// of q. Throws on length mismatch.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// True iff the symplectic inner product x_p.z_q + z_p.x_q vanishes mod 2.
/// Signs are irrelevant. Throws on length mismatch.
bool commutes(const PauliOperator& p, const PauliOperator& q);

inline uint32_t weight(const PauliOperator& p) { return p.weight(); }

}  // namespace eaqecc
