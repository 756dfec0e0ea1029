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
#include <complex>
#include <cstdint>
#include <vector>

#include "eaqecc/pauli.hpp"

namespace eaqecc {

inline constexpr uint32_t kMaxDenseQubits = 12;

/// Dense amplitude vector on q <= 12 qubits, unit norm within 1e-10.
/// Qubit 0 is the most significant bit of the basis index, matching the
/// leftmost tensor factor in operator strings.
struct StateVector {
  uint32_t n_qubits = 0;
  Eigen::VectorXcd amp;

  static StateVector basis_state(uint32_t n_qubits, uint64_t index);

  /// (|00> + |11>)/sqrt(2) on two qubits: the shared e-bit resource state.
  static StateVector bell_pair();

  double norm() const { return amp.norm(); }
  bool is_normalized(double tol = 1e-10) const { return std::abs(norm() - 1.0) <= tol; }

  StateVector& normalize();
};

/// Tensor product; lhs qubits become the leading factors.
StateVector tensor(const StateVector& a, const StateVector& b);

std::complex<double> inner(const StateVector& a, const StateVector& b);

/// Applies a sign-tracked Pauli: |b> -> sign * (-1)^(z.b) |b xor x>.
StateVector apply(const PauliOperator& p, const StateVector& v);

/// Dense matrix of a Pauli under the group convention (Y = [[0,-1],[1,0]]).
/// Capped at `cap` qubits to keep exponential blowup deliberate.
Eigen::MatrixXcd to_matrix(const PauliOperator& p, uint32_t cap = kMaxDenseQubits);

/// Orthonormal basis of the joint +1 eigenspace of the signed generators.
/// Deterministic: projects computational basis states in index order.
/// Throws if the resulting dimension differs from 2^k.
std::vector<StateVector> codeword_basis(uint32_t n_qubits, uint32_t k,
                                        const std::vector<PauliOperator>& generators);

}  // namespace eaqecc
