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
#include <vector>

#include "eaqecc/bitvec.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc::gf2 {

/// Incrementally maintained reduced row-echelon basis over GF(2).
class Echelon {
 public:
  /// Adds a row; returns true iff it was independent of the current basis.
  bool add(BitVec row);

  /// True iff row lies in the span of the added rows.
  bool contains(BitVec row) const;

  uint32_t rank() const { return static_cast<uint32_t>(rows_.size()); }

 private:
  std::vector<BitVec> rows_;
  std::vector<uint32_t> pivots_;
};

/// Rank of the matrix whose rows are the given equal-width bit vectors.
uint32_t rank(const std::vector<BitVec>& rows);

/// True iff v lies in the row span of basis.
bool in_span(const std::vector<BitVec>& basis, const BitVec& v);

/// Basis of { v : row_i . v = 0 for all i } in GF(2)^width.
std::vector<BitVec> kernel(const std::vector<BitVec>& rows, uint32_t width);

/// Basis of { c : sum_i c_i row_i = 0 } (combinations of rows that vanish).
std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows);

/// Symplectic vector [x | z] of a Pauli (2n bits).
BitVec symplectic_row(const PauliOperator& p);

/// Dual vector [z | x]; symplectic_row(a) . symplectic_dual_row(b) is the
/// commutation parity of a and b.
BitVec symplectic_dual_row(const PauliOperator& p);

PauliOperator pauli_from_symplectic(const BitVec& row);

/// Completes n-k independent commuting generators on n qubits to a full
/// logical operator set: returns 2k sign-positive operators interleaved as
/// Xbar_0, Zbar_0, Xbar_1, Zbar_1, ... Each pair anticommutes internally,
/// commutes with everything else and with all generators.
std::vector<PauliOperator> complete_logicals(uint32_t n_qubits,
                                             const std::vector<PauliOperator>& generators);

}  // namespace eaqecc::gf2
