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
#include <vector>

#include "eaqecc/bitvec.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc {

/// One bit per generator: 0 = commutes, 1 = anticommutes.
struct Syndrome {
  BitVec bits;

  bool is_zero() const { return bits.none(); }
  bool operator==(const Syndrome& o) const { return bits == o.bits; }

  /// Packed value (generator i -> bit i); requires <= 64 generators.
  uint64_t value() const;
};

struct ValidationReport {
  bool ok = true;
  std::string detail;
};

/// An [[n, k]] stabilizer code: n-k independent pairwise-commuting
/// generators plus 2k logical operators stored interleaved as
/// Xbar_0, Zbar_0, Xbar_1, Zbar_1, ...
///
/// Every generator must square to +I (even Y-parity); together with
/// independence this guarantees -I is not in the generated group.
class StabilizerCode {
 public:
  StabilizerCode(uint32_t n, uint32_t k, std::vector<PauliOperator> generators,
                 std::vector<PauliOperator> logical_ops);

  /// Derives logical operators by canonical symplectic completion
  /// (Gaussian elimination over GF(2)).
  static StabilizerCode with_completed_logicals(uint32_t n, uint32_t k,
                                                std::vector<PauliOperator> generators);

  uint32_t n() const { return n_; }
  uint32_t k() const { return k_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  const std::vector<PauliOperator>& logical_ops() const { return logical_ops_; }

  const PauliOperator& logical_x(uint32_t i) const { return logical_ops_[2 * i]; }
  const PauliOperator& logical_z(uint32_t i) const { return logical_ops_[2 * i + 1]; }

 private:
  uint32_t n_;
  uint32_t k_;
  std::vector<PauliOperator> generators_;
  std::vector<PauliOperator> logical_ops_;
};

/// Checks all StabilizerCode invariants; on failure the report names the
/// first violated pair or property.
ValidationReport validate(const StabilizerCode& code);

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error);

/// Packed syndrome for codes with <= 64 generators (hot path).
uint64_t syndrome_bits(const StabilizerCode& code, const PauliOperator& error);

/// Packed commutation signature against the 2k logical operators: bit 2i =
/// anticommutes with Zbar_i (an Xbar_i component), bit 2i+1 = anticommutes
/// with Xbar_i (a Zbar_i component). Zero iff the error acts trivially on
/// the encoded qubits.
uint64_t logical_signature(const StabilizerCode& code, const PauliOperator& error);

enum class ErrorClass { Stabilizer, Logical, OutsideNormalizer };

struct Classification {
  ErrorClass cls = ErrorClass::Stabilizer;
  /// Logical action as a k-qubit Pauli (identity unless cls == Logical).
  PauliOperator logical;
};

/// Splits zero-syndrome errors into the image of S versus N(S)\S with the
/// logical action identified via commutation with the logical operators.
Classification classify(const StabilizerCode& code, const PauliOperator& error);

/// Exhaustively counts sign-free Paulis commuting with every generator and
/// compares with 4^k * 2^(n-k). Requires n <= 6.
bool normalizer_count_check(const StabilizerCode& code);

/// Minimum weight of an element of N(S)\S, by enumeration in increasing
/// weight. Requires n <= 10.
uint32_t distance(const StabilizerCode& code);

/// All 2^(n-k) signed elements of the generated group, products taken in
/// generator-index order. Requires n-k <= 20.
std::vector<PauliOperator> group_elements(const StabilizerCode& code);

}  // namespace eaqecc
