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

#include "eaqecc/pauli.hpp"
#include "eaqecc/rng.hpp"

namespace eaqecc::testing {

// Independent dense oracle: frozen single-qubit matrices under the group
// convention (Y is the real product X*Z) combined by an explicit Kronecker
// product. Deliberately does not share code with to_matrix().
inline Eigen::Matrix2cd oracle_single(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -1, 1, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("oracle_single: bad kind");
  }
  return m;
}

inline Eigen::MatrixXcd oracle_matrix(const PauliOperator& p) {
  // Qubit 0 is the leftmost tensor factor: apply factors from the last
  // qubit outward so it ends up most significant.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, static_cast<double>(p.sign()));
  for (uint32_t qi = p.n_qubits(); qi-- > 0;) {
    Eigen::Matrix2cd f = oracle_single(p.pauli_char(qi));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = f(r, c) * out;
      }
    }
    out = std::move(next);
  }
  return out;
}

inline PauliOperator random_pauli(uint32_t n, PhiloxRng& rng, bool random_sign = true) {
  BitVec x(n);
  BitVec z(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (rng.next_bool()) {
      x.set(q, true);
    }
    if (rng.next_bool()) {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), random_sign && rng.next_bool());
}

// Sign-free Pauli from a 2n-bit pattern, for exhaustive enumerations.
inline PauliOperator pauli_from_pattern(uint32_t n, uint64_t pattern) {
  BitVec x(n);
  BitVec z(n);
  for (uint32_t q = 0; q < n; ++q) {
    if ((pattern >> (2 * q)) & 1U) {
      x.set(q, true);
    }
    if ((pattern >> (2 * q + 1)) & 1U) {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), false);
}

}  // namespace eaqecc::testing
