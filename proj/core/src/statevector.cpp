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

#include "eaqecc/statevector.hpp"

#include <stdexcept>

namespace eaqecc {

namespace {

void check_qubits(uint32_t n, uint32_t cap) {
  if (n > cap) {
    throw std::out_of_range("dense state-space cap exceeded");
  }
}

// Index-space bit masks: qubit q maps to bit (n-1-q) of the basis index.
uint64_t index_mask(const BitVec& qubit_mask, uint32_t n) {
  uint64_t m = 0;
  for (uint32_t q = 0; q < n; ++q) {
    if (qubit_mask.get(q)) {
      m |= uint64_t{1} << (n - 1 - q);
    }
  }
  return m;
}

}  // namespace

StateVector StateVector::basis_state(uint32_t n_qubits, uint64_t index) {
  check_qubits(n_qubits, kMaxDenseQubits);
  StateVector v;
  v.n_qubits = n_qubits;
  v.amp = Eigen::VectorXcd::Zero(int64_t{1} << n_qubits);
  v.amp(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

StateVector StateVector::bell_pair() {
  StateVector v;
  v.n_qubits = 2;
  v.amp = Eigen::VectorXcd::Zero(4);
  v.amp(0) = v.amp(3) = 1.0 / std::sqrt(2.0);
  return v;
}

StateVector& StateVector::normalize() {
  double n = norm();
  if (n <= 0.0) {
    throw std::invalid_argument("StateVector::normalize: zero vector");
  }
  amp /= n;
  return *this;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  check_qubits(a.n_qubits + b.n_qubits, kMaxDenseQubits);
  StateVector out;
  out.n_qubits = a.n_qubits + b.n_qubits;
  out.amp = Eigen::VectorXcd::Zero(a.amp.size() * b.amp.size());
  for (Eigen::Index i = 0; i < a.amp.size(); ++i) {
    for (Eigen::Index j = 0; j < b.amp.size(); ++j) {
      out.amp(i * b.amp.size() + j) = a.amp(i) * b.amp(j);
    }
  }
  return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("inner: qubit counts differ");
  }
  return a.amp.dot(b.amp);
}

StateVector apply(const PauliOperator& p, const StateVector& v) {
  if (p.n_qubits() != v.n_qubits) {
    throw std::invalid_argument("apply: qubit counts differ");
  }
  uint32_t n = v.n_qubits;
  uint64_t xm = index_mask(p.x_mask(), n);
  uint64_t zm = index_mask(p.z_mask(), n);
  double s = static_cast<double>(p.sign());
  StateVector out;
  out.n_qubits = n;
  out.amp = Eigen::VectorXcd::Zero(v.amp.size());
  for (uint64_t idx = 0; idx < static_cast<uint64_t>(v.amp.size()); ++idx) {
    double phase = (std::popcount(idx & zm) & 1U) ? -s : s;
    out.amp(static_cast<Eigen::Index>(idx ^ xm)) = phase * v.amp(static_cast<Eigen::Index>(idx));
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const PauliOperator& p, uint32_t cap) {
  check_qubits(p.n_qubits(), cap);
  static const auto mat_of = [](char c) {
    Eigen::Matrix2cd m;
    switch (c) {
      case 'I':
        m << 1, 0, 0, 1;
        break;
      case 'X':
        m << 0, 1, 1, 0;
        break;
      case 'Y':
        m << 0, -1, 1, 0;  // X*Z, i.e. -i sigma_y
        break;
      default:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
  };
  // Build from the last factor outward so qubit 0 is the outermost
  // (most significant) Kronecker factor.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, static_cast<double>(p.sign()));
  for (uint32_t qi = p.n_qubits(); qi-- > 0;) {
    Eigen::Matrix2cd f = mat_of(p.pauli_char(qi));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < 2; ++r) {
      for (Eigen::Index c = 0; c < 2; ++c) {
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = f(r, c) * out;
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<StateVector> codeword_basis(uint32_t n_qubits, uint32_t k,
                                        const std::vector<PauliOperator>& generators) {
  check_qubits(n_qubits, kMaxDenseQubits);
  const uint64_t dim = uint64_t{1} << n_qubits;
  const uint64_t want = uint64_t{1} << k;
  std::vector<StateVector> basis;
  for (uint64_t idx = 0; idx < dim && basis.size() < want; ++idx) {
    StateVector v = StateVector::basis_state(n_qubits, idx);
    for (const auto& g : generators) {
      StateVector gv = apply(g, v);
      v.amp = 0.5 * (v.amp + gv.amp);
    }
    // Modified Gram-Schmidt against the collected codewords.
    for (const auto& b : basis) {
      v.amp -= inner(b, v) * b.amp;
    }
    if (v.norm() > 1e-8) {
      v.normalize();
      basis.push_back(std::move(v));
    }
  }
  if (basis.size() != want) {
    throw std::logic_error("codeword_basis: codespace dimension != 2^k");
  }
  return basis;
}

}  // namespace eaqecc
