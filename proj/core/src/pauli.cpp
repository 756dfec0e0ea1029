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

#include "eaqecc/pauli.hpp"

#include <stdexcept>

namespace eaqecc {

PauliOperator::PauliOperator(BitVec x, BitVec z, bool negative)
    : n_qubits_(x.size()), x_(std::move(x)), z_(std::move(z)), negative_(negative) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PauliOperator: x/z mask lengths differ");
  }
}

PauliOperator PauliOperator::identity(uint32_t n_qubits) {
  return PauliOperator(BitVec(n_qubits), BitVec(n_qubits), false);
}

PauliOperator PauliOperator::single(uint32_t n_qubits, uint32_t qubit, char kind) {
  if (qubit >= n_qubits) {
    throw std::out_of_range("PauliOperator::single: qubit out of range");
  }
  BitVec x(n_qubits);
  BitVec z(n_qubits);
  switch (kind) {
    case 'I':
    case '1':
      break;
    case 'X':
      x.set(qubit, true);
      break;
    case 'Y':
      x.set(qubit, true);
      z.set(qubit, true);
      break;
    case 'Z':
      z.set(qubit, true);
      break;
    default:
      throw std::invalid_argument("PauliOperator::single: unknown kind");
  }
  return PauliOperator(std::move(x), std::move(z), false);
}

PauliOperator PauliOperator::from_string(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw std::invalid_argument("PauliOperator::from_string: empty operator");
  }
  uint32_t n = static_cast<uint32_t>(s.size());
  BitVec x(n);
  BitVec z(n);
  for (uint32_t q = 0; q < n; ++q) {
    switch (s[q]) {
      case 'I':
      case '1':
        break;
      case 'X':
        x.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        break;
      case 'Z':
        z.set(q, true);
        break;
      default:
        throw std::invalid_argument(std::string("PauliOperator::from_string: bad character '") +
                                    s[q] + "'");
    }
  }
  return PauliOperator(std::move(x), std::move(z), negative);
}

std::string PauliOperator::str() const {
  std::string out;
  out.reserve(n_qubits_ + 1);
  if (negative_) {
    out.push_back('-');
  }
  for (uint32_t q = 0; q < n_qubits_; ++q) {
    out.push_back(pauli_char(q));
  }
  return out;
}

char PauliOperator::pauli_char(uint32_t q) const {
  bool x = x_.get(q);
  bool z = z_.get(q);
  if (x && z) {
    return 'Y';
  }
  if (x) {
    return 'X';
  }
  if (z) {
    return 'Z';
  }
  return 'I';
}

uint32_t PauliOperator::weight() const {
  uint32_t w = 0;
  for (uint32_t i = 0; i < x_.word_count(); ++i) {
    w += static_cast<uint32_t>(std::popcount(x_.word(i) | z_.word(i)));
  }
  return w;
}

bool PauliOperator::even_y_parity() const {
  return (BitVec::and_parity(x_, z_) & 1U) == 0;
}

PauliOperator PauliOperator::negated() const {
  return PauliOperator(x_, z_, !negative_);
}

PauliOperator PauliOperator::abs() const {
  return PauliOperator(x_, z_, false);
}

PauliOperator PauliOperator::embedded(uint32_t new_n, uint32_t offset) const {
  if (offset + n_qubits_ > new_n) {
    throw std::invalid_argument("PauliOperator::embedded: does not fit");
  }
  BitVec x(new_n);
  BitVec z(new_n);
  for (uint32_t q = 0; q < n_qubits_; ++q) {
    if (x_.get(q)) {
      x.set(offset + q, true);
    }
    if (z_.get(q)) {
      z.set(offset + q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), negative_);
}

PauliOperator PauliOperator::restricted(uint32_t begin, uint32_t end) const {
  if (begin > end || end > n_qubits_) {
    throw std::invalid_argument("PauliOperator::restricted: bad range");
  }
  uint32_t n = end - begin;
  BitVec x(n);
  BitVec z(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (x_.get(begin + q)) {
      x.set(q, true);
    }
    if (z_.get(begin + q)) {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), negative_);
}

bool PauliOperator::supported_within(uint32_t begin, uint32_t end) const {
  for (uint32_t q = 0; q < n_qubits_; ++q) {
    if (q >= begin && q < end) {
      continue;
    }
    if (x_.get(q) || z_.get(q)) {
      return false;
    }
  }
  return true;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("multiply: operator lengths differ");
  }
  bool extra = BitVec::and_parity(p.z_mask(), q.x_mask());
  bool negative = p.is_negative() ^ q.is_negative() ^ extra;
  return PauliOperator(p.x_mask() ^ q.x_mask(), p.z_mask() ^ q.z_mask(), negative);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("commutes: operator lengths differ");
  }
  return BitVec::and_parity(p.x_mask(), q.z_mask()) == BitVec::and_parity(p.z_mask(), q.x_mask());
}

}  // namespace eaqecc
