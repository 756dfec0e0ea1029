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

#include "eaqecc/eacode.hpp"

#include <cmath>
#include <stdexcept>

#include "eaqecc/gf2.hpp"
#include "eaqecc/rng.hpp"

namespace eaqecc {

EACode canonical_ea(uint32_t k, uint32_t m, uint32_t a) {
  if (k + m + a == 0) {
    throw std::invalid_argument("canonical_ea: k, m, a all zero");
  }
  uint32_t n_send = k + m + a;
  uint32_t n_ext = n_send + m;

  std::vector<PauliOperator> gens;
  gens.reserve(2 * static_cast<size_t>(m) + a);
  for (uint32_t j = 0; j < m; ++j) {
    uint32_t sender = k + j;
    uint32_t receiver = n_send + j;
    BitVec xx(n_ext);
    xx.set(sender, true);
    xx.set(receiver, true);
    gens.emplace_back(xx, BitVec(n_ext), false);
    BitVec zz(n_ext);
    zz.set(sender, true);
    zz.set(receiver, true);
    gens.emplace_back(BitVec(n_ext), zz, false);
  }
  for (uint32_t i = 0; i < a; ++i) {
    BitVec z(n_ext);
    z.set(k + m + i, true);
    gens.emplace_back(BitVec(n_ext), z, false);
  }

  std::vector<PauliOperator> logicals;
  logicals.reserve(2 * static_cast<size_t>(k));
  for (uint32_t i = 0; i < k; ++i) {
    logicals.push_back(PauliOperator::single(n_ext, i, 'X'));
    logicals.push_back(PauliOperator::single(n_ext, i, 'Z'));
  }

  return EACode{n_send, k, m, a,
                StabilizerCode(n_ext, k, std::move(gens), std::move(logicals))};
}

namespace {

// Sender-local tableau transvection. The axis H is a Pauli on the first
// n_send qubits with an odd Y count (so H*H = -I and (1 + sH)/sqrt(2) is a
// real orthogonal unitary); conjugation maps an anticommuting P to
// s * H * P and leaves commuting operators fixed. Restricting the axes to
// odd-Y vectors keeps every image generator squaring to +I, which vectors
// with even Y count would break under the +/-1 sign convention.
struct Transvection {
  PauliOperator axis;  // embedded on the extended qubits
  bool negative;

  PauliOperator apply(const PauliOperator& p) const {
    if (commutes(axis, p)) {
      return p;
    }
    PauliOperator out = multiply(axis, p);
    return negative ? out.negated() : out;
  }
};

Transvection random_transvection(uint32_t n_send, uint32_t n_ext, PhiloxRng& rng) {
  for (;;) {
    BitVec x(n_ext);
    BitVec z(n_ext);
    uint32_t y_parity = 0;
    bool nonzero = false;
    for (uint32_t q = 0; q < n_send; ++q) {
      bool xb = rng.next_bool();
      bool zb = rng.next_bool();
      if (xb) {
        x.set(q, true);
      }
      if (zb) {
        z.set(q, true);
      }
      nonzero |= xb || zb;
      y_parity ^= static_cast<uint32_t>(xb && zb);
    }
    if (!nonzero || y_parity == 0) {
      continue;
    }
    return Transvection{PauliOperator(std::move(x), std::move(z), false), rng.next_bool()};
  }
}

}  // namespace

EACode random_ea(uint32_t k, uint32_t m, uint32_t a, uint64_t seed) {
  EACode code = canonical_ea(k, m, a);
  uint32_t n_send = code.n_send;
  uint32_t n_ext = code.n_extended();
  PhiloxRng rng(seed);

  std::vector<PauliOperator> gens = code.extended.generators();
  std::vector<PauliOperator> logicals = code.extended.logical_ops();
  uint32_t mixing = 2 * n_send * n_send;
  for (uint32_t step = 0; step < mixing; ++step) {
    Transvection t = random_transvection(n_send, n_ext, rng);
    for (auto& g : gens) {
      g = t.apply(g);
    }
    for (auto& l : logicals) {
      l = t.apply(l);
    }
  }
  return EACode{n_send, k, m, a,
                StabilizerCode(n_ext, k, std::move(gens), std::move(logicals))};
}

EACode three_qubit_ea() {
  std::vector<PauliOperator> gens = {
      PauliOperator::from_string("IXIXI"),
      PauliOperator::from_string("ZZIZI"),
      PauliOperator::from_string("IIXIX"),
      PauliOperator::from_string("ZIZIZ"),
  };
  std::vector<PauliOperator> logicals = {
      PauliOperator::from_string("XXXII"),
      PauliOperator::from_string("ZIIII"),
  };
  return EACode{3, 1, 2, 0, StabilizerCode(5, 1, std::move(gens), std::move(logicals))};
}

std::vector<PauliOperator> three_qubit_ea_error_set() {
  std::vector<PauliOperator> flips = {
      PauliOperator::identity(3),
      PauliOperator::from_string("XII"),
      PauliOperator::from_string("IXI"),
      PauliOperator::from_string("IIX"),
  };
  std::vector<PauliOperator> phases = {
      PauliOperator::identity(3),
      PauliOperator::from_string("IZI"),
      PauliOperator::from_string("IIZ"),
      PauliOperator::from_string("IZZ"),
  };
  std::vector<PauliOperator> out;
  out.reserve(16);
  for (const auto& f : flips) {
    for (const auto& ph : phases) {
      out.push_back(multiply(f, ph));
    }
  }
  return out;
}

namespace {

// Basis-change table: input |abc> maps to (1/2) * sum of four signed basis
// states. Entries are (output index, sign).
struct BasisTerm {
  int out;
  int sign;
};
constexpr BasisTerm kBasisChange[8][4] = {
    {{0, 1}, {3, -1}, {5, 1}, {6, -1}},
    {{1, 1}, {2, 1}, {4, -1}, {7, -1}},
    {{1, -1}, {2, 1}, {4, 1}, {7, -1}},
    {{0, -1}, {3, -1}, {5, -1}, {6, -1}},
    {{1, -1}, {2, -1}, {4, -1}, {7, -1}},
    {{0, -1}, {3, 1}, {5, 1}, {6, -1}},
    {{0, -1}, {3, -1}, {5, 1}, {6, 1}},
    {{1, -1}, {2, 1}, {4, -1}, {7, 1}},
};

StateVector five_qubit_codeword(int message_bit) {
  StateVector v;
  v.n_qubits = 5;
  v.amp = Eigen::VectorXcd::Zero(32);
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      int in = message_bit * 4 + b1 * 2 + b2;
      for (const auto& term : kBasisChange[in]) {
        int idx = term.out * 4 + b1 * 2 + b2;
        v.amp(idx) += 0.25 * term.sign;
      }
    }
  }
  return v;
}

// Eigenvalue of p on the span of the two codewords, or 0 if p does not fix
// the span with a constant real sign.
int codespace_sign(const PauliOperator& p, const StateVector& c0, const StateVector& c1) {
  StateVector pc0 = apply(p, c0);
  StateVector pc1 = apply(p, c1);
  std::complex<double> l0 = inner(c0, pc0);
  std::complex<double> l1 = inner(c1, pc1);
  if (std::abs(l0.imag()) > 1e-9 || std::abs(l0 - l1) > 1e-9) {
    return 0;
  }
  double lam = l0.real();
  if (std::abs(std::abs(lam) - 1.0) > 1e-9) {
    return 0;
  }
  if ((pc0.amp - lam * c0.amp).norm() > 1e-9 || (pc1.amp - lam * c1.amp).norm() > 1e-9) {
    return 0;
  }
  return lam > 0 ? 1 : -1;
}

}  // namespace

FiveQubitResult five_qubit_from_basis_change() {
  StateVector c0 = five_qubit_codeword(0);
  StateVector c1 = five_qubit_codeword(1);

  // Collect the 16 signed Paulis fixing the codespace; extract 4
  // independent ones as generators.
  std::vector<PauliOperator> gens;
  gf2::Echelon span;
  size_t group_size = 0;
  for (uint64_t pattern = 0; pattern < 1024; ++pattern) {
    BitVec x(5);
    BitVec z(5);
    for (uint32_t q = 0; q < 5; ++q) {
      if ((pattern >> (2 * q)) & 1U) {
        x.set(q, true);
      }
      if ((pattern >> (2 * q + 1)) & 1U) {
        z.set(q, true);
      }
    }
    PauliOperator p(std::move(x), std::move(z), false);
    int sign = codespace_sign(p, c0, c1);
    if (sign == 0) {
      continue;
    }
    ++group_size;
    PauliOperator element = sign < 0 ? p.negated() : p;
    if (gens.size() < 4 && span.add(gf2::symplectic_row(element))) {
      gens.push_back(std::move(element));
    }
  }
  if (group_size != 16 || gens.size() != 4) {
    throw std::logic_error("five_qubit_from_basis_change: stabilizer reconstruction failed");
  }

  FiveQubitResult result{std::move(c0), std::move(c1),
                         StabilizerCode::with_completed_logicals(5, 1, std::move(gens)),
                         {}};
  for (const char* name : {"X1X", "ZYY", "YYZ"}) {
    PauliOperator op = PauliOperator::from_string(name).embedded(5, 0);
    int sign = codespace_sign(op, result.codeword0, result.codeword1);
    if (sign == 0) {
      throw std::logic_error("five_qubit_from_basis_change: sender-only element does not fix codespace");
    }
    result.unassisted_signs.emplace_back(name, sign);
  }
  return result;
}

namespace {

const std::array<Eigen::Matrix2cd, 4>& hermitian_sigmas() {
  static const std::array<Eigen::Matrix2cd, 4> mats = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    std::complex<double> im(0, 1);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -im, im, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats;
}

}  // namespace

StateVector TeleportCode::encode(const Eigen::Vector2cd& psi) const {
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("TeleportCode::encode: input not normalized");
  }
  StateVector out;
  out.n_qubits = 3;
  out.amp = Eigen::VectorXcd::Zero(8);
  for (int label = 0; label < 4; ++label) {
    Eigen::Vector2cd branch = hermitian_sigmas()[static_cast<size_t>(label)] * psi;
    out.amp(2 * label) = 0.5 * branch(0);
    out.amp(2 * label + 1) = 0.5 * branch(1);
  }
  return out;
}

StateVector TeleportCode::apply_label_error(const StateVector& encoded,
                                            const PauliOperator& err) const {
  if (err.n_qubits() != 2) {
    throw std::invalid_argument("TeleportCode: label error must act on 2 qubits");
  }
  return apply(err.embedded(3, 0), encoded);
}

std::array<TeleportCode::DecodeBranch, 4> TeleportCode::decode(const StateVector& encoded) const {
  if (encoded.n_qubits != 3) {
    throw std::invalid_argument("TeleportCode::decode: expected 3 qubits");
  }
  std::array<DecodeBranch, 4> branches;
  for (int label = 0; label < 4; ++label) {
    Eigen::Vector2cd slice(encoded.amp(2 * label), encoded.amp(2 * label + 1));
    double prob = slice.squaredNorm();
    Eigen::Vector2cd corrected = hermitian_sigmas()[static_cast<size_t>(label)] * slice;
    if (prob > 1e-15) {
      corrected /= corrected.norm();
    }
    branches[static_cast<size_t>(label)] = DecodeBranch{prob, corrected};
  }
  return branches;
}

bool TeleportCode::corrects(const PauliOperator& label_error) const {
  const std::array<Eigen::Vector2cd, 4> probes = {
      Eigen::Vector2cd(1, 0),
      Eigen::Vector2cd(0, 1),
      Eigen::Vector2cd(1 / std::sqrt(2.0), 1 / std::sqrt(2.0)),
      Eigen::Vector2cd(1 / std::sqrt(2.0), std::complex<double>(0, 1) / std::sqrt(2.0)),
  };
  for (const auto& psi : probes) {
    StateVector noisy = apply_label_error(encode(psi), label_error);
    for (const auto& branch : decode(noisy)) {
      if (branch.probability < 1e-12) {
        continue;
      }
      if (std::abs(std::abs(psi.dot(branch.payload)) - 1.0) > 1e-9) {
        return false;
      }
    }
  }
  return true;
}

double TeleportCode::exact_fail_prob(const PauliChannel& ch) const {
  double fail = 0.0;
  for (int t0 = 0; t0 < 4; ++t0) {
    for (int t1 = 0; t1 < 4; ++t1) {
      double prob = ch.p[static_cast<size_t>(t0)] * ch.p[static_cast<size_t>(t1)];
      if (prob == 0.0) {
        continue;
      }
      const char kinds[] = {'I', 'X', 'Y', 'Z'};
      PauliOperator err = multiply(PauliOperator::single(2, 0, kinds[t0]),
                                   PauliOperator::single(2, 1, kinds[t1]));
      if (!corrects(err)) {
        fail += prob;
      }
    }
  }
  return fail;
}

PauliOperator embed_sender_error(const EACode& code, const PauliOperator& error) {
  if (error.n_qubits() == code.n_send) {
    return error.embedded(code.n_extended(), 0);
  }
  if (error.n_qubits() == code.n_extended()) {
    if (!error.supported_within(0, code.n_send)) {
      throw std::invalid_argument("error has support on receiver halves");
    }
    return error;
  }
  throw std::invalid_argument("error length matches neither transmitted nor extended qubits");
}

bool correctable(const EACode& code, const std::vector<PauliOperator>& errors) {
  std::vector<PauliOperator> embedded;
  embedded.reserve(errors.size());
  std::vector<uint64_t> synd;
  synd.reserve(errors.size());
  for (const auto& e : errors) {
    embedded.push_back(embed_sender_error(code, e));
    synd.push_back(syndrome_bits(code.extended, embedded.back()));
  }
  for (size_t i = 0; i < embedded.size(); ++i) {
    for (size_t j = i + 1; j < embedded.size(); ++j) {
      if (synd[i] != synd[j]) {
        continue;
      }
      if (logical_signature(code.extended, multiply(embedded[i], embedded[j])) != 0) {
        return false;
      }
    }
  }
  return true;
}

DegeneracyParams degeneracy_params(const EACode& code) {
  // Combinations of generators whose receiver parts cancel form the
  // transmitted-part stabilizer; its size is 2^(kernel dimension).
  std::vector<BitVec> receiver_rows;
  receiver_rows.reserve(code.extended.generators().size());
  for (const auto& g : code.extended.generators()) {
    PauliOperator r = g.restricted(code.n_send, code.n_extended());
    receiver_rows.push_back(gf2::symplectic_row(r));
  }
  uint32_t dim = static_cast<uint32_t>(receiver_rows.size()) - gf2::rank(receiver_rows);
  return DegeneracyParams{uint64_t{1} << dim,
                          static_cast<double>(code.a) / static_cast<double>(code.n_send)};
}

uint64_t count_receiver_trivial_elements(const EACode& code) {
  uint64_t count = 0;
  for (const auto& element : group_elements(code.extended)) {
    if (element.supported_within(0, code.n_send)) {
      ++count;
    }
  }
  return count;
}

ValidationReport validate_ea(const EACode& code) {
  if (code.n_send != code.k + code.m + code.a) {
    return {false, "n_send != k + m + a"};
  }
  if (code.extended.n() != code.n_extended()) {
    return {false, "extended code qubit count != n_send + m"};
  }
  if (code.extended.k() != code.k) {
    return {false, "extended code logical count != k"};
  }
  if (code.extended.generators().size() != 2 * static_cast<size_t>(code.m) + code.a) {
    return {false, "generator count != 2m + a"};
  }
  ValidationReport inner = validate(code.extended);
  if (!inner.ok) {
    return inner;
  }
  if (degeneracy_params(code).stabilizer_size != (uint64_t{1} << code.a)) {
    return {false, "transmitted-part stabilizer size != 2^a"};
  }
  return {true, ""};
}

}  // namespace eaqecc
