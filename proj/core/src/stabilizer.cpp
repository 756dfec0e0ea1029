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

#include "eaqecc/stabilizer.hpp"

#include <stdexcept>

#include "eaqecc/gf2.hpp"

namespace eaqecc {

uint64_t Syndrome::value() const {
  if (bits.size() > 64) {
    throw std::out_of_range("Syndrome::value: more than 64 generators");
  }
  return bits.size() == 0 ? 0 : bits.word(0) & (bits.size() == 64 ? ~uint64_t{0}
                                                                  : ((uint64_t{1} << bits.size()) - 1));
}

StabilizerCode::StabilizerCode(uint32_t n, uint32_t k, std::vector<PauliOperator> generators,
                               std::vector<PauliOperator> logical_ops)
    : n_(n), k_(k), generators_(std::move(generators)), logical_ops_(std::move(logical_ops)) {
  if (k_ > n_) {
    throw std::invalid_argument("StabilizerCode: k > n");
  }
  if (generators_.size() != n_ - k_) {
    throw std::invalid_argument("StabilizerCode: expected n-k generators");
  }
  if (logical_ops_.size() != 2 * static_cast<size_t>(k_)) {
    throw std::invalid_argument("StabilizerCode: expected 2k logical operators");
  }
  for (const auto& g : generators_) {
    if (g.n_qubits() != n_) {
      throw std::invalid_argument("StabilizerCode: generator length mismatch");
    }
  }
  for (const auto& l : logical_ops_) {
    if (l.n_qubits() != n_) {
      throw std::invalid_argument("StabilizerCode: logical operator length mismatch");
    }
  }
}

StabilizerCode StabilizerCode::with_completed_logicals(uint32_t n, uint32_t k,
                                                       std::vector<PauliOperator> generators) {
  auto logicals = gf2::complete_logicals(n, generators);
  if (logicals.size() != 2 * static_cast<size_t>(k)) {
    throw std::invalid_argument("with_completed_logicals: generator count inconsistent with k");
  }
  return StabilizerCode(n, k, std::move(generators), std::move(logicals));
}

ValidationReport validate(const StabilizerCode& code) {
  const auto& gens = code.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].even_y_parity()) {
      return {false, "generator " + std::to_string(i) + " (" + gens[i].str() +
                         ") squares to -I (odd Y count)"};
    }
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        return {false, "generators " + std::to_string(i) + " (" + gens[i].str() + ") and " +
                           std::to_string(j) + " (" + gens[j].str() + ") anticommute"};
      }
    }
  }

  gf2::Echelon span;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!span.add(gf2::symplectic_row(gens[i]))) {
      return {false, "generator " + std::to_string(i) + " (" + gens[i].str() +
                         ") is dependent on earlier generators"};
    }
  }

  const auto& logs = code.logical_ops();
  for (size_t i = 0; i < logs.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (!commutes(logs[i], gens[j])) {
        return {false, "logical " + std::to_string(i) + " anticommutes with generator " +
                           std::to_string(j)};
      }
    }
    if (span.contains(gf2::symplectic_row(logs[i]))) {
      return {false, "logical " + std::to_string(i) + " (" + logs[i].str() +
                         ") lies in the generated group"};
    }
  }
  for (uint32_t i = 0; i < code.k(); ++i) {
    for (uint32_t j = 0; j < code.k(); ++j) {
      bool want_anti = i == j;
      if (commutes(code.logical_x(i), code.logical_z(j)) == want_anti) {
        return {false, "logical pairing violated between Xbar_" + std::to_string(i) +
                           " and Zbar_" + std::to_string(j)};
      }
      if (i < j) {
        if (!commutes(code.logical_x(i), code.logical_x(j)) ||
            !commutes(code.logical_z(i), code.logical_z(j))) {
          return {false, "logical operators " + std::to_string(i) + "," + std::to_string(j) +
                             " of equal type anticommute"};
        }
      }
    }
  }

  // Combined independence: logicals must extend the group span.
  gf2::Echelon full = span;
  for (size_t i = 0; i < logs.size(); ++i) {
    if (!full.add(gf2::symplectic_row(logs[i]))) {
      return {false, "logical " + std::to_string(i) + " dependent on generators and earlier logicals"};
    }
  }
  return {true, ""};
}

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error) {
  if (error.n_qubits() != code.n()) {
    throw std::invalid_argument("syndrome: error length mismatch");
  }
  const auto& gens = code.generators();
  Syndrome s;
  s.bits = BitVec(static_cast<uint32_t>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!commutes(gens[i], error)) {
      s.bits.set(static_cast<uint32_t>(i), true);
    }
  }
  return s;
}

uint64_t syndrome_bits(const StabilizerCode& code, const PauliOperator& error) {
  const auto& gens = code.generators();
  if (gens.size() > 64) {
    throw std::out_of_range("syndrome_bits: more than 64 generators");
  }
  uint64_t s = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    s |= static_cast<uint64_t>(!commutes(gens[i], error)) << i;
  }
  return s;
}

uint64_t logical_signature(const StabilizerCode& code, const PauliOperator& error) {
  if (code.k() > 32) {
    throw std::out_of_range("logical_signature: more than 32 logical qubits");
  }
  uint64_t sig = 0;
  for (uint32_t i = 0; i < code.k(); ++i) {
    sig |= static_cast<uint64_t>(!commutes(code.logical_z(i), error)) << (2 * i);
    sig |= static_cast<uint64_t>(!commutes(code.logical_x(i), error)) << (2 * i + 1);
  }
  return sig;
}

Classification classify(const StabilizerCode& code, const PauliOperator& error) {
  if (error.n_qubits() != code.n()) {
    throw std::invalid_argument("classify: error length mismatch");
  }
  Classification result;
  result.logical = PauliOperator::identity(code.k());
  for (const auto& g : code.generators()) {
    if (!commutes(g, error)) {
      result.cls = ErrorClass::OutsideNormalizer;
      return result;
    }
  }
  uint64_t sig = logical_signature(code, error);
  if (sig == 0) {
    result.cls = ErrorClass::Stabilizer;
    return result;
  }
  result.cls = ErrorClass::Logical;
  BitVec x(code.k());
  BitVec z(code.k());
  for (uint32_t i = 0; i < code.k(); ++i) {
    if ((sig >> (2 * i)) & 1U) {
      x.set(i, true);  // anticommutes with Zbar_i -> Xbar_i component
    }
    if ((sig >> (2 * i + 1)) & 1U) {
      z.set(i, true);
    }
  }
  result.logical = PauliOperator(std::move(x), std::move(z), false);
  return result;
}

bool normalizer_count_check(const StabilizerCode& code) {
  if (code.n() > 6) {
    throw std::out_of_range("normalizer_count_check: n > 6");
  }
  uint32_t n = code.n();
  uint64_t count = 0;
  for (uint64_t pattern = 0; pattern < (uint64_t{1} << (2 * n)); ++pattern) {
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
    PauliOperator p(std::move(x), std::move(z), false);
    bool in_normalizer = true;
    for (const auto& g : code.generators()) {
      if (!commutes(g, p)) {
        in_normalizer = false;
        break;
      }
    }
    count += in_normalizer ? 1 : 0;
  }
  uint64_t expected = (uint64_t{1} << (2 * code.k())) * (uint64_t{1} << (code.n() - code.k()));
  return count == expected;
}

namespace {

// Enumerates errors of exactly the given weight, recursing over support
// positions; returns the first N(S)\S hit or nothing.
bool weight_search(const StabilizerCode& code, PauliOperator& scratch, uint32_t next_qubit,
                   uint32_t remaining, gf2::Echelon& gen_span) {
  if (remaining == 0) {
    for (const auto& g : code.generators()) {
      if (!commutes(g, scratch)) {
        return false;
      }
    }
    return !gen_span.contains(gf2::symplectic_row(scratch));
  }
  for (uint32_t q = next_qubit; q + remaining <= code.n(); ++q) {
    for (char kind : {'X', 'Y', 'Z'}) {
      PauliOperator saved = scratch;
      scratch = multiply(scratch, PauliOperator::single(code.n(), q, kind));
      if (weight_search(code, scratch, q + 1, remaining - 1, gen_span)) {
        return true;
      }
      scratch = saved;
    }
  }
  return false;
}

}  // namespace

uint32_t distance(const StabilizerCode& code) {
  if (code.n() > 10) {
    throw std::out_of_range("distance: n > 10");
  }
  gf2::Echelon gen_span;
  for (const auto& g : code.generators()) {
    gen_span.add(gf2::symplectic_row(g));
  }
  for (uint32_t w = 1; w <= code.n(); ++w) {
    PauliOperator scratch = PauliOperator::identity(code.n());
    if (weight_search(code, scratch, 0, w, gen_span)) {
      return w;
    }
  }
  throw std::logic_error("distance: no logical operator found");
}

std::vector<PauliOperator> group_elements(const StabilizerCode& code) {
  size_t n_gens = code.generators().size();
  if (n_gens > 20) {
    throw std::out_of_range("group_elements: too many generators to enumerate");
  }
  std::vector<PauliOperator> elements;
  elements.reserve(size_t{1} << n_gens);
  for (uint64_t subset = 0; subset < (uint64_t{1} << n_gens); ++subset) {
    PauliOperator p = PauliOperator::identity(code.n());
    for (size_t i = 0; i < n_gens; ++i) {
      if ((subset >> i) & 1U) {
        p = multiply(p, code.generators()[i]);
      }
    }
    elements.push_back(std::move(p));
  }
  return elements;
}

}  // namespace eaqecc
