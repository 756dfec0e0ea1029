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

#include <doctest.h>

#include "eaqecc/gf2.hpp"
#include "eaqecc/json_io.hpp"
#include "eaqecc/stabilizer.hpp"
#include "eaqecc/statevector.hpp"
#include "test_helpers.hpp"

using namespace eaqecc;
using eaqecc::testing::pauli_from_pattern;
using eaqecc::testing::random_pauli;

namespace {

std::vector<PauliOperator> parse_all(std::initializer_list<const char*> strs) {
  std::vector<PauliOperator> out;
  for (const char* s : strs) {
    out.push_back(PauliOperator::from_string(s));
  }
  return out;
}

StabilizerCode repetition_code() {
  return StabilizerCode(3, 1, parse_all({"ZZI", "IZZ"}), parse_all({"XXX", "ZII"}));
}

StabilizerCode five_qubit_code() {
  return StabilizerCode(5, 1, parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
                        parse_all({"XXXXX", "ZZZZZ"}));
}

}  // namespace

TEST_CASE("validate accepts the repetition and five-qubit codes") {
  CHECK(validate(repetition_code()).ok);
  CHECK(validate(five_qubit_code()).ok);
}

TEST_CASE("validate rejects anticommuting generators with a diagnostic") {
  StabilizerCode bad(1, 0, parse_all({"X", "Z"}), {});
  CHECK_THROWS(StabilizerCode(1, 0, parse_all({"X", "Z", "Y"}), {}));
  ValidationReport report = validate(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("anticommute") != std::string::npos);
}

TEST_CASE("validate rejects dependent generators") {
  StabilizerCode bad(2, 0, parse_all({"ZZ", "ZZ"}), {});
  ValidationReport report = validate(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("dependent") != std::string::npos);
}

TEST_CASE("validate rejects odd-Y generators (square to -I)") {
  StabilizerCode bad(2, 1, parse_all({"YI"}), parse_all({"IX", "IZ"}));
  ValidationReport report = validate(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("-I") != std::string::npos);
}

TEST_CASE("validate rejects logicals inside the group or mispaired") {
  StabilizerCode in_group(3, 1, parse_all({"ZZI", "IZZ"}), parse_all({"XXX", "ZZI"}));
  CHECK_FALSE(validate(in_group).ok);
  StabilizerCode mispaired(3, 1, parse_all({"ZZI", "IZZ"}), parse_all({"XXX", "IIX"}));
  CHECK_FALSE(validate(mispaired).ok);
}

TEST_CASE("syndrome: stabilizer elements are invisible, XII flags (1,0)") {
  StabilizerCode code = repetition_code();
  for (const auto& s : group_elements(code)) {
    CHECK(syndrome(code, s).is_zero());
  }
  Syndrome s = syndrome(code, PauliOperator::from_string("XII"));
  CHECK(s.bits.get(0));
  CHECK_FALSE(s.bits.get(1));
  CHECK(s.value() == 1);
  CHECK_THROWS_AS(syndrome(code, PauliOperator::from_string("XI")), std::invalid_argument);
}

TEST_CASE("syndrome is linear: s(EF) = s(E) xor s(F)") {
  StabilizerCode code = five_qubit_code();
  PhiloxRng rng(23);
  for (int i = 0; i < 300; ++i) {
    PauliOperator e = random_pauli(5, rng);
    PauliOperator f = random_pauli(5, rng);
    CHECK(syndrome_bits(code, multiply(e, f)) ==
          (syndrome_bits(code, e) ^ syndrome_bits(code, f)));
  }
}

TEST_CASE("classify: identity, logical XXX, stabilizer Z1Z, detectable XII") {
  StabilizerCode code = repetition_code();
  CHECK(classify(code, PauliOperator::identity(3)).cls == ErrorClass::Stabilizer);

  Classification xbar = classify(code, PauliOperator::from_string("XXX"));
  CHECK(xbar.cls == ErrorClass::Logical);
  CHECK(xbar.logical.str() == "X");

  CHECK(classify(code, PauliOperator::from_string("Z1Z")).cls == ErrorClass::Stabilizer);
  CHECK(classify(code, PauliOperator::from_string("ZII")).cls == ErrorClass::Logical);
  CHECK(classify(code, PauliOperator::from_string("XII")).cls == ErrorClass::OutsideNormalizer);
}

TEST_CASE("classify respects cosets: classify(s*e) = classify(e)") {
  StabilizerCode code = five_qubit_code();
  auto elements = group_elements(code);
  PhiloxRng rng(29);
  for (int i = 0; i < 200; ++i) {
    PauliOperator e = random_pauli(5, rng);
    const PauliOperator& s = elements[rng.next_below(elements.size())];
    Classification c1 = classify(code, e);
    Classification c2 = classify(code, multiply(s, e));
    CHECK(c1.cls == c2.cls);
    CHECK(c1.logical == c2.logical);
  }
}

TEST_CASE("normalizer counts: |N(S)| = 4^k 2^(n-k)") {
  CHECK(normalizer_count_check(repetition_code()));
  CHECK(normalizer_count_check(five_qubit_code()));
  // Trivial code: every Pauli is in the normalizer, count 4 = 4^1 * 2^0.
  StabilizerCode trivial(1, 1, {}, parse_all({"X", "Z"}));
  CHECK(normalizer_count_check(trivial));
  StabilizerCode big = StabilizerCode::with_completed_logicals(
      7, 6, parse_all({"ZIIIIII"}));
  CHECK_THROWS_AS(normalizer_count_check(big), std::out_of_range);
}

TEST_CASE("distance: five-qubit 3, repetition 1, trivial 1") {
  CHECK(distance(five_qubit_code()) == 3);
  CHECK(distance(repetition_code()) == 1);  // weight-1 Zbar
  StabilizerCode trivial(2, 2, {}, parse_all({"XI", "ZI", "IX", "IZ"}));
  CHECK(distance(trivial) == 1);
}

TEST_CASE("codespace: stabilizer elements act as a constant sign (+1) on codewords") {
  for (const StabilizerCode& code : {repetition_code(), five_qubit_code()}) {
    auto basis = codeword_basis(code.n(), code.k(), code.generators());
    CHECK(basis.size() == 2);
    for (const auto& s : group_elements(code)) {
      for (const auto& cw : basis) {
        StateVector scw = apply(s, cw);
        CHECK((scw.amp - cw.amp).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("errors with nonzero syndrome map codewords to orthogonal states") {
  StabilizerCode code = five_qubit_code();
  auto basis = codeword_basis(code.n(), code.k(), code.generators());
  PhiloxRng rng(31);
  int tested = 0;
  while (tested < 100) {
    PauliOperator f = random_pauli(5, rng, false);
    if (syndrome(code, f).is_zero()) {
      continue;
    }
    ++tested;
    for (const auto& ci : basis) {
      StateVector fcj = apply(f, basis[rng.next_below(basis.size())]);
      CHECK(std::abs(inner(ci, fcj)) < 1e-9);
    }
  }
}

TEST_CASE("symplectic completion produces valid logicals") {
  auto gens = parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  StabilizerCode code = StabilizerCode::with_completed_logicals(5, 1, gens);
  CHECK(validate(code).ok);
  // The completed code classifies the textbook logicals as logical.
  CHECK(classify(code, PauliOperator::from_string("XXXXX")).cls == ErrorClass::Logical);
  CHECK(classify(code, PauliOperator::from_string("ZZZZZ")).cls == ErrorClass::Logical);

  auto rep = StabilizerCode::with_completed_logicals(3, 1, parse_all({"ZZI", "IZZ"}));
  CHECK(validate(rep).ok);

  PhiloxRng rng(37);
  for (int i = 0; i < 20; ++i) {
    // Random CSS-ish generator sets: diagonal Z patterns are always valid.
    uint32_t n = 4 + static_cast<uint32_t>(rng.next_below(4));
    std::vector<PauliOperator> zgens;
    gf2::Echelon span;
    while (zgens.size() < n - 2) {
      BitVec z(n);
      for (uint32_t q = 0; q < n; ++q) {
        if (rng.next_bool()) {
          z.set(q, true);
        }
      }
      PauliOperator g(BitVec(n), z, false);
      if (span.add(gf2::symplectic_row(g))) {
        zgens.push_back(g);
      }
    }
    StabilizerCode c = StabilizerCode::with_completed_logicals(n, 2, zgens);
    CHECK(validate(c).ok);
  }
}

TEST_CASE("stabilizer JSON round-trip") {
  StabilizerCode code = five_qubit_code();
  std::string text = to_json(code);
  StabilizerCode back = stabilizer_from_json(text);
  CHECK(back.n() == code.n());
  CHECK(back.k() == code.k());
  for (size_t i = 0; i < code.generators().size(); ++i) {
    CHECK(back.generators()[i] == code.generators()[i]);
  }
  for (size_t i = 0; i < code.logical_ops().size(); ++i) {
    CHECK(back.logical_ops()[i] == code.logical_ops()[i]);
  }
  // Without logical_ops the loader completes them.
  StabilizerCode completed = stabilizer_from_json(
      R"({"n": 3, "k": 1, "generators": ["ZZI", "IZZ"], "logical_ops": []})");
  CHECK(validate(completed).ok);
}
