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

#include "eaqecc/bitvec.hpp"
#include "eaqecc/pauli.hpp"
#include "eaqecc/statevector.hpp"
#include "test_helpers.hpp"

using namespace eaqecc;
using eaqecc::testing::oracle_matrix;
using eaqecc::testing::oracle_single;
using eaqecc::testing::pauli_from_pattern;
using eaqecc::testing::random_pauli;

namespace {

bool matrices_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 0.0) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("BitVec basics, inline and heap storage") {
  for (uint32_t bits : {7U, 64U, 128U, 200U}) {
    BitVec v(bits);
    CHECK(v.none());
    v.set(bits - 1, true);
    v.set(0, true);
    CHECK(v.count() == 2);
    CHECK(v.get(bits - 1));
    BitVec w = v;
    w.flip(0);
    CHECK(w.count() == 1);
    CHECK(v.count() == 2);
    CHECK(v != w);
    CHECK((v ^ v).none());
    CHECK(BitVec::and_parity(v, v) == 0);
  }
  CHECK_THROWS_AS(BitVec(8).set(8, true), std::out_of_range);
  CHECK_THROWS_AS(BitVec(8) ^ BitVec(9), std::invalid_argument);
}

TEST_CASE("single-qubit matrices match the frozen convention") {
  // Y is the real product X*Z = [[0,-1],[1,0]], i.e. -i sigma_y.
  CHECK(matrices_equal(to_matrix(PauliOperator::from_string("I")), oracle_single('I')));
  CHECK(matrices_equal(to_matrix(PauliOperator::from_string("X")), oracle_single('X')));
  CHECK(matrices_equal(to_matrix(PauliOperator::from_string("Y")), oracle_single('Y')));
  CHECK(matrices_equal(to_matrix(PauliOperator::from_string("Z")), oracle_single('Z')));
  CHECK(matrices_equal(to_matrix(PauliOperator::from_string("-Y")), -oracle_single('Y')));
}

TEST_CASE("X*Y = Z and Y*X = -Z") {
  PauliOperator x = PauliOperator::from_string("X");
  PauliOperator y = PauliOperator::from_string("Y");
  CHECK(multiply(x, y) == PauliOperator::from_string("Z"));
  CHECK(multiply(y, x) == PauliOperator::from_string("-Z"));
  // Cross-check the second against the matrix oracle.
  CHECK(matrices_equal(oracle_matrix(y) * oracle_matrix(x),
                       oracle_matrix(PauliOperator::from_string("-Z"))));
}

TEST_CASE("identity is neutral") {
  PauliOperator id = PauliOperator::identity(1);
  for (const char* s : {"I", "X", "Y", "Z", "-X", "-Y"}) {
    PauliOperator p = PauliOperator::from_string(s);
    CHECK(multiply(id, p) == p);
    CHECK(multiply(p, id) == p);
  }
}

TEST_CASE("X (x) Z matches the Kronecker oracle") {
  PauliOperator xz = PauliOperator::from_string("XZ");
  CHECK(matrices_equal(to_matrix(xz), oracle_matrix(xz)));
}

TEST_CASE("exhaustive n<=2: multiply agrees with matrix products, signs stay real") {
  for (uint32_t n : {1U, 2U}) {
    uint64_t n_patterns = uint64_t{1} << (2 * n);
    for (uint64_t pa = 0; pa < n_patterns; ++pa) {
      for (int sa = 0; sa < 2; ++sa) {
        PauliOperator p = pauli_from_pattern(n, pa);
        if (sa) {
          p = p.negated();
        }
        CHECK(matrices_equal(to_matrix(p), oracle_matrix(p)));
        for (uint64_t pb = 0; pb < n_patterns; ++pb) {
          PauliOperator q = pauli_from_pattern(n, pb);
          PauliOperator prod = multiply(p, q);
          // The product is a +/-1-signed Pauli by construction; its matrix
          // must equal the literal matrix product entry for entry.
          CHECK(matrices_equal(oracle_matrix(prod), oracle_matrix(p) * oracle_matrix(q), 0.0));
        }
      }
    }
  }
}

TEST_CASE("multiply is associative (exhaustive n=2, sign-free inputs)") {
  const uint32_t n = 2;
  for (uint64_t pa = 0; pa < 16; ++pa) {
    for (uint64_t pb = 0; pb < 16; ++pb) {
      for (uint64_t pc = 0; pc < 16; ++pc) {
        PauliOperator p = pauli_from_pattern(n, pa);
        PauliOperator q = pauli_from_pattern(n, pb);
        PauliOperator r = pauli_from_pattern(n, pc);
        CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
      }
    }
  }
}

TEST_CASE("commutes matches matrix commutators, randomized n<=3") {
  PhiloxRng rng(0xC0117E5);
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    uint32_t n = 1 + static_cast<uint32_t>(rng.next_below(3));
    PauliOperator p = random_pauli(n, rng);
    PauliOperator q = random_pauli(n, rng);
    Eigen::MatrixXcd mp = oracle_matrix(p);
    Eigen::MatrixXcd mq = oracle_matrix(q);
    bool matrix_commute = matrices_equal(mp * mq, mq * mp, 0.0);
    CHECK(commutes(p, q) == matrix_commute);
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("canonical commutation facts") {
  CHECK_FALSE(commutes(PauliOperator::from_string("X"), PauliOperator::from_string("Z")));
  PhiloxRng rng(7);
  for (int i = 0; i < 50; ++i) {
    PauliOperator p = random_pauli(1 + static_cast<uint32_t>(rng.next_below(4)), rng);
    CHECK(commutes(p, p));
  }
  // Two anticommuting positions cancel: X1X vs ZYY commute overall.
  PauliOperator a = PauliOperator::from_string("X1X");
  PauliOperator b = PauliOperator::from_string("ZYY");
  CHECK(commutes(a, b));
  Eigen::MatrixXcd ma = oracle_matrix(a);
  Eigen::MatrixXcd mb = oracle_matrix(b);
  CHECK(matrices_equal(ma * mb, mb * ma));
}

TEST_CASE("weight counts non-identity factors") {
  CHECK(PauliOperator::from_string("III").weight() == 0);
  CHECK(PauliOperator::from_string("Z1Z").weight() == 2);
  CHECK(PauliOperator::from_string("XYZ").weight() == 3);
  PhiloxRng rng(11);
  for (int i = 0; i < 200; ++i) {
    uint32_t n = 1 + static_cast<uint32_t>(rng.next_below(8));
    PauliOperator p = random_pauli(n, rng);
    PauliOperator q = random_pauli(n, rng);
    CHECK(multiply(p, q).weight() <= p.weight() + q.weight());
  }
}

TEST_CASE("text form round-trips exactly") {
  CHECK(PauliOperator::from_string("-ZYY").str() == "-ZYY");
  CHECK(PauliOperator::from_string("Z1Z").str() == "ZIZ");  // '1' is an input alias
  PhiloxRng rng(13);
  for (int i = 0; i < 300; ++i) {
    uint32_t n = 1 + static_cast<uint32_t>(rng.next_below(70));
    PauliOperator p = random_pauli(n, rng);
    CHECK(PauliOperator::from_string(p.str()) == p);
  }
  CHECK_THROWS_AS(PauliOperator::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::from_string("-"), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::from_string("XQZ"), std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
  PauliOperator p = PauliOperator::from_string("XX");
  PauliOperator q = PauliOperator::from_string("X");
  CHECK_THROWS_AS(multiply(p, q), std::invalid_argument);
  CHECK_THROWS_AS(commutes(p, q), std::invalid_argument);
}

TEST_CASE("dense matrix cap") {
  CHECK_THROWS_AS(to_matrix(PauliOperator::identity(13)), std::out_of_range);
  CHECK_NOTHROW(to_matrix(PauliOperator::identity(13), 13));
}

TEST_CASE("even_y_parity tracks squaring behavior") {
  CHECK(PauliOperator::from_string("ZYY").even_y_parity());
  CHECK_FALSE(PauliOperator::from_string("Y").even_y_parity());
  PhiloxRng rng(17);
  for (int i = 0; i < 100; ++i) {
    PauliOperator p = random_pauli(1 + static_cast<uint32_t>(rng.next_below(6)), rng, false);
    PauliOperator sq = multiply(p, p);
    CHECK(sq.is_identity_mask());
    CHECK(sq.is_negative() == !p.even_y_parity());
  }
}

TEST_CASE("apply agrees with dense matrix action") {
  PhiloxRng rng(19);
  for (int i = 0; i < 50; ++i) {
    uint32_t n = 1 + static_cast<uint32_t>(rng.next_below(5));
    PauliOperator p = random_pauli(n, rng);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Random(1 << n);
    amp.normalize();
    StateVector v{n, amp};
    StateVector pv = apply(p, v);
    Eigen::VectorXcd expected = oracle_matrix(p) * amp;
    CHECK((pv.amp - expected).norm() < 1e-12);
  }
}
