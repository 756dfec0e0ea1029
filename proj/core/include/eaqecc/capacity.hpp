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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eaqecc/channel.hpp"
#include "eaqecc/numeric.hpp"

namespace eaqecc {

struct EaCapacityResult {
  double C_E = 0.0;
  double Q_E = 0.0;  // always C_E / 2
  std::array<double, 3> argmax_bloch{0.0, 0.0, 0.0};
  double optimizer_value = 0.0;                // direct-search maximum
  std::optional<double> shortcut_value;        // 2 - S(choi), unital channels
};

/// Maximizes S(rho) + S(L rho) - S((I (x) L)|phi><phi|) over single-qubit
/// rho (Bloch-ball grid + compass search, objective tolerance 1e-8). For
/// Pauli channels the returned C_E is the closed form 2 - S(choi) with the
/// optimizer kept as a cross-check.
EaCapacityResult ea_capacity(const PauliChannel& ch);

/// Generic single-qubit channel given by its Choi state (Kraus operators
/// recovered from the eigendecomposition); optimizer path only.
EaCapacityResult ea_capacity(const ChoiState& rho);

/// Erasure channel closed forms: C_E = 2 - 2 eps, Q_E = 1 - eps.
EaCapacityResult ea_capacity(const ErasureChannel& ch);

struct ErasureCapacities {
  double C_E, Q_E, Q, C, E_Q;
  Interval E_C;
};

/// Full erasure ledger: C_E = 2-2e, Q_E = 1-e, Q = max(1-2e, 0), C = 1-e,
/// E_Q = e exactly, E_C in [1-e, 1].
ErasureCapacities erasure_capacities(double eps);

struct HammingCheck {
  bool ok = false;
  double slack_log2 = 0.0;  // log2(rhs / lhs)
  unsigned __int128 lhs = 0;
  unsigned __int128 rhs = 0;
};

/// Finite-length check 2^k sum_{j<=t} 3^j C(n,j) <= 2^(2n-k) in exact
/// integer arithmetic (n <= 60).
HammingCheck ea_hamming_ok(uint32_t n, uint32_t k, uint32_t t);

/// Asymptotic rate bound 1 - (p/2) log2(3) - H(p)/2, p in [0, 3/4].
double ea_hamming_rate(double p);

/// Family bound 1 - (M/(M+1)) (p log2(3) + H(p)) for entanglement
/// E = (1-R)/M per channel; M = 1 reproduces ea_hamming_rate.
double hamming_family(double p, double M);

/// Bound with explicit entanglement budget: 1 + E - p log2(3) - H(p).
double ea_hamming_with_entanglement(double p, double E);

/// M -> infinity limit of the family: 1 - p log2(3) - H(p).
double unassisted_hamming_rate(double p);

/// Hashing distillable-entanglement lower bound 1 - S(rho) for a
/// Bell-diagonal state (may be negative; callers clamp for display).
double hashing_lower_bound(std::span<const double> bell_diag_probs);

struct BoundEntry {
  std::string id;
  std::string direction;  // "lower" or "upper"
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  std::string relation;  // formula the entry instantiates
};

struct EntanglementLedger {
  Interval E_Q;
  Interval E_C;
  double E_Q_random = 0.0;  // 1 - Q_E
  std::vector<BoundEntry> entries;
};

/// Emits every entanglement-requirement inequality instantiated with the
/// inputs and derives the E_Q / E_C intervals. C and Q may be unknown.
/// Exact values (when a closed form exists) override the intervals.
/// Throws if C_E != 2 Q_E.
EntanglementLedger entanglement_ledger(std::optional<double> C, std::optional<double> Q,
                                       double C_E, double Q_E,
                                       std::optional<double> E_Q_exact = std::nullopt,
                                       std::optional<Interval> E_C_exact = std::nullopt);

struct ConjectureReport {
  bool predicts_zero = false;       // Q_E < E_Q branch
  Interval quantum_prediction;      // Q_E - E_Q over the interval
  std::optional<Interval> classical_prediction;  // C_E - E_C, when applicable
  std::optional<bool> consistent_quantum;
  std::optional<bool> consistent_classical;
  bool conjecture_consistent = true;  // no known value contradicts it
};

/// Two-sided consistency report for the conjectured equality
/// Q = Q_E - E_Q = C_E - E_C; never asserts it as a theorem.
ConjectureReport conjecture_report(std::optional<double> C, std::optional<double> Q,
                                   double C_E, double Q_E, Interval E_C, Interval E_Q);

struct CapacityLedger {
  std::string channel;
  double C_E = 0.0;
  double Q_E = 0.0;
  std::optional<double> C;
  std::optional<double> Q;
  Interval E_Q_bounds;
  Interval E_C_bounds;
  double E_Q_random = 0.0;
  std::vector<BoundEntry> bounds;
  bool entanglement_breaking = false;
  bool unital = false;
  std::optional<bool> conjecture_consistent;
  std::optional<double> hashing_bound;  // raw 1 - S value, Pauli channels
  EaCapacityResult capacity;
};

/// Assembles the full per-channel ledger: capacities, known closed-form C
/// and Q (identity, dephasing, erasure), entanglement bounds, flags and the
/// conjecture report.
CapacityLedger ledger_for_channel(const ParsedChannel& pc);

}  // namespace eaqecc
