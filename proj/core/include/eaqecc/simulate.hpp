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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eaqecc/channel.hpp"
#include "eaqecc/eacode.hpp"
#include "eaqecc/numeric.hpp"

namespace eaqecc {

enum class DecodeMode { ExactML, BoundedWeight };

/// Syndrome -> correction lookup. Exact ML tables cover every syndrome;
/// bounded-weight tables give up (decode failure) on uncovered syndromes,
/// so an emitted correction always matches the error syndrome.
class DecoderTable {
 public:
  DecodeMode mode() const { return mode_; }
  uint32_t w_max() const { return w_max_; }

  /// Correction on the extended qubits (zero receiver support), or null
  /// when the table does not cover the syndrome.
  const PauliOperator* correction(uint64_t syndrome_bits) const;

  /// Same correction restricted to the transmitted qubits.
  std::optional<PauliOperator> correction_on_sent(uint64_t syndrome_bits,
                                                  uint32_t n_send) const;

 private:
  friend DecoderTable build_decoder(const EACode&, const PauliChannel&, DecodeMode, uint32_t);
  friend DecoderTable build_random_decoder(const EACode&, uint64_t);

  DecodeMode mode_ = DecodeMode::ExactML;
  uint32_t w_max_ = 0;
  std::vector<PauliOperator> dense_;           // exact: indexed by syndrome value
  std::unordered_map<uint64_t, PauliOperator> sparse_;  // bounded weight
};

inline constexpr uint32_t kExactDecoderMaxQubits = 10;
inline constexpr uint32_t kBoundedDecoderMaxQubits = 14;
inline constexpr uint32_t kDefaultWMax = 3;

/// Maximum-likelihood table: enumerates all 4^n_send errors (exact mode,
/// n_send <= 10), accumulates probability per (syndrome, logical class)
/// cell and picks the argmax class per syndrome. Ties break toward the
/// lexicographically smallest error string. Bounded mode enumerates errors
/// of weight <= w_max instead (n_send <= 14).
DecoderTable build_decoder(const EACode& code, const PauliChannel& ch,
                           DecodeMode mode = DecodeMode::ExactML,
                           uint32_t w_max = kDefaultWMax);

/// Alternative table with a uniformly random syndrome-consistent correction
/// per syndrome; a reference point that exact ML must never lose to.
DecoderTable build_random_decoder(const EACode& code, uint64_t seed);

/// Sum over all 4^n_send errors of channel probability times [residual not
/// in the stabilizer]. Requires n_send <= 10.
double exact_fail_prob(const EACode& code, const PauliChannel& ch, const DecoderTable& decoder);

struct SimResult {
  uint64_t trials = 0;
  uint64_t failures = 0;
  double p_fail = 0.0;
  Interval ci95;
  uint64_t seed = 0;
  uint32_t n = 0, k = 0, m = 0, a = 0;
  std::string channel;
};

/// Seeded Monte Carlo failure estimate. Trial i draws from a counter-based
/// stream keyed by (seed, i), so results are identical for any worker
/// count.
SimResult monte_carlo(const EACode& code, const ChannelVariant& ch, uint64_t trials,
                      uint64_t seed, uint32_t workers = 1);

/// Teleportation-code variant (Pauli noise on the two label qubits).
SimResult monte_carlo(const TeleportCode& code, const PauliChannel& ch, uint64_t trials,
                      uint64_t seed, uint32_t workers = 1);

/// True iff some Pauli supported on the erased transmitted positions is a
/// logical error (in N(S)\S of the extended code). GF(2) rank shortcut.
bool erasure_decode_failure(const EACode& code, const BitVec& erased);

/// Enumeration reference for the rank shortcut; |erased| <= 12.
bool erasure_decode_failure_enum(const EACode& code, const BitVec& erased);

struct SweepPoint {
  uint32_t n = 0, k = 0, m = 0, a = 0;
  double rate = 0.0;
  uint32_t n_codes = 0;
  uint64_t trials_per_code = 0;
  uint64_t total_trials = 0;
  uint64_t total_failures = 0;
  double p_fail = 0.0;  // mean of per-code estimates
  std::vector<double> per_code_p_fail;
  Interval ci95;  // pooled Wilson interval
  double appendix_bound = 0.0;
  uint64_t seed = 0;
  std::string channel;
};

/// Analytic random-coding failure bound (display reference, clamped to 1):
/// Pauli channels 2^(n(S + 2R - 2 + 2 delta)), erasure 2^(2n(eps - 1 + R +
/// delta)).
double appendix_fail_bound(const ChannelVariant& ch, uint32_t n, double rate, double delta);

/// Per block length n: k = round(R n), m = n - k, a = 0; averages p_fail
/// over n_codes random codes at `trials` each.
std::vector<SweepPoint> random_code_sweep(const std::vector<uint32_t>& ns, double rate,
                                          const ChannelVariant& ch, uint64_t trials,
                                          uint64_t seed, uint32_t n_codes = 20,
                                          uint32_t workers = 1, double delta = 0.05);

}  // namespace eaqecc
