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

namespace eaqecc {

/// Counter-based Philox-4x32-10 generator.
///
/// A stream is keyed by (seed, stream) and is independent of every other
/// stream, so per-trial streams keyed by the trial index give results that
/// cannot depend on how trials are partitioned across workers.
class PhiloxRng {
 public:
  explicit PhiloxRng(uint64_t seed, uint64_t stream = 0)
      : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
        stream_lo_(static_cast<uint32_t>(stream)),
        stream_hi_(static_cast<uint32_t>(stream >> 32)) {}

  uint32_t next_u32() {
    if (idx_ == 4) {
      refill();
    }
    return buf_[idx_++];
  }

  uint64_t next_u64() {
    uint64_t lo = next_u32();
    uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) via rejection sampling.
  uint64_t next_below(uint64_t bound) {
    if (bound == 0) {
      return 0;
    }
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) {
        return r % bound;
      }
    }
  }

  bool next_bool() { return next_u32() & 1U; }

 private:
  static constexpr uint32_t kW32A = 0x9E3779B9;
  static constexpr uint32_t kW32B = 0xBB67AE85;
  static constexpr uint32_t kM4x32A = 0xD2511F53;
  static constexpr uint32_t kM4x32B = 0xCD9E8D57;

  static void mul_hi_lo(uint32_t a, uint32_t b, uint32_t* lo, uint32_t* hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    *lo = static_cast<uint32_t>(p);
    *hi = static_cast<uint32_t>(p >> 32);
  }

  void refill() {
    std::array<uint32_t, 4> ctr = {static_cast<uint32_t>(block_),
                                   static_cast<uint32_t>(block_ >> 32), stream_lo_, stream_hi_};
    std::array<uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      uint32_t lo0;
      uint32_t hi0;
      uint32_t lo1;
      uint32_t hi1;
      mul_hi_lo(kM4x32A, ctr[0], &lo0, &hi0);
      mul_hi_lo(kM4x32B, ctr[2], &lo1, &hi1);
      std::array<uint32_t, 4> next = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      ctr = next;
      key[0] += kW32A;
      key[1] += kW32B;
    }
    buf_ = ctr;
    ++block_;
    idx_ = 0;
  }

  std::array<uint32_t, 2> key_;
  uint32_t stream_lo_;
  uint32_t stream_hi_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buf_ = {0, 0, 0, 0};
  int idx_ = 4;
};

/// Deterministic seed derivation for sub-streams (code indices, etc).
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
  PhiloxRng rng(seed, ~salt);
  return rng.next_u64();
}

}  // namespace eaqecc
