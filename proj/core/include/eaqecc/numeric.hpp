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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace eaqecc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v, double tol = 0.0) const { return v >= lo - tol && v <= hi + tol; }
  bool valid() const { return lo <= hi; }
};

/// Binary entropy in bits; returns 0 at p in {0,1} by continuity.
inline double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("binary_entropy: p outside [0,1]");
  }
  if (p <= 0.0 || p >= 1.0) {
    return 0.0;
  }
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Shannon entropy in bits of a nonnegative vector summing to 1 (1e-9).
/// Entries below 1e-14 contribute zero.
inline double shannon_entropy(std::span<const double> probs) {
  double sum = 0.0;
  double h = 0.0;
  for (double p : probs) {
    if (p < -1e-12) {
      throw std::invalid_argument("shannon_entropy: negative probability");
    }
    sum += p;
    if (p > 1e-14) {
      h -= p * std::log2(p);
    }
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  }
  return h;
}

/// Wilson score interval at 95% confidence. Always contains failures/trials.
inline Interval wilson_ci95(uint64_t failures, uint64_t trials) {
  if (trials == 0) {
    throw std::invalid_argument("wilson_ci95: zero trials");
  }
  const double z = 1.959963984540054;
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(failures) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) {
    return "0";
  }
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline double log2_u128(unsigned __int128 v) {
  if (v == 0) {
    throw std::invalid_argument("log2_u128: zero");
  }
  return std::log2(static_cast<long double>(v));
}

}  // namespace eaqecc
