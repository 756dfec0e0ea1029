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

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace eaqecc {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Vectors of up to 128 bits live entirely inline (no heap allocation), so
/// Pauli masks stay allocation-free on the Monte Carlo hot path. Bits past
/// the logical length are kept zero at all times.
class BitVec {
 public:
  static constexpr uint32_t kWordBits = 64;
  static constexpr uint32_t kInlineWords = 2;

  BitVec() = default;

  explicit BitVec(uint32_t n_bits)
      : n_bits_(n_bits), n_words_((n_bits + kWordBits - 1) / kWordBits) {
    if (n_words_ > kInlineWords) {
      heap_ = new uint64_t[n_words_]();
    } else {
      words_[0] = words_[1] = 0;
    }
  }

  BitVec(const BitVec& other) : n_bits_(other.n_bits_), n_words_(other.n_words_) {
    if (n_words_ > kInlineWords) {
      heap_ = new uint64_t[n_words_];
      std::memcpy(heap_, other.heap_, n_words_ * sizeof(uint64_t));
    } else {
      words_[0] = other.words_[0];
      words_[1] = other.words_[1];
    }
  }

  BitVec(BitVec&& other) noexcept
      : n_bits_(other.n_bits_), n_words_(other.n_words_), heap_(other.heap_) {
    words_[0] = other.words_[0];
    words_[1] = other.words_[1];
    other.heap_ = nullptr;
    other.n_bits_ = 0;
    other.n_words_ = 0;
  }

  BitVec& operator=(const BitVec& other) {
    if (this == &other) {
      return *this;
    }
    BitVec tmp(other);
    swap(tmp);
    return *this;
  }

  BitVec& operator=(BitVec&& other) noexcept {
    if (this == &other) {
      return *this;
    }
    delete[] heap_;
    n_bits_ = other.n_bits_;
    n_words_ = other.n_words_;
    heap_ = other.heap_;
    words_[0] = other.words_[0];
    words_[1] = other.words_[1];
    other.heap_ = nullptr;
    other.n_bits_ = 0;
    other.n_words_ = 0;
    return *this;
  }

  ~BitVec() { delete[] heap_; }

  void swap(BitVec& other) noexcept {
    std::swap(n_bits_, other.n_bits_);
    std::swap(n_words_, other.n_words_);
    std::swap(heap_, other.heap_);
    std::swap(words_[0], other.words_[0]);
    std::swap(words_[1], other.words_[1]);
  }

  uint32_t size() const { return n_bits_; }
  uint32_t word_count() const { return n_words_; }

  const uint64_t* data() const { return heap_ ? heap_ : words_; }
  uint64_t* data() { return heap_ ? heap_ : words_; }

  uint64_t word(uint32_t w) const { return data()[w]; }

  bool get(uint32_t i) const {
    check_index(i);
    return (data()[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  void set(uint32_t i, bool v) {
    check_index(i);
    uint64_t mask = uint64_t{1} << (i % kWordBits);
    uint64_t& w = data()[i / kWordBits];
    w = v ? (w | mask) : (w & ~mask);
  }

  void flip(uint32_t i) {
    check_index(i);
    data()[i / kWordBits] ^= uint64_t{1} << (i % kWordBits);
  }

  void clear() {
    uint64_t* w = data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      w[i] = 0;
    }
  }

  uint32_t count() const {
    uint32_t c = 0;
    const uint64_t* w = data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      c += static_cast<uint32_t>(std::popcount(w[i]));
    }
    return c;
  }

  bool any() const {
    const uint64_t* w = data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      if (w[i] != 0) {
        return true;
      }
    }
    return false;
  }

  bool none() const { return !any(); }

  BitVec& operator^=(const BitVec& o) {
    check_same(o);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      a[i] ^= b[i];
    }
    return *this;
  }

  BitVec& operator&=(const BitVec& o) {
    check_same(o);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      a[i] &= b[i];
    }
    return *this;
  }

  BitVec& operator|=(const BitVec& o) {
    check_same(o);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      a[i] |= b[i];
    }
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec& o) const {
    if (n_bits_ != o.n_bits_) {
      return false;
    }
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (uint32_t i = 0; i < n_words_; ++i) {
      if (a[i] != b[i]) {
        return false;
      }
    }
    return true;
  }

  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// popcount(a & b) mod 2, without materializing the AND.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    a.check_same(b);
    uint64_t acc = 0;
    const uint64_t* pa = a.data();
    const uint64_t* pb = b.data();
    for (uint32_t i = 0; i < a.n_words_; ++i) {
      acc ^= pa[i] & pb[i];
    }
    return std::popcount(acc) & 1U;
  }

 private:
  void check_index(uint32_t i) const {
    if (i >= n_bits_) {
      throw std::out_of_range("BitVec index out of range");
    }
  }
  void check_same(const BitVec& o) const {
    if (n_bits_ != o.n_bits_) {
      throw std::invalid_argument("BitVec length mismatch");
    }
  }

  uint32_t n_bits_ = 0;
  uint32_t n_words_ = 0;
  uint64_t* heap_ = nullptr;  // null -> inline storage
  uint64_t words_[kInlineWords] = {0, 0};
};

}  // namespace eaqecc
