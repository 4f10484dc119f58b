// Copyright 2026 The NCF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ncf {

/// Fixed-length packed bit vector. Bit i lives in word i / 64 at position i % 64;
/// padding bits above size() are always zero.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t num_bits);

    std::size_t size() const noexcept { return num_bits_; }
    std::size_t num_words() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    std::size_t count() const noexcept;

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const noexcept;

    /// Indices of all set bits in increasing order.
    std::vector<std::size_t> set_bits() const;

    BitVec &operator^=(const BitVec &other) noexcept;
    BitVec &operator&=(const BitVec &other) noexcept;
    BitVec &operator|=(const BitVec &other) noexcept;

    friend BitVec operator^(BitVec a, const BitVec &b) noexcept { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) noexcept { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) noexcept { return a |= b; }

    friend bool operator==(const BitVec &, const BitVec &) = default;

    /// Parity of popcount(a & b).
    static bool dot(const BitVec &a, const BitVec &b) noexcept;

    std::size_t hash() const noexcept;

  private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ncf

template <>
struct std::hash<ncf::BitVec> {
    std::size_t operator()(const ncf::BitVec &v) const noexcept { return v.hash(); }
};
