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

#include "ncf/bitvec.hpp"

#include <algorithm>

namespace ncf {

BitVec::BitVec(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

bool BitVec::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t BitVec::first_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) {
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
    }
    return num_bits_;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w != 0) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVec &BitVec::operator^=(const BitVec &other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool BitVec::dot(const BitVec &a, const BitVec &b) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
        acc ^= a.words_[k] & b.words_[k];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVec::hash() const noexcept {
    // splitmix-style mixing per word
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ num_bits_;
    for (auto w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace ncf
