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

#include <gtest/gtest.h>

#include <unordered_set>

using ncf::BitVec;

TEST(bitvec, starts_clear) {
    BitVec v(130);
    EXPECT_EQ(v.size(), 130u);
    EXPECT_EQ(v.num_words(), 3u);
    EXPECT_TRUE(v.none());
    EXPECT_EQ(v.count(), 0u);
    EXPECT_EQ(v.first_set(), 130u);
}

TEST(bitvec, set_get_flip_across_words) {
    BitVec v(130);
    v.set(0, true);
    v.set(64, true);
    v.flip(129);
    EXPECT_TRUE(v.get(0));
    EXPECT_TRUE(v.get(64));
    EXPECT_TRUE(v.get(129));
    EXPECT_FALSE(v.get(63));
    EXPECT_EQ(v.count(), 3u);
    EXPECT_EQ(v.set_bits(), (std::vector<std::size_t>{0, 64, 129}));
    v.set(0, false);
    EXPECT_EQ(v.first_set(), 64u);
}

TEST(bitvec, xor_and_or) {
    BitVec a(70), b(70);
    a.set(1, true);
    a.set(69, true);
    b.set(69, true);
    b.set(5, true);
    EXPECT_EQ((a ^ b).set_bits(), (std::vector<std::size_t>{1, 5}));
    EXPECT_EQ((a & b).set_bits(), (std::vector<std::size_t>{69}));
    EXPECT_EQ((a | b).count(), 3u);
    EXPECT_TRUE(BitVec::dot(a, b));
    b.set(1, true);
    EXPECT_FALSE(BitVec::dot(a, b));
}

TEST(bitvec, hash_consistent_with_equality) {
    BitVec a(10), b(10);
    a.set(3, true);
    b.set(3, true);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
    std::unordered_set<BitVec> s{a, b};
    EXPECT_EQ(s.size(), 1u);
}
