// Copyright 2026 The korth Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "korth/constructions.h"
#include "korth/errors.h"
#include "korth/orthogonality.h"
#include "support/oracles.h"

namespace korth {
namespace {

bool all_ones(const BitVec &v) {
    return v.weight() == v.size();
}

BitMat permute_columns(const BitMat &a, const std::vector<size_t> &perm) {
    BitMat out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.set(i, j, a.get(i, perm[j]));
        }
    }
    return out;
}

TEST(IsKOrthogonal, HammingFour) {
    BitMat h = hamming_parity_check(4);
    auto ok = is_k_orthogonal(h, 3);
    EXPECT_TRUE(ok.holds);
    EXPECT_EQ(ok.level_checked, 3);
    EXPECT_FALSE(ok.witness);

    auto bad = is_k_orthogonal(h, 4);
    EXPECT_FALSE(bad.holds);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(bad.witness->t, 4u);
    EXPECT_EQ(bad.witness->rows, (std::vector<size_t>{0, 1, 2, 3}));
    EXPECT_EQ(bad.witness->product_weight, 1u);
    EXPECT_EQ(bad.witness->product.weight(), 1u);
}

TEST(IsKOrthogonal, OddRowFailsAtLevelOne) {
    BitMat a = BitMat::from_strings({"1100", "1110"});
    auto rep = is_k_orthogonal(a, 1);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->t, 1u);
    EXPECT_EQ(rep.witness->rows, std::vector<size_t>{1});
    EXPECT_THROW(is_k_orthogonal(a, 0), RangeError);
    EXPECT_THROW(is_k_orthogonal(a, 1, BitVec(3)), DimensionError);
}

TEST(IsKOrthogonal, RestrictionSubset) {
    // Rows agree on an odd set outside r.
    BitMat a = BitMat::from_strings({"1110", "0111"});
    EXPECT_FALSE(is_k_orthogonal(a, 1).holds);
    EXPECT_TRUE(is_k_orthogonal(a, 2, BitVec::from_string("0110")).holds);
    // Even rows inside r whose pairwise product inside r is odd.
    BitMat b = BitMat::from_strings({"1101", "0111"});
    EXPECT_TRUE(is_k_orthogonal(b, 1, BitVec::from_string("1110")).holds);
    auto rep = is_k_orthogonal(b, 2, BitVec::from_string("1110"));
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->t, 2u);
    EXPECT_EQ(rep.witness->product.str(), "0100");
}

TEST(IsKOrthogonal, WitnessRecomputes) {
    oracle::Rng rng(4);
    for (int trial = 0; trial < 200; trial++) {
        BitMat a = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 12);
        auto rep = is_k_orthogonal(a, 3);
        if (rep.holds) {
            continue;
        }
        BitVec prod = BitVec::ones(a.cols());
        for (size_t i : rep.witness->rows) {
            prod &= a.row(i);
        }
        EXPECT_EQ(prod, rep.witness->product);
        EXPECT_TRUE(prod.weight() % 2);
    }
}

TEST(IsKOrthogonal, MatchesGroupLevelDefinition) {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 150; trial++) {
        size_t m = 1 + rng() % 4, n = 1 + rng() % 12;
        BitMat a = oracle::random_matrix(rng, m, n);
        std::optional<BitVec> r;
        if (trial % 3 == 0) {
            r = oracle::random_vec(rng, n);
        }
        for (int k = 1; k <= 3; k++) {
            EXPECT_EQ(is_k_orthogonal(a, k, r).holds, oracle::group_k_orthogonal(a, k, r.value_or(BitVec::ones(n))));
        }
    }
}

TEST(IsKOrthogonal, InvariantUnderRowOpsAndColumnPermutations) {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 100; trial++) {
        BitMat a = trial % 2 ? hamming_parity_check(3 + trial % 2)
                             : oracle::random_full_rank(rng, 3, 10);
        BitMat b = a;
        b.row(0) ^= b.row(2);
        b.row(1) ^= b.row(0);
        std::vector<size_t> perm(a.cols());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        BitMat c = permute_columns(b, perm);
        for (int k = 1; k <= 4; k++) {
            bool base = is_k_orthogonal(a, k).holds;
            EXPECT_EQ(is_k_orthogonal(b, k).holds, base);
            EXPECT_EQ(is_k_orthogonal(c, k).holds, base);
        }
    }
}

TEST(MaxOrthogonality, Examples) {
    EXPECT_EQ(max_orthogonality(hamming_parity_check(3)), 2);
    EXPECT_EQ(max_orthogonality(hamming_parity_check(4)), 3);
    EXPECT_EQ(max_orthogonality(hamming_parity_check(5)), 4);
    EXPECT_EQ(max_orthogonality(BitMat::from_strings({"11"})), 1);
    EXPECT_EQ(max_orthogonality(BitMat::from_strings({"11", "10"})), 0);
}

TEST(MaxOrthogonality, MonotoneAndBelowRowCountForNondegenerateCodes) {
    oracle::Rng rng(13);
    int nondegenerate = 0;
    for (int trial = 0; trial < 300; trial++) {
        size_t m = 2 + rng() % 3;
        BitMat a = oracle::random_nondegenerate(rng, m, m + 1 + rng() % ((1u << m) - m - 1));
        int p = max_orthogonality(a);
        for (int k = 1; k <= static_cast<int>(m); k++) {
            EXPECT_EQ(is_k_orthogonal(a, k).holds, k <= p);
        }
        EXPECT_LT(p, static_cast<int>(m));
        nondegenerate++;
    }
    EXPECT_EQ(nondegenerate, 300);
}

TEST(IsolateColumn, Identity) {
    BitMat out = isolate_column(BitMat::identity(3), 0);
    EXPECT_EQ(out, BitMat::from_strings({"100", "110", "101"}));
    EXPECT_THROW(isolate_column(BitMat::from_strings({"10", "10"}), 1), NoSyndromeError);
}

TEST(IsolateColumn, PreservesRowSpace) {
    oracle::Rng rng(14);
    for (int trial = 0; trial < 100; trial++) {
        BitMat a = oracle::random_full_rank(rng, 4, 10);
        size_t q = rng() % 10;
        if (a.column(q).none()) {
            continue;
        }
        BitMat out = isolate_column(a, q);
        EXPECT_TRUE(oracle::same_row_space(a, out));
        EXPECT_TRUE(all_ones(out.column(q)));
    }
}

TEST(IsolateColumn, AllRowsProductIsTheIsolatedColumn) {
    for (int m = 2; m <= 5; m++) {
        BitMat h = hamming_parity_check(m);
        for (size_t q = 0; q < h.cols(); q++) {
            BitMat out = isolate_column(h, q);
            BitVec prod = BitVec::ones(h.cols());
            for (const auto &row : out.row_list()) {
                prod &= row;
            }
            EXPECT_EQ(prod.support(), std::vector<size_t>{q});
        }
    }
}

}  // namespace
}  // namespace korth
