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

#include <set>

#include "korth/constructions.h"
#include "korth/errors.h"
#include "korth/orthogonality.h"
#include "support/oracles.h"

namespace korth {
namespace {

bool all_ones(const BitVec &v) {
    return v.weight() == v.size();
}

std::multiset<std::string> column_multiset(const BitMat &a) {
    std::multiset<std::string> out;
    for (size_t j = 0; j < a.cols(); j++) {
        out.insert(a.column(j).str());
    }
    return out;
}

const BitMat &reference_array() {
    static const BitMat a = BitMat::from_strings({
        "111100001111000",
        "111010110010100",
        "110111010100010",
        "101111101000001",
    });
    return a;
}

TEST(Hamming, SmallCases) {
    EXPECT_EQ(hamming_parity_check(2), BitMat::from_strings({"101", "011"}));
    BitMat h3 = hamming_parity_check(3);
    EXPECT_EQ(h3.rows(), 3u);
    EXPECT_EQ(h3.cols(), 7u);
    for (const auto &row : h3.row_list()) {
        EXPECT_EQ(row.weight(), 4u);
    }
    EXPECT_TRUE(is_k_orthogonal(h3, 2).holds);
    EXPECT_THROW(hamming_parity_check(1), RangeError);
}

TEST(Hamming, LayoutAndColumns) {
    for (int m = 2; m <= 7; m++) {
        BitMat h = hamming_parity_check(m);
        ASSERT_EQ(h.cols(), (size_t{1} << m) - 1);
        auto cols = column_multiset(h);
        std::set<std::string> distinct(cols.begin(), cols.end());
        EXPECT_EQ(distinct.size(), h.cols());
        EXPECT_EQ(distinct.count(BitVec(m).str()), 0u);
        for (int i = 0; i < m; i++) {
            EXPECT_EQ(h.column(i).support(), std::vector<size_t>{size_t(i)});
        }
        EXPECT_EQ(h.column(m).support(), (std::vector<size_t>{0, 1}));
        EXPECT_EQ(oracle::naive_rank(h), size_t(m));
        if (m <= 6) {
            EXPECT_EQ(max_orthogonality(h), m - 1);
        }
    }
}

TEST(Hamming, MatchesReferenceLayoutUpToColumnOrder) {
    EXPECT_EQ(column_multiset(hamming_parity_check(4)), column_multiset(reference_array()));
}

TEST(Hamming, SimplexWeights) {
    for (int m = 2; m <= 5; m++) {
        for (const auto &x : oracle::naive_span(hamming_parity_check(m))) {
            EXPECT_TRUE(x.none() || x.weight() == (size_t{1} << (m - 1)));
        }
    }
}

TEST(MinimalKorth, ReferenceLayoutExactly) {
    EXPECT_EQ(minimal_korth_matrix(3), reference_array());
}

TEST(MinimalKorth, SmallCases) {
    BitMat one = minimal_korth_matrix(1);
    EXPECT_EQ(one.rows(), 2u);
    EXPECT_EQ(one.cols(), 3u);
    for (const auto &row : one.row_list()) {
        EXPECT_EQ(row.weight(), 2u);
    }
    BitMat two = minimal_korth_matrix(2);
    EXPECT_EQ(column_multiset(two), column_multiset(hamming_parity_check(3)));
    EXPECT_THROW(minimal_korth_matrix(0), RangeError);
    for (int k = 1; k <= 5; k++) {
        BitMat a = minimal_korth_matrix(k);
        EXPECT_EQ(a.cols(), (size_t{1} << (k + 1)) - 1);
        EXPECT_TRUE(is_k_orthogonal(a, k).holds);
        EXPECT_FALSE(is_k_orthogonal(a, k + 1).holds);
        EXPECT_TRUE(all_ones(a.column(0)));
    }
}

TEST(Subdual, PartsInvariants) {
    for (int m = 3; m <= 8; m++) {
        SubdualParts p = subdual_parts(m);
        size_t nv = (size_t{1} << m) - 2 - m;
        ASSERT_EQ(p.v.cols(), nv);
        EXPECT_EQ(p.c.support(), (std::vector<size_t>{0, 1}));
        EXPECT_EQ(p.d.weight(), (size_t{1} << (m - 1)) - 2);
        for (size_t j = 0; j < nv; j++) {
            EXPECT_EQ(p.d.get(j), p.v.column(j).weight() % 2 == 0);
            for (int i = 0; i < m; i++) {
                EXPECT_EQ(p.j.get(j, i), p.v.get(i, j) ^ (p.d.get(j) && p.c.get(i)));
            }
        }
    }
}

TEST(Subdual, CodeInvariants) {
    for (int m = 3; m <= 6; m++) {
        StandardFormCode sf = subdual_css(m);
        size_t n = (size_t{1} << m) - 1;
        EXPECT_EQ(sf.n, n);
        EXPECT_EQ(sf.a_x, hamming_parity_check(m));
        EXPECT_TRUE(sf.b.is_zero());
        EXPECT_EQ(sf.a_x.rows() + sf.a_z.rows(), n - 1);
        EXPECT_TRUE(all_ones(sf.r));
        EXPECT_TRUE(all_ones(sf.s));
        EXPECT_TRUE(sf.a_z.mul_transpose(sf.a_x).is_zero());
        for (const auto &row : sf.a_z.row_list()) {
            EXPECT_EQ(row.weight() % 2, 0u);
        }
        EXPECT_NO_THROW(sf.validate());
        // Sub-dual containment: A_X rows lie in span(A_Z, r).
        BitMat zr = sf.a_z;
        zr.append_row(sf.r);
        BitMat joined = zr;
        for (const auto &row : sf.a_x.row_list()) {
            joined.append_row(row);
        }
        // rank() is checked against the brute-force oracle in test_gf2.
        EXPECT_EQ(rank(joined), rank(zr));
    }
    EXPECT_TRUE(is_k_orthogonal(subdual_css(4).a_x, 3).holds);
    EXPECT_THROW(subdual_css(2), RangeError);
}

}  // namespace
}  // namespace korth
