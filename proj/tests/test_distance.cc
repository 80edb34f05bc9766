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

#include "korth/codes.h"
#include "korth/constructions.h"
#include "korth/distance.h"
#include "korth/errors.h"
#include "support/oracles.h"

namespace korth {
namespace {

BitMat permute_columns(const BitMat &a, const std::vector<size_t> &perm) {
    BitMat out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.set(i, j, a.get(i, perm[j]));
        }
    }
    return out;
}

BitVec permute(const BitVec &v, const std::vector<size_t> &perm) {
    BitVec out(v.size());
    for (size_t j = 0; j < v.size(); j++) {
        out.set(j, v.get(perm[j]));
    }
    return out;
}

void expect_logical_witness(const LogicalWeight &lw, const BitMat &checks, const BitMat &stab) {
    ASSERT_TRUE(lw.witness);
    EXPECT_EQ(lw.witness->weight(), lw.distance);
    EXPECT_TRUE(checks.multiply(*lw.witness).none());
    BitMat joined = stab;
    joined.append_row(*lw.witness);
    EXPECT_EQ(oracle::naive_rank(joined), oracle::naive_rank(stab) + 1);
}

TEST(CssDistances, SubdualFamily) {
    const size_t expected_x[] = {3, 7, 15};
    for (int m = 3; m <= 5; m++) {
        StandardFormCode sf = subdual_css(m);
        DistanceReport rep = css_distances(sf.a_x, sf.a_z, sf.r, sf.s);
        EXPECT_EQ(rep.d_z(), 3u) << m;
        EXPECT_EQ(rep.d_x(), expected_x[m - 3]) << m;
        EXPECT_FALSE(rep.lower_bound_only());
        if (m <= 4) {
            expect_logical_witness(rep.z, sf.a_x, sf.a_z);
            expect_logical_witness(rep.x, sf.a_z, sf.a_x);
        }
    }
}

TEST(CssDistances, MethodsAgreeOnSteane) {
    StandardFormCode sf = subdual_css(3);
    for (DistanceMethod method : {DistanceMethod::kCosetEnumeration, DistanceMethod::kWeightSearch}) {
        DistanceOptions opt;
        opt.method = method;
        DistanceReport rep = css_distances(sf.a_x, sf.a_z, sf.r, sf.s, opt);
        EXPECT_EQ(rep.d_z(), 3u);
        EXPECT_EQ(rep.d_x(), 3u);
        EXPECT_EQ(rep.z.method, method);
    }
}

TEST(CssDistances, FifteenQubitCodeAgainstBruteForce) {
    StandardFormCode sf = subdual_css(4);
    EXPECT_EQ(oracle::brute_min_logical_weight(sf.a_x, sf.a_z), 3u);
    EXPECT_EQ(oracle::brute_min_logical_weight(sf.a_z, sf.a_x), 7u);
    DistanceOptions weight;
    weight.method = DistanceMethod::kWeightSearch;
    EXPECT_EQ(css_distances(sf.a_x, sf.a_z, sf.r, sf.s, weight).d_x(), 7u);
}

TEST(CssDistances, RandomCodesAgainstBruteForce) {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 60; trial++) {
        StandardFormCode sf = to_standard_form(oracle::random_scrambled_code(rng, 2 + rng() % 9));
        if (!is_css(sf)) {
            continue;
        }
        for (DistanceMethod method : {DistanceMethod::kCosetEnumeration, DistanceMethod::kWeightSearch}) {
            DistanceOptions opt;
            opt.method = method;
            opt.weight_cap = sf.n;
            opt.threads = 1 + trial % 3;
            DistanceReport rep = css_distances(sf.a_x, sf.a_z, sf.r, sf.s, opt);
            EXPECT_EQ(rep.d_z(), oracle::brute_min_logical_weight(sf.a_x, sf.a_z));
            EXPECT_EQ(rep.d_x(), oracle::brute_min_logical_weight(sf.a_z, sf.a_x));
            expect_logical_witness(rep.z, sf.a_x, sf.a_z);
            expect_logical_witness(rep.x, sf.a_z, sf.a_x);
        }
    }
}

TEST(CssDistances, WeightCapGivesLowerBound) {
    StandardFormCode sf = subdual_css(4);
    DistanceOptions opt;
    opt.method = DistanceMethod::kWeightSearch;
    opt.weight_cap = 5;
    DistanceReport rep = css_distances(sf.a_x, sf.a_z, sf.r, sf.s, opt);
    EXPECT_TRUE(rep.z.exact);
    EXPECT_FALSE(rep.x.exact);
    EXPECT_TRUE(rep.lower_bound_only());
    EXPECT_EQ(rep.d_x(), 6u);
    EXPECT_FALSE(rep.x.witness);
}

TEST(CssDistances, PermutationInvariant) {
    oracle::Rng rng(32);
    for (int m = 3; m <= 4; m++) {
        StandardFormCode sf = subdual_css(m);
        std::vector<size_t> perm(sf.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        DistanceReport rep = css_distances(permute_columns(sf.a_x, perm),
                                           permute_columns(sf.a_z, perm), permute(sf.r, perm),
                                           permute(sf.s, perm));
        EXPECT_EQ(rep.d_z(), 3u);
        EXPECT_EQ(rep.d_x(), m == 3 ? 3u : 7u);
    }
}

TEST(CssDistances, Errors) {
    StandardFormCode sf = subdual_css(3);
    BitMat bad_z = sf.a_z;
    bad_z.row(0) ^= sf.s;
    EXPECT_THROW(css_distances(sf.a_x, bad_z, sf.r, sf.s), InvalidCodeError);
    EXPECT_THROW(css_distances(sf.a_x, sf.a_z, sf.s ^ sf.a_x.row(0) ^ sf.r ^ sf.r, BitVec(7)),
                 InvalidCodeError);
}

TEST(CssLogicals, ProducesAnticommutingPair) {
    StandardFormCode sf = subdual_css(4);
    auto [r, s] = css_logicals(sf.a_x, sf.a_z);
    EXPECT_TRUE(r.dot(s));
    EXPECT_TRUE(sf.a_x.multiply(r).none());
    EXPECT_TRUE(sf.a_z.multiply(s).none());
    BitMat full = sf.a_z;
    full.append_row(sf.r);
    EXPECT_THROW(css_logicals(sf.a_x, full), InvalidCodeError);
}

TEST(ZDistanceFloor, Examples) {
    for (int m = 2; m <= 6; m++) {
        ZDistanceFloor f = z_distance_floor(hamming_parity_check(m));
        EXPECT_TRUE(f.at_least_three);
        ASSERT_TRUE(f.triple);
        EXPECT_EQ(*f.triple, (std::array<size_t, 3>{0, 1, size_t(m)}));
    }
    ZDistanceFloor dup = z_distance_floor(BitMat::from_strings({"1101", "0110"}));
    EXPECT_FALSE(dup.at_least_three);
    EXPECT_FALSE(z_distance_floor(BitMat::from_strings({"110", "100"})).at_least_three);

    ZDistanceFloor tiny = z_distance_floor(BitMat::from_strings({"110", "011"}));
    EXPECT_TRUE(tiny.at_least_three);
    EXPECT_EQ(*tiny.triple, (std::array<size_t, 3>{0, 1, 2}));

    ZDistanceFloor none = z_distance_floor(BitMat::identity(3));
    EXPECT_TRUE(none.at_least_three);
    EXPECT_FALSE(none.triple);
}

TEST(SubdualXAnalysis, WeightsStartAtTheXDistance) {
    for (int m = 3; m <= 6; m++) {
        SubdualXAnalysis a = subdual_x_analysis(m);
        size_t n = (size_t{1} << m) - 1;
        size_t floor = (size_t{1} << (m - 1)) - 1;
        EXPECT_EQ(a.d_x, floor);
        size_t total = 0;
        for (size_t w = 0; w < a.weight_histogram.size(); w++) {
            total += a.weight_histogram[w];
            if (a.weight_histogram[w]) {
                EXPECT_TRUE(w == 0 || (w >= floor && w <= n)) << "m=" << m << " w=" << w;
            }
        }
        EXPECT_EQ(total, size_t{1} << (m + 1));
        EXPECT_GT(a.minimum_weight_logicals, 0u);
        if (a.example_on_c_columns) {
            EXPECT_EQ(a.example_on_c_columns->weight(), floor);
            EXPECT_TRUE(a.example_on_c_columns->get(0) || a.example_on_c_columns->get(1));
        }
        EXPECT_EQ(a.example_on_c_columns.has_value(), a.minimum_weight_on_c_columns > 0);
    }
}

TEST(SubdualXAnalysis, CColumnCountsAgainstBruteForce) {
    for (int m = 3; m <= 4; m++) {
        StandardFormCode sf = subdual_css(m);
        size_t d = oracle::brute_min_logical_weight(sf.a_z, sf.a_x);
        RowSpace x_space(sf.a_x);
        size_t count = 0, on_c = 0;
        for (uint64_t w = 1; w < (uint64_t{1} << sf.n); w++) {
            BitVec v(sf.n);
            for (size_t i = 0; i < sf.n; i++) {
                v.set(i, (w >> i) & 1);
            }
            if (v.weight() != d || sf.a_z.multiply(v).any() || x_space.contains(v)) {
                continue;
            }
            count++;
            on_c += v.get(0) || v.get(1);
        }
        SubdualXAnalysis a = subdual_x_analysis(m);
        EXPECT_EQ(a.minimum_weight_logicals, count);
        EXPECT_EQ(a.minimum_weight_on_c_columns, on_c);
        EXPECT_GT(on_c, 0u);
    }
}

}  // namespace
}  // namespace korth
