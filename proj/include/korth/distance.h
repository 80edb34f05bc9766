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

#ifndef KORTH_DISTANCE_H
#define KORTH_DISTANCE_H

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "korth/gf2.h"

namespace korth {

enum class DistanceMethod { kAuto, kCosetEnumeration, kWeightSearch };

std::string method_name(DistanceMethod method);

struct DistanceOptions {
    DistanceMethod method = DistanceMethod::kAuto;
    /// Auto picks coset enumeration up to this null-space dimension.
    size_t max_coset_dimension = 26;
    /// Largest weight tried by the increasing-weight search.
    size_t weight_cap = 8;
    int threads = 1;
};

/// Minimum weight of a logical of one Pauli type.
struct LogicalWeight {
    /// The exact distance, or the first weight not yet ruled out when exact
    /// is false.
    size_t distance = 0;
    bool exact = true;
    std::optional<BitVec> witness;
    DistanceMethod method = DistanceMethod::kAuto;
};

struct DistanceReport {
    /// Z-type logicals: null_space(A_X) minus rowspace(A_Z).
    LogicalWeight z;
    /// X-type logicals: null_space(A_Z) minus rowspace(A_X).
    LogicalWeight x;

    size_t d_z() const {
        return z.distance;
    }
    size_t d_x() const {
        return x.distance;
    }
    bool lower_bound_only() const {
        return !z.exact || !x.exact;
    }
};

/// Minimum weight over null_space(checks) outside rowspace(stabilizers).
/// Throws InvalidCodeError when the stabilizer rows are not in the null space
/// or the quotient is trivial.
LogicalWeight min_logical_weight(const BitMat &checks, const BitMat &stabilizers,
                                 const DistanceOptions &options = {});

/// Both distances of a CSS code. r and s are checked to be Z- and X-type
/// logicals. Throws InvalidCodeError when A_Z·A_X^T ≠ 0.
DistanceReport css_distances(const BitMat &a_x, const BitMat &a_z, const BitVec &r,
                             const BitVec &s, const DistanceOptions &options = {});

/// A Z-type logical r and an X-type logical s with r·s = 1 for the CSS code
/// (A_X, A_Z). Throws InvalidCodeError when there is no logical qubit.
std::pair<BitVec, BitVec> css_logicals(const BitMat &a_x, const BitMat &a_z);

struct ZDistanceFloor {
    /// Columns are nonzero and pairwise distinct, so no Z error of weight
    /// one or two is undetected.
    bool at_least_three = false;
    /// Lexicographically first triple of columns summing to zero.
    std::optional<std::array<size_t, 3>> triple;
};

ZDistanceFloor z_distance_floor(const BitMat &a_x);

/// X-distance bookkeeping for subdual_css(m): the whole null space of A_Z is
/// enumerated (2^(m+1) elements).
struct SubdualXAnalysis {
    int m = 0;
    size_t d_x = 0;
    /// weight_histogram[w] counts null_space(A_Z) elements of weight w.
    std::vector<size_t> weight_histogram;
    size_t minimum_weight_logicals = 0;
    /// Minimum-weight X logicals touching qubit 0 or 1, the columns where c
    /// has a one.
    size_t minimum_weight_on_c_columns = 0;
    std::optional<BitVec> example_on_c_columns;
};

SubdualXAnalysis subdual_x_analysis(int m);

}  // namespace korth

#endif
