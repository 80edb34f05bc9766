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

#ifndef KORTH_CONSTRUCTIONS_H
#define KORTH_CONSTRUCTIONS_H

#include "korth/codes.h"
#include "korth/gf2.h"

namespace korth {

inline constexpr int kMaxHammingRows = 20;
inline constexpr int kMaxSubdualRows = 12;

/// m × (2^m - 1) parity check of the Hamming code, columns laid out as
/// (I | c | V): the unit vectors, then c = (1,1,0,…,0), then every other
/// column of weight >= 2 by descending weight and ascending lexicographic
/// order of the column read top to bottom.
BitMat hamming_parity_check(int m);

/// Blocks of the sub-dual Hamming construction A_X = (I c V),
/// A_Z = (J d I) with J = Vᵀ + d·cᵀ.
struct SubdualParts {
    BitVec c;  // m bits
    BitMat v;  // m × (2^m - 2 - m)
    BitVec d;  // d_j = 1 ⊕ parity of column j of V
    BitMat j;  // (2^m - 2 - m) × m
};

SubdualParts subdual_parts(int m);

/// The [[2^m - 1, 1]] CSS code with A_X = hamming_parity_check(m),
/// A_Z = (J d I) and r = s = all ones. m = 3 gives the Steane code and m = 4
/// the 15-qubit Reed-Muller code.
StandardFormCode subdual_css(int m);

/// The (k+1) × (2^(k+1) - 1) k-orthogonal matrix in the column order that the
/// minimality argument builds it: the all-ones column, then the columns of
/// weight k, k-1, …, 1. Blocks alternate lexicographic direction, starting
/// with descending for weight k.
BitMat minimal_korth_matrix(int k);

}  // namespace korth

#endif
