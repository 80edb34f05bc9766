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

#ifndef KORTH_ORTHOGONALITY_H
#define KORTH_ORTHOGONALITY_H

#include <optional>
#include <vector>

#include "korth/gf2.h"

namespace korth {

/// A set of t rows whose AND, restricted to the subset, has odd weight.
struct OrthogonalityWitness {
    size_t t = 0;
    std::vector<size_t> rows;
    /// AND of the rows, restricted to r.
    BitVec product;
    size_t product_weight = 0;
};

struct OrthogonalityReport {
    int level_checked = 0;
    bool holds = true;
    /// Present exactly when holds is false.
    std::optional<OrthogonalityWitness> witness;
};

/// Checks that every product of t distinct rows (1 <= t <= k), restricted to
/// the positions set in r, has even weight. r defaults to all ones.
///
/// Checking generator rows is equivalent to checking all t-tuples drawn from
/// the row space: the parity of |x¹·…·xᵗ·r| is multilinear in each argument.
/// The reported witness is the first failure in order of increasing t and
/// then lexicographic row set.
OrthogonalityReport is_k_orthogonal(const BitMat &a_x, int k,
                                    const std::optional<BitVec> &r = std::nullopt);

/// Largest p <= rows(a_x) for which a_x is p-orthogonal. Products of more
/// than rows(a_x) distinct rows do not exist, so the value is capped there.
int max_orthogonality(const BitMat &a_x);

/// Re-bases the rows so that column q becomes all ones: picks the first row y
/// with y_q = 1 and replaces every row x with x_q = 0 by x ⊕ y. The row space
/// is unchanged. Throws NoSyndromeError when column q is zero.
BitMat isolate_column(const BitMat &a_x, size_t q);

}  // namespace korth

#endif
