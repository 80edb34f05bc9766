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

#ifndef KORTH_CONGRUENCE_H
#define KORTH_CONGRUENCE_H

#include <cstdint>
#include <vector>

namespace korth {

using Residues = std::vector<uint64_t>;

/// The solution module of A·p ≡ 0 (mod 2^k), p ∈ (Z/2^k)^n.
///
/// Every solution is a unique combination Σ c_j·generators[j] with
/// 0 <= c_j < 2^log2_orders[j], so the module has 2^log2_count() elements.
struct CongruenceSolution {
    int k = 0;
    size_t n = 0;
    std::vector<Residues> generators;
    std::vector<int> log2_orders;

    int log2_count() const;
};

/// Reduces the system to Smith normal form over Z/2^k. The ring is local, so
/// pivoting on an entry of least 2-adic valuation always divides the rest of
/// its row and column. Requires 1 <= k <= 62.
CongruenceSolution solve_congruences(std::vector<Residues> rows, size_t n, int k);

/// True iff every row dotted with p vanishes mod 2^k.
bool satisfies_congruences(const std::vector<Residues> &rows, const Residues &p, int k);

/// Inverse of an odd residue mod 2^k.
uint64_t inverse_mod_pow2(uint64_t odd, int k);

}  // namespace korth

#endif
