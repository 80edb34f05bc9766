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

#include "korth/congruence.h"

#include <bit>
#include <string>

#include "korth/dyadic.h"
#include "korth/errors.h"

namespace korth {

int CongruenceSolution::log2_count() const {
    int total = 0;
    for (int e : log2_orders) {
        total += e;
    }
    return total;
}

uint64_t inverse_mod_pow2(uint64_t odd, int k) {
    if ((odd & 1) == 0) {
        throw RangeError("only odd residues are invertible mod 2^k");
    }
    // Newton iteration doubles the number of correct low bits each step.
    uint64_t x = odd;
    for (int i = 0; i < 6; i++) {
        x *= 2 - odd * x;
    }
    return k >= 64 ? x : x & ((uint64_t{1} << k) - 1);
}

CongruenceSolution solve_congruences(std::vector<Residues> rows, size_t n, int k) {
    if (k < 1 || k > kMaxDyadicK) {
        throw RangeError("modulus exponent must lie in [1, " + std::to_string(kMaxDyadicK) + "]");
    }
    const uint64_t mask = (uint64_t{1} << k) - 1;
    for (auto &row : rows) {
        if (row.size() != n) {
            throw DimensionError("congruence row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
        }
        for (auto &v : row) {
            v &= mask;
        }
    }
    // Column operations are mirrored on `basis`, whose columns map the
    // diagonalized coordinates back to p.
    std::vector<Residues> basis(n, Residues(n, 0));
    for (size_t i = 0; i < n; i++) {
        basis[i][i] = 1;
    }
    std::vector<int> valuations;
    size_t steps = std::min(rows.size(), n);
    for (size_t i = 0; i < steps; i++) {
        size_t best_r = 0;
        size_t best_c = 0;
        int best_v = 64;
        for (size_t r = i; r < rows.size() && best_v > 0; r++) {
            for (size_t c = i; c < n; c++) {
                if (rows[r][c] == 0) {
                    continue;
                }
                int v = std::countr_zero(rows[r][c]);
                if (v < best_v) {
                    best_v = v;
                    best_r = r;
                    best_c = c;
                    if (v == 0) {
                        break;
                    }
                }
            }
        }
        if (best_v == 64) {
            break;
        }
        std::swap(rows[i], rows[best_r]);
        if (best_c != i) {
            for (auto &row : rows) {
                std::swap(row[i], row[best_c]);
            }
            for (auto &b : basis) {
                std::swap(b[i], b[best_c]);
            }
        }
        uint64_t unit_inv = inverse_mod_pow2(rows[i][i] >> best_v, k);
        for (auto &v : rows[i]) {
            v = (v * unit_inv) & mask;
        }
        // Clear the pivot column below.
        for (size_t r = i + 1; r < rows.size(); r++) {
            uint64_t f = rows[r][i] >> best_v;
            if (f == 0) {
                continue;
            }
            for (size_t c = i; c < n; c++) {
                rows[r][c] = (rows[r][c] - f * rows[i][c]) & mask;
            }
        }
        // Clear the pivot row to the right with column operations.
        for (size_t c = i + 1; c < n; c++) {
            uint64_t f = rows[i][c] >> best_v;
            if (f == 0) {
                continue;
            }
            rows[i][c] = 0;
            for (auto &b : basis) {
                b[c] = (b[c] - f * b[i]) & mask;
            }
        }
        valuations.push_back(best_v);
    }

    CongruenceSolution sol;
    sol.k = k;
    sol.n = n;
    auto column = [&](size_t j, int shift) {
        Residues g(n);
        for (size_t r = 0; r < n; r++) {
            g[r] = (basis[r][j] << shift) & mask;
        }
        return g;
    };
    for (size_t i = 0; i < valuations.size(); i++) {
        // 2^v · y ≡ 0 forces y ∈ 2^(k-v)·Z/2^k.
        if (valuations[i] > 0) {
            sol.generators.push_back(column(i, k - valuations[i]));
            sol.log2_orders.push_back(valuations[i]);
        }
    }
    for (size_t j = valuations.size(); j < n; j++) {
        sol.generators.push_back(column(j, 0));
        sol.log2_orders.push_back(k);
    }
    return sol;
}

bool satisfies_congruences(const std::vector<Residues> &rows, const Residues &p, int k) {
    const uint64_t mask = (uint64_t{1} << k) - 1;
    for (const auto &row : rows) {
        if (row.size() != p.size()) {
            throw DimensionError("congruence row and candidate differ in length");
        }
        uint64_t acc = 0;
        for (size_t i = 0; i < p.size(); i++) {
            acc += row[i] * p[i];
        }
        if (acc & mask) {
            return false;
        }
    }
    return true;
}

}  // namespace korth
