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

#include "korth/constructions.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "korth/errors.h"

namespace korth {

namespace {

// Columns are m-bit masks with bit i holding row i.

// Lexicographic comparison of the columns read top to bottom.
bool column_lex_less(uint32_t a, uint32_t b, int m) {
    for (int i = 0; i < m; i++) {
        bool x = (a >> i) & 1;
        bool y = (b >> i) & 1;
        if (x != y) {
            return !x;
        }
    }
    return false;
}

BitMat from_columns(const std::vector<uint32_t> &columns, int m) {
    BitMat out(m, columns.size());
    for (size_t j = 0; j < columns.size(); j++) {
        for (int i = 0; i < m; i++) {
            if ((columns[j] >> i) & 1) {
                out.set(i, j);
            }
        }
    }
    return out;
}

std::vector<uint32_t> hamming_columns(int m) {
    uint32_t c = 0b11;
    std::vector<uint32_t> cols;
    for (int i = 0; i < m; i++) {
        cols.push_back(uint32_t{1} << i);
    }
    cols.push_back(c);
    std::vector<uint32_t> rest;
    for (uint32_t v = 1; v < (uint32_t{1} << m); v++) {
        if (std::popcount(v) >= 2 && v != c) {
            rest.push_back(v);
        }
    }
    std::sort(rest.begin(), rest.end(), [m](uint32_t a, uint32_t b) {
        int wa = std::popcount(a);
        int wb = std::popcount(b);
        if (wa != wb) {
            return wa > wb;
        }
        return column_lex_less(a, b, m);
    });
    cols.insert(cols.end(), rest.begin(), rest.end());
    return cols;
}

}  // namespace

BitMat hamming_parity_check(int m) {
    if (m < 2 || m > kMaxHammingRows) {
        throw RangeError("hamming_parity_check needs 2 <= m <= " + std::to_string(kMaxHammingRows) +
                         ", got " + std::to_string(m));
    }
    return from_columns(hamming_columns(m), m);
}

SubdualParts subdual_parts(int m) {
    if (m < 3 || m > kMaxSubdualRows) {
        throw RangeError(
            "the sub-dual Hamming construction needs 3 <= m <= " + std::to_string(kMaxSubdualRows) +
            ", got " + std::to_string(m) +
            (m == 2 ? " (m = 2 leaves V empty and no Z stabilizers, so single X errors are "
                      "logical: the result would have X distance 1)"
                    : ""));
    }
    std::vector<uint32_t> cols = hamming_columns(m);
    size_t extra = cols.size() - m - 1;
    SubdualParts parts;
    parts.c = BitVec(m);
    parts.c.set(0);
    parts.c.set(1);
    std::vector<uint32_t> v_cols(cols.begin() + m + 1, cols.end());
    parts.v = from_columns(v_cols, m);
    parts.d = BitVec(extra);
    parts.j = BitMat(extra, m);
    for (size_t j = 0; j < extra; j++) {
        bool dj = std::popcount(v_cols[j]) % 2 == 0;
        uint32_t row = v_cols[j] ^ (dj ? 0b11u : 0u);
        if (dj) {
            parts.d.set(j);
        }
        for (int i = 0; i < m; i++) {
            if ((row >> i) & 1) {
                parts.j.set(j, i);
            }
        }
    }
    return parts;
}

StandardFormCode subdual_css(int m) {
    SubdualParts parts = subdual_parts(m);
    BitMat a_x = hamming_parity_check(m);
    size_t n = a_x.cols();
    size_t extra = parts.j.rows();
    BitMat a_z(extra, n);
    for (size_t j = 0; j < extra; j++) {
        for (size_t i : parts.j.row(j).support()) {
            a_z.set(j, i);
        }
        if (parts.d[j]) {
            a_z.set(j, m);
        }
        a_z.set(j, m + 1 + j);
    }
    return make_css_code(std::move(a_x), std::move(a_z), BitVec::ones(n), BitVec::ones(n));
}

BitMat minimal_korth_matrix(int k) {
    if (k < 1 || k + 1 > kMaxHammingRows) {
        throw RangeError("minimal_korth_matrix needs 1 <= k <= " +
                         std::to_string(kMaxHammingRows - 1) + ", got " + std::to_string(k));
    }
    int m = k + 1;
    std::vector<uint32_t> cols{(uint32_t{1} << m) - 1};
    bool descending = true;
    for (int w = k; w >= 1; w--) {
        std::vector<uint32_t> block;
        for (uint32_t v = 1; v < (uint32_t{1} << m); v++) {
            if (std::popcount(v) == w) {
                block.push_back(v);
            }
        }
        std::sort(block.begin(), block.end(), [m, descending](uint32_t a, uint32_t b) {
            return descending ? column_lex_less(b, a, m) : column_lex_less(a, b, m);
        });
        cols.insert(cols.end(), block.begin(), block.end());
        descending = !descending;
    }
    return from_columns(cols, m);
}

}  // namespace korth
