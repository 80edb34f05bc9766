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

#include "korth/orthogonality.h"

#include <algorithm>

#include "korth/errors.h"

namespace korth {

namespace {

// Depth-first walk over the t-subsets of rows in lexicographic order,
// carrying the running product. Returns true on the first odd product.
bool find_odd_product(const BitMat &a, size_t t, size_t start, std::vector<size_t> &chosen,
                      const BitVec &prefix, BitVec &product_out) {
    if (chosen.size() == t) {
        if (prefix.weight() & 1) {
            product_out = prefix;
            return true;
        }
        return false;
    }
    size_t needed = t - chosen.size();
    for (size_t i = start; i + needed <= a.rows(); i++) {
        BitVec next = prefix & a.row(i);
        // Once the product is empty every extension is even.
        if (next.none()) {
            continue;
        }
        chosen.push_back(i);
        if (find_odd_product(a, t, i + 1, chosen, next, product_out)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

OrthogonalityReport is_k_orthogonal(const BitMat &a_x, int k, const std::optional<BitVec> &r) {
    if (k < 1) {
        throw RangeError("orthogonality level k must be at least 1, got " + std::to_string(k));
    }
    BitVec restriction = r ? *r : BitVec::ones(a_x.cols());
    if (restriction.size() != a_x.cols()) {
        throw DimensionError("restriction subset has length " + std::to_string(restriction.size()) +
                             " but the matrix has " + std::to_string(a_x.cols()) + " columns");
    }
    OrthogonalityReport report;
    report.level_checked = k;
    size_t top = std::min<size_t>(static_cast<size_t>(k), a_x.rows());
    for (size_t t = 1; t <= top; t++) {
        std::vector<size_t> chosen;
        BitVec product;
        if (find_odd_product(a_x, t, 0, chosen, restriction, product)) {
            report.holds = false;
            size_t w = product.weight();
            report.witness = OrthogonalityWitness{t, chosen, std::move(product), w};
            return report;
        }
    }
    return report;
}

int max_orthogonality(const BitMat &a_x) {
    if (a_x.rows() == 0) {
        return 0;
    }
    OrthogonalityReport rep = is_k_orthogonal(a_x, static_cast<int>(a_x.rows()));
    return rep.holds ? static_cast<int>(a_x.rows()) : static_cast<int>(rep.witness->t) - 1;
}

BitMat isolate_column(const BitMat &a_x, size_t q) {
    if (q >= a_x.cols()) {
        throw RangeError("column " + std::to_string(q) + " out of range");
    }
    size_t pick = 0;
    while (pick < a_x.rows() && !a_x.get(pick, q)) {
        pick++;
    }
    if (pick == a_x.rows()) {
        throw NoSyndromeError("column " + std::to_string(q) +
                              " is zero: a Z error there has no syndrome");
    }
    BitMat out = a_x;
    for (size_t i = 0; i < out.rows(); i++) {
        if (!out.get(i, q)) {
            out.row(i) ^= a_x.row(pick);
        }
    }
    return out;
}

}  // namespace korth
