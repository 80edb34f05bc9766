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

#include "korth/distance.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <thread>

#include "korth/constructions.h"
#include "korth/errors.h"

namespace korth {

namespace {

constexpr size_t kMaxEnumerationDimension = 40;

struct ChunkBest {
    size_t weight = SIZE_MAX;
    uint64_t index = 0;
    std::optional<BitVec> vec;
};

// Gray-code walk over indices [begin, end) of the span of basis. Index i maps
// to the combination g = i ^ (i >> 1); it is a logical when some basis vector
// at position >= split is used.
ChunkBest scan_chunk(const std::vector<BitVec> &basis, size_t split, uint64_t begin,
                     uint64_t end) {
    ChunkBest best;
    size_t n = basis.front().size();
    uint64_t g = begin ^ (begin >> 1);
    if (n <= 64) {
        std::vector<uint64_t> words;
        for (const auto &b : basis) {
            words.push_back(b.to_word());
        }
        uint64_t v = 0;
        for (size_t j = 0; j < basis.size(); j++) {
            if ((g >> j) & 1) {
                v ^= words[j];
            }
        }
        for (uint64_t i = begin; i < end; i++) {
            if (i != begin) {
                v ^= words[std::countr_zero(i)];
                g ^= uint64_t{1} << std::countr_zero(i);
            }
            if ((g >> split) == 0) {
                continue;
            }
            size_t w = std::popcount(v);
            if (w < best.weight) {
                best.weight = w;
                best.index = i;
                best.vec = BitVec::from_word(n, v);
            }
        }
        return best;
    }
    BitVec v(n);
    for (size_t j = 0; j < basis.size(); j++) {
        if ((g >> j) & 1) {
            v ^= basis[j];
        }
    }
    for (uint64_t i = begin; i < end; i++) {
        if (i != begin) {
            v ^= basis[std::countr_zero(i)];
            g ^= uint64_t{1} << std::countr_zero(i);
        }
        if ((g >> split) == 0) {
            continue;
        }
        size_t w = v.weight();
        if (w < best.weight) {
            best.weight = w;
            best.index = i;
            best.vec = v;
        }
    }
    return best;
}

LogicalWeight coset_enumeration(const std::vector<BitVec> &basis, size_t split, int threads) {
    if (basis.size() > kMaxEnumerationDimension) {
        throw RangeError("null space of dimension " + std::to_string(basis.size()) +
                         " is too large to enumerate");
    }
    uint64_t total = uint64_t{1} << basis.size();
    size_t chunks = static_cast<size_t>(std::max(1, threads));
    if (total < (uint64_t{1} << 16)) {
        chunks = 1;
    }
    std::vector<ChunkBest> partial(chunks);
    auto bounds = [&](size_t c) { return total / chunks * c; };
    if (chunks == 1) {
        partial[0] = scan_chunk(basis, split, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (size_t c = 0; c < chunks; c++) {
            uint64_t end = c + 1 == chunks ? total : bounds(c + 1);
            pool.emplace_back([&, c, end] { partial[c] = scan_chunk(basis, split, bounds(c), end); });
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    // Chunks are in index order, so taking the first strict improvement gives
    // the same witness for any thread count.
    ChunkBest best;
    for (auto &p : partial) {
        if (p.weight < best.weight) {
            best = std::move(p);
        }
    }
    LogicalWeight out;
    out.method = DistanceMethod::kCosetEnumeration;
    out.distance = best.weight;
    out.witness = std::move(best.vec);
    return out;
}

LogicalWeight weight_search(const BitMat &checks, const RowSpace &stabilizers, size_t cap) {
    size_t n = checks.cols();
    std::vector<BitVec> syndromes;
    for (size_t j = 0; j < n; j++) {
        syndromes.push_back(checks.column(j));
    }
    LogicalWeight out;
    out.method = DistanceMethod::kWeightSearch;
    size_t top = std::min(cap, n);
    for (size_t w = 1; w <= top; w++) {
        std::vector<size_t> idx(w);
        std::vector<BitVec> acc(w + 1, BitVec(checks.rows()));
        for (size_t i = 0; i < w; i++) {
            idx[i] = i;
            acc[i + 1] = acc[i] ^ syndromes[i];
        }
        while (true) {
            if (acc[w].none()) {
                BitVec v(n);
                for (size_t i : idx) {
                    v.set(i);
                }
                if (!stabilizers.contains(v)) {
                    out.distance = w;
                    out.witness = std::move(v);
                    return out;
                }
            }
            // Advance to the next combination in lexicographic order.
            size_t pos = w;
            while (pos > 0 && idx[pos - 1] == n - w + pos - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            idx[pos - 1]++;
            acc[pos] = acc[pos - 1] ^ syndromes[idx[pos - 1]];
            for (size_t i = pos; i < w; i++) {
                idx[i] = idx[i - 1] + 1;
                acc[i + 1] = acc[i] ^ syndromes[idx[i]];
            }
        }
    }
    out.exact = false;
    out.distance = top + 1;
    return out;
}

}  // namespace

std::string method_name(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::kAuto:
            return "auto";
        case DistanceMethod::kCosetEnumeration:
            return "coset-enumeration";
        case DistanceMethod::kWeightSearch:
            return "weight-search";
    }
    return "unknown";
}

LogicalWeight min_logical_weight(const BitMat &checks, const BitMat &stabilizers,
                                 const DistanceOptions &options) {
    if (checks.cols() != stabilizers.cols()) {
        throw DimensionError("check and stabilizer matrices have different widths");
    }
    for (size_t i = 0; i < stabilizers.rows(); i++) {
        if (checks.multiply(stabilizers.row(i)).any()) {
            throw InvalidCodeError("stabilizer row " + std::to_string(i) +
                                   " does not commute with the checks");
        }
    }
    RowSpace stab_space(stabilizers);
    std::vector<BitVec> basis = stab_space.basis().row_list();
    size_t split = basis.size();
    RowSpace grown = stab_space;
    BitMat kernel = null_space(checks);
    for (const auto &v : kernel.row_list()) {
        if (grown.insert(v)) {
            basis.push_back(v);
        }
    }
    if (basis.size() == split) {
        throw InvalidCodeError("no logical operator: the null space equals the stabilizer span");
    }
    DistanceMethod method = options.method;
    if (method == DistanceMethod::kAuto) {
        method = basis.size() <= options.max_coset_dimension ? DistanceMethod::kCosetEnumeration
                                                             : DistanceMethod::kWeightSearch;
    }
    if (method == DistanceMethod::kCosetEnumeration) {
        return coset_enumeration(basis, split, options.threads);
    }
    return weight_search(checks, stab_space, options.weight_cap);
}

DistanceReport css_distances(const BitMat &a_x, const BitMat &a_z, const BitVec &r,
                             const BitVec &s, const DistanceOptions &options) {
    size_t n = a_x.cols();
    if (a_z.cols() != n || r.size() != n || s.size() != n) {
        throw DimensionError("A_X, A_Z, r and s must all have n = " + std::to_string(n) +
                             " columns");
    }
    if (!a_z.mul_transpose(a_x).is_zero()) {
        throw InvalidCodeError("not a CSS code: A_Z·A_X^T ≠ 0");
    }
    if (a_x.multiply(r).any() || RowSpace(a_z).contains(r)) {
        throw InvalidCodeError("r is not a Z-type logical");
    }
    if (a_z.multiply(s).any() || RowSpace(a_x).contains(s)) {
        throw InvalidCodeError("s is not an X-type logical");
    }
    DistanceReport rep;
    rep.z = min_logical_weight(a_x, a_z, options);
    rep.x = min_logical_weight(a_z, a_x, options);
    return rep;
}

std::pair<BitVec, BitVec> css_logicals(const BitMat &a_x, const BitMat &a_z) {
    if (a_x.cols() != a_z.cols()) {
        throw DimensionError("A_X and A_Z have different widths");
    }
    if (!a_z.mul_transpose(a_x).is_zero()) {
        throw InvalidCodeError("not a CSS code: A_Z·A_X^T ≠ 0");
    }
    RowSpace z_space(a_z);
    BitMat kernel = null_space(a_x);
    for (const auto &r : kernel.row_list()) {
        if (z_space.contains(r)) {
            continue;
        }
        BitMat system = a_z;
        system.append_row(r);
        BitVec target(system.rows());
        target.set(system.rows() - 1);
        if (auto s = solve(system, target)) {
            return {r, *s};
        }
    }
    throw InvalidCodeError("the code encodes no logical qubit");
}

ZDistanceFloor z_distance_floor(const BitMat &a_x) {
    ZDistanceFloor out;
    size_t n = a_x.cols();
    std::vector<BitVec> cols;
    std::map<BitVec, std::vector<size_t>> where;
    for (size_t j = 0; j < n; j++) {
        cols.push_back(a_x.column(j));
        where[cols.back()].push_back(j);
    }
    out.at_least_three = true;
    for (const auto &[col, idx] : where) {
        if (col.none() || idx.size() > 1) {
            out.at_least_three = false;
        }
    }
    for (size_t i = 0; i < n && !out.triple; i++) {
        for (size_t j = i + 1; j < n && !out.triple; j++) {
            auto it = where.find(cols[i] ^ cols[j]);
            if (it == where.end()) {
                continue;
            }
            auto l = std::upper_bound(it->second.begin(), it->second.end(), j);
            if (l != it->second.end()) {
                out.triple = std::array<size_t, 3>{i, j, *l};
            }
        }
    }
    return out;
}

SubdualXAnalysis subdual_x_analysis(int m) {
    StandardFormCode code = subdual_css(m);
    SubdualXAnalysis out;
    out.m = m;
    out.weight_histogram.assign(code.n + 1, 0);
    RowSpace stabilizers(code.a_x);
    std::vector<BitVec> logicals;
    for (auto &v : span_enumerate(null_space(code.a_z))) {
        out.weight_histogram[v.weight()]++;
        if (!stabilizers.contains(v)) {
            logicals.push_back(std::move(v));
        }
    }
    out.d_x = code.n;
    for (const auto &v : logicals) {
        out.d_x = std::min(out.d_x, v.weight());
    }
    for (const auto &v : logicals) {
        if (v.weight() != out.d_x) {
            continue;
        }
        out.minimum_weight_logicals++;
        if (v[0] || v[1]) {
            out.minimum_weight_on_c_columns++;
            if (!out.example_on_c_columns) {
                out.example_on_c_columns = v;
            }
        }
    }
    return out;
}

}  // namespace korth
