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

#include "korth/dyadic.h"

#include <algorithm>
#include <bit>

#include "korth/errors.h"

namespace korth {

DyadicPhaseVector::DyadicPhaseVector(int k, const std::vector<int64_t> &p) : k_(k) {
    if (k < 1 || k > kMaxDyadicK) {
        throw RangeError("phase exponent k must lie in [1, " + std::to_string(kMaxDyadicK) +
                         "], got " + std::to_string(k));
    }
    uint64_t mask = modulus() - 1;
    p_.reserve(p.size());
    for (int64_t v : p) {
        // Two's complement wrap-around agrees with reduction mod 2^k.
        p_.push_back(static_cast<uint64_t>(v) & mask);
    }
}

DyadicPhaseVector DyadicPhaseVector::uniform(int k, size_t n, int64_t value) {
    return DyadicPhaseVector(k, std::vector<int64_t>(n, value));
}

BitVec DyadicPhaseVector::parity() const {
    BitVec out(p_.size());
    for (size_t i = 0; i < p_.size(); i++) {
        if (p_[i] & 1) {
            out.set(i);
        }
    }
    return out;
}

uint64_t DyadicPhaseVector::dot(const BitVec &x) const {
    if (x.size() != p_.size()) {
        throw DimensionError("phase vector has " + std::to_string(p_.size()) +
                             " entries but the bit string has length " + std::to_string(x.size()));
    }
    uint64_t acc = 0;
    for (size_t i : x.support()) {
        acc += p_[i];
    }
    return acc & (modulus() - 1);
}

std::string format_dyadic_phase(uint64_t numerator, int k) {
    uint64_t mod = uint64_t{1} << k;
    numerator &= mod - 1;
    if (numerator == 0) {
        return "0";
    }
    // numerator·π / 2^(k-1); cancel common powers of two.
    int shift = std::min<int>(std::countr_zero(numerator), k - 1);
    uint64_t num = numerator >> shift;
    uint64_t den = uint64_t{1} << (k - 1 - shift);
    std::string out = num == 1 ? "π" : std::to_string(num) + "π";
    if (den != 1) {
        out += "/" + std::to_string(den);
    }
    return out;
}

}  // namespace korth
