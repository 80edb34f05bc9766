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

#ifndef KORTH_DYADIC_H
#define KORTH_DYADIC_H

#include <cstdint>
#include <string>
#include <vector>

#include "korth/gf2.h"

namespace korth {

/// Largest supported denominator exponent; residues fit in a uint64_t.
inline constexpr int kMaxDyadicK = 62;

/// Per-qubit phases θ_i = p_i·π/2^(k-1), stored as exact residues p_i mod 2^k.
class DyadicPhaseVector {
   public:
    DyadicPhaseVector(int k, const std::vector<int64_t> &p);
    static DyadicPhaseVector uniform(int k, size_t n, int64_t value);

    int k() const {
        return k_;
    }
    uint64_t modulus() const {
        return uint64_t{1} << k_;
    }
    size_t size() const {
        return p_.size();
    }
    const std::vector<uint64_t> &p() const {
        return p_;
    }
    uint64_t operator[](size_t i) const {
        return p_[i];
    }
    /// Bit i is p_i mod 2.
    BitVec parity() const;
    /// Sum of p_i over the support of x, reduced mod 2^k.
    uint64_t dot(const BitVec &x) const;

    bool operator==(const DyadicPhaseVector &other) const = default;

   private:
    int k_;
    std::vector<uint64_t> p_;
};

/// Renders numerator·π/2^(k-1) in lowest terms, e.g. "7π/4", "π", "0".
std::string format_dyadic_phase(uint64_t numerator, int k);

}  // namespace korth

#endif
