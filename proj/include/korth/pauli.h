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

#ifndef KORTH_PAULI_H
#define KORTH_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "korth/gf2.h"

namespace korth {

/// An n-qubit Pauli operator i^phase · X^x · Z^z.
///
/// The X factors are ordered before the Z factors on each qubit, so a Y in
/// letter form contributes one unit to `phase` (Y = iXZ). `phase` is stored
/// modulo 4 and encodes {+1, +i, -1, -i} as {0, 1, 2, 3}.
struct PauliOp {
    BitVec xbits;
    BitVec zbits;
    uint8_t phase = 0;

    PauliOp() = default;
    explicit PauliOp(size_t n) : xbits(n), zbits(n) {
    }
    PauliOp(BitVec x, BitVec z, uint8_t phase = 0);

    static PauliOp x_type(BitVec s);
    static PauliOp z_type(BitVec r);

    /// Parses letter form such as "+XZZXI" or "-iYIZ". The sign prefix is
    /// required and is one of "+", "-", "+i", "-i".
    static PauliOp parse(std::string_view text);
    /// Inverse of parse(); round-trips exactly.
    std::string str() const;

    size_t size() const {
        return xbits.size();
    }
    size_t weight() const;
    /// Phase exponent of the letter form (the printed sign prefix).
    uint8_t sign_exponent() const;
    bool is_hermitian() const {
        return sign_exponent() % 2 == 0;
    }
    bool is_x_type() const {
        return zbits.none();
    }
    bool is_z_type() const {
        return xbits.none();
    }

    PauliOp operator*(const PauliOp &rhs) const;
    bool commutes(const PauliOp &other) const;

    /// X_y · P · X_y.
    PauliOp conjugated_by_x(const BitVec &y) const;
    /// S_t · P · S_t^† where S acts on the qubits in t.
    PauliOp conjugated_by_s(const BitVec &t) const;

    bool operator==(const PauliOp &other) const = default;
};

bool commutes(const PauliOp &p, const PauliOp &q);

}  // namespace korth

#endif
