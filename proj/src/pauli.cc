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

#include "korth/pauli.h"

#include "korth/errors.h"

namespace korth {

PauliOp::PauliOp(BitVec x, BitVec z, uint8_t phase)
    : xbits(std::move(x)), zbits(std::move(z)), phase(phase & 3) {
    if (xbits.size() != zbits.size()) {
        throw DimensionError("Pauli X and Z parts have different lengths");
    }
}

PauliOp PauliOp::x_type(BitVec s) {
    BitVec z(s.size());
    return PauliOp(std::move(s), std::move(z), 0);
}

PauliOp PauliOp::z_type(BitVec r) {
    BitVec x(r.size());
    return PauliOp(std::move(x), std::move(r), 0);
}

PauliOp PauliOp::parse(std::string_view text) {
    uint8_t sign = 0;
    size_t pos = 0;
    if (text.empty() || (text[0] != '+' && text[0] != '-')) {
        throw ParseError("Pauli string must start with a sign prefix (+, -, +i, -i)", 1, 1);
    }
    if (text[0] == '-') {
        sign = 2;
    }
    pos = 1;
    if (pos < text.size() && text[pos] == 'i') {
        sign += 1;
        pos++;
    }
    size_t n = text.size() - pos;
    PauliOp p(n);
    size_t ys = 0;
    for (size_t q = 0; q < n; q++) {
        switch (text[pos + q]) {
            case 'I':
                break;
            case 'X':
                p.xbits.set(q);
                break;
            case 'Z':
                p.zbits.set(q);
                break;
            case 'Y':
                p.xbits.set(q);
                p.zbits.set(q);
                ys++;
                break;
            default:
                throw ParseError(std::string("unexpected Pauli letter '") + text[pos + q] + "'", 1,
                                 pos + q + 1);
        }
    }
    p.phase = (sign + ys) & 3;
    return p;
}

uint8_t PauliOp::sign_exponent() const {
    size_t ys = (xbits & zbits).weight();
    return (phase + 4 - (ys & 3)) & 3;
}

std::string PauliOp::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[sign_exponent()];
    for (size_t q = 0; q < size(); q++) {
        bool x = xbits[q];
        bool z = zbits[q];
        out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

size_t PauliOp::weight() const {
    return (xbits | zbits).weight();
}

PauliOp PauliOp::operator*(const PauliOp &rhs) const {
    if (size() != rhs.size()) {
        throw DimensionError("Pauli operators act on different qubit counts");
    }
    // X^a Z^b X^c Z^d = (-1)^{|b·c|} X^{a+c} Z^{b+d}.
    uint8_t swaps = (zbits & rhs.xbits).weight() & 1;
    return PauliOp(xbits ^ rhs.xbits, zbits ^ rhs.zbits,
                   static_cast<uint8_t>(phase + rhs.phase + 2 * swaps));
}

bool PauliOp::commutes(const PauliOp &other) const {
    if (size() != other.size()) {
        throw DimensionError("Pauli operators act on different qubit counts");
    }
    return xbits.dot(other.zbits) == zbits.dot(other.xbits);
}

PauliOp PauliOp::conjugated_by_x(const BitVec &y) const {
    PauliOp out = *this;
    if (zbits.dot(y)) {
        out.phase = (out.phase + 2) & 3;
    }
    return out;
}

PauliOp PauliOp::conjugated_by_s(const BitVec &t) const {
    // S X S† = iXZ and S Z S† = Z, so each X on a qubit of t picks up a Z and
    // a factor of i.
    BitVec hit = xbits & t;
    PauliOp out = *this;
    out.zbits ^= hit;
    out.phase = (out.phase + hit.weight()) & 3;
    return out;
}

bool commutes(const PauliOp &p, const PauliOp &q) {
    return p.commutes(q);
}

}  // namespace korth
