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

#include "korth/codes.h"

#include <bit>
#include <map>

#include "korth/errors.h"

namespace korth {

namespace {

constexpr size_t kMaxFrameSearchRows = 24;

BitVec symplectic_vector(const PauliOp &p) {
    size_t n = p.size();
    BitVec v(2 * n);
    for (size_t q : p.xbits.support()) {
        v.set(q);
    }
    for (size_t q : p.zbits.support()) {
        v.set(n + q);
    }
    return v;
}

void require_width(const PauliOp &p, size_t n, const char *what) {
    if (p.size() != n) {
        throw InvalidCodeError(std::string(what) + " acts on " + std::to_string(p.size()) +
                               " qubits but the code has n = " + std::to_string(n));
    }
}

// Gauss-Jordan on the X parts of `gens` with full Pauli products, pivots
// left to right. Returns the number of rows with a nonzero X part; those rows
// come first.
size_t eliminate_x_block(std::vector<PauliOp> &gens, size_t n) {
    size_t next = 0;
    for (size_t col = 0; col < n && next < gens.size(); col++) {
        size_t found = next;
        while (found < gens.size() && !gens[found].xbits[col]) {
            found++;
        }
        if (found == gens.size()) {
            continue;
        }
        std::swap(gens[next], gens[found]);
        for (size_t j = 0; j < gens.size(); j++) {
            if (j != next && gens[j].xbits[col]) {
                gens[j] = gens[j] * gens[next];
            }
        }
        next++;
    }
    return next;
}

// Gauss-Jordan on the Z parts of gens[first..]; returns the pivot columns.
std::vector<size_t> eliminate_z_block(std::vector<PauliOp> &gens, size_t first, size_t n) {
    std::vector<size_t> pivots;
    size_t next = first;
    for (size_t col = 0; col < n && next < gens.size(); col++) {
        size_t found = next;
        while (found < gens.size() && !gens[found].zbits[col]) {
            found++;
        }
        if (found == gens.size()) {
            continue;
        }
        std::swap(gens[next], gens[found]);
        for (size_t j = first; j < gens.size(); j++) {
            if (j != next && gens[j].zbits[col]) {
                gens[j] = gens[j] * gens[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

// Clears the Z-block pivot columns out of the upper block's B part.
void clear_b_pivots(std::vector<PauliOp> &gens, size_t m, const std::vector<size_t> &z_pivots) {
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < z_pivots.size(); j++) {
            if (gens[i].zbits[z_pivots[j]]) {
                gens[i] = gens[i] * gens[m + j];
            }
        }
    }
}

// Any Pauli that commutes with every generator and anticommutes with Z_r.
std::optional<PauliOp> derive_x_partner(const std::vector<PauliOp> &gens, const BitVec &r,
                                        size_t n) {
    // Unknown (sx | sz); commutation with (x | z) is sx·z + sz·x.
    BitMat system(0, 2 * n);
    BitVec rhs(gens.size() + 1);
    for (const auto &g : gens) {
        BitVec row(2 * n);
        for (size_t q : g.zbits.support()) {
            row.set(q);
        }
        for (size_t q : g.xbits.support()) {
            row.set(n + q);
        }
        system.append_row(std::move(row));
    }
    BitVec last(2 * n);
    for (size_t q : r.support()) {
        last.set(q);
    }
    system.append_row(std::move(last));
    rhs.set(gens.size());
    auto sol = solve(system, rhs);
    if (!sol) {
        return std::nullopt;
    }
    PauliOp p(n);
    for (size_t q = 0; q < n; q++) {
        if ((*sol)[q]) {
            p.xbits.set(q);
        }
        if ((*sol)[n + q]) {
            p.zbits.set(q);
        }
    }
    return p;
}

}  // namespace

void StabilizerCode::validate() const {
    for (size_t i = 0; i < generators.size(); i++) {
        require_width(generators[i], n, "generator");
        if (!generators[i].is_hermitian()) {
            throw InvalidCodeError("generator " + std::to_string(i) + " (" +
                                   generators[i].str() + ") is not Hermitian");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!generators[i].commutes(generators[j])) {
                throw InvalidCodeError("generators " + std::to_string(i) + " and " +
                                       std::to_string(j) + " anticommute");
            }
        }
    }
    if (generators.size() > n || symplectic_rank(generators) != generators.size()) {
        throw InvalidCodeError("generators are not independent");
    }
    auto check_logical = [&](const std::optional<PauliOp> &op, const char *name) {
        if (!op) {
            return;
        }
        require_width(*op, n, name);
        for (size_t i = 0; i < generators.size(); i++) {
            if (!op->commutes(generators[i])) {
                throw InvalidCodeError(std::string(name) + " anticommutes with generator " +
                                       std::to_string(i));
            }
        }
        if (group_element_phase(generators, *op)) {
            throw InvalidCodeError(std::string(name) + " lies in the stabilizer group");
        }
    };
    check_logical(logical_x, "logical_x");
    check_logical(logical_z, "logical_z");
    if (logical_x && logical_z && logical_x->commutes(*logical_z)) {
        throw InvalidCodeError("logical_x and logical_z must anticommute");
    }
}

PauliOp StandardFormCode::x_generator(size_t i) const {
    return PauliOp(a_x.row(i), b.row(i), x_phase[i]);
}

PauliOp StandardFormCode::z_generator(size_t j) const {
    return PauliOp::z_type(a_z.row(j));
}

std::vector<PauliOp> StandardFormCode::generators() const {
    std::vector<PauliOp> out;
    for (size_t i = 0; i < a_x.rows(); i++) {
        out.push_back(x_generator(i));
    }
    for (size_t j = 0; j < a_z.rows(); j++) {
        out.push_back(z_generator(j));
    }
    return out;
}

StabilizerCode StandardFormCode::to_stabilizer_code() const {
    StabilizerCode code;
    code.n = n;
    code.generators = generators();
    code.logical_x = logical_x();
    code.logical_z = logical_z();
    return code;
}

void StandardFormCode::validate() const {
    auto fail = [](const std::string &msg) { throw InvalidCodeError("standard form: " + msg); };
    if (a_x.cols() != n || b.cols() != n || a_z.cols() != n || r.size() != n || s.size() != n) {
        fail("block widths must all equal n = " + std::to_string(n));
    }
    if (b.rows() != a_x.rows() || x_phase.size() != a_x.rows()) {
        fail("A_X, B and the sign list must have the same row count");
    }
    if (rank(a_x) != a_x.rows()) {
        fail("A_X is not full rank");
    }
    if (rank(a_z) != a_z.rows()) {
        fail("A_Z rows are dependent");
    }
    if (a_x.rows() + a_z.rows() + 1 != n) {
        fail("expected n - 1 = " + std::to_string(n - 1) + " generators, got " +
             std::to_string(a_x.rows() + a_z.rows()));
    }
    auto gens = generators();
    for (size_t i = 0; i < gens.size(); i++) {
        if (!gens[i].is_hermitian()) {
            fail("generator " + std::to_string(i) + " is not Hermitian");
        }
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!gens[i].commutes(gens[j])) {
                fail("generators " + std::to_string(i) + " and " + std::to_string(j) +
                     " anticommute");
            }
        }
    }
    if (a_x.multiply(r).any()) {
        fail("Z_r does not commute with the X-type rows");
    }
    if (b.multiply(s).any() || a_z.multiply(s).any()) {
        fail("X_s does not commute with the stabilizers");
    }
    if (!r.dot(s)) {
        fail("X_s and Z_r must anticommute (|r·s| odd)");
    }
}

StandardFormCode make_css_code(BitMat a_x, BitMat a_z, BitVec r, BitVec s) {
    StandardFormCode sf;
    sf.n = a_x.cols();
    sf.b = BitMat(a_x.rows(), sf.n);
    sf.x_phase.assign(a_x.rows(), 0);
    sf.a_x = std::move(a_x);
    sf.a_z = std::move(a_z);
    sf.r = std::move(r);
    sf.s = std::move(s);
    sf.sign_frame = BitVec(sf.n);
    sf.phase_frame = BitVec(sf.n);
    sf.validate();
    return sf;
}

size_t symplectic_rank(const std::vector<PauliOp> &ops) {
    if (ops.empty()) {
        return 0;
    }
    RowSpace space(2 * ops[0].size());
    for (const auto &p : ops) {
        space.insert(symplectic_vector(p));
    }
    return space.dim();
}

std::optional<uint8_t> group_element_phase(const std::vector<PauliOp> &generators,
                                           const PauliOp &p) {
    size_t n = p.size();
    BitMat columns(2 * n, generators.size());
    for (size_t j = 0; j < generators.size(); j++) {
        BitVec v = symplectic_vector(generators[j]);
        for (size_t i : v.support()) {
            columns.set(i, j);
        }
    }
    auto combo = solve(columns, symplectic_vector(p));
    if (!combo) {
        return std::nullopt;
    }
    PauliOp product(n);
    for (size_t j : combo->support()) {
        product = product * generators[j];
    }
    return product.phase;
}

StandardFormCode to_standard_form(const StabilizerCode &code) {
    code.validate();
    size_t n = code.n;
    size_t count = code.generators.size();
    if (count == n) {
        throw InvalidCodeError("the generators fix a single state; no logical qubit is encoded");
    }
    if (count + 1 < n) {
        throw InvalidCodeError(
            "the code encodes " + std::to_string(n - count) +
            " logical qubits but standard form needs exactly one; promote the logical operators "
            "of the other qubits to stabilizers first");
    }

    std::vector<PauliOp> gens = code.generators;
    size_t m = eliminate_x_block(gens, n);
    std::vector<size_t> z_pivots = eliminate_z_block(gens, m, n);
    clear_b_pivots(gens, m, z_pivots);

    // Conjugating by X_y flips the sign of each Z row with odd overlap with y.
    BitMat a_z(0, n);
    BitVec negative(count - m);
    for (size_t j = m; j < count; j++) {
        a_z.append_row(gens[j].zbits);
        if (gens[j].phase == 2) {
            negative.set(j - m);
        }
    }
    auto frame = solve(a_z, negative);
    if (!frame) {
        throw InvalidCodeError("no X string flips exactly the Z stabilizers with sign pattern " +
                               negative.str());
    }
    for (auto &g : gens) {
        g = g.conjugated_by_x(*frame);
    }
    std::optional<PauliOp> given_x = code.logical_x;
    std::optional<PauliOp> given_z = code.logical_z;
    if (given_x) {
        given_x = given_x->conjugated_by_x(*frame);
    }
    if (given_z) {
        given_z = given_z->conjugated_by_x(*frame);
    }

    BitMat a_x(0, n);
    for (size_t i = 0; i < m; i++) {
        a_x.append_row(gens[i].xbits);
    }
    RowSpace z_space(a_z);

    // Z_L: the Z-type logical class.
    BitVec r(n);
    if (given_z && given_z->is_z_type()) {
        r = given_z->zbits;
    } else {
        BitMat candidates = null_space(a_x);
        bool found = false;
        for (const auto &v : candidates.row_list()) {
            if (!z_space.contains(v)) {
                r = v;
                found = true;
                break;
            }
        }
        if (!found) {
            throw InvalidCodeError("no Z-type logical operator exists");
        }
    }

    // X_L: a pure X string anticommuting with Z_r, directly or after a
    // diagonal Clifford frame change that turns Y factors into X.
    BitVec phase_frame(n);
    std::optional<BitVec> s;
    if (given_x && given_x->is_x_type() && given_x->xbits.dot(r)) {
        s = given_x->xbits;
    }
    if (!s) {
        BitMat system(0, n);
        BitVec rhs(m + a_z.rows() + 1);
        for (size_t i = 0; i < m; i++) {
            system.append_row(gens[i].zbits);
        }
        for (const auto &row : a_z.row_list()) {
            system.append_row(row);
        }
        system.append_row(r);
        rhs.set(rhs.size() - 1);
        s = solve(system, rhs);
    }
    if (!s) {
        std::optional<PauliOp> partner;
        if (given_x && !given_x->commutes(PauliOp::z_type(r))) {
            partner = given_x;
        } else {
            partner = derive_x_partner(gens, r, n);
        }
        if (!partner) {
            throw InvalidCodeError("no logical operator anticommutes with Z_r");
        }
        // Look for a representative X^x Z^z of the logical class with z inside
        // x: S_z then turns it into a pure X string. X-type generators change
        // x, so their combinations are walked in Gray-code order; the Z
        // content outside x is then cancelled with Z stabilizers and Z_r.
        if (m > kMaxFrameSearchRows) {
            throw UnsupportedError("X/Y-plane frame search is limited to " +
                                   std::to_string(kMaxFrameSearchRows) + " X-type generators");
        }
        std::vector<BitVec> z_ops = a_z.row_list();
        z_ops.push_back(r);
        BitVec x = partner->xbits;
        BitVec z = partner->zbits;
        std::optional<BitVec> t;
        for (uint64_t step = 0; step < (uint64_t{1} << m) && !t; step++) {
            if (step) {
                size_t i = static_cast<size_t>(std::countr_zero(step));
                x ^= gens[i].xbits;
                z ^= gens[i].zbits;
            }
            std::vector<size_t> outside = (~x).support();
            BitMat system(outside.size(), z_ops.size());
            BitVec rhs(outside.size());
            for (size_t a = 0; a < outside.size(); a++) {
                for (size_t j = 0; j < z_ops.size(); j++) {
                    if (z_ops[j][outside[a]]) {
                        system.set(a, j);
                    }
                }
                if (z[outside[a]]) {
                    rhs.set(a);
                }
            }
            if (auto combo = solve(system, rhs)) {
                BitVec cleared = z;
                for (size_t j : combo->support()) {
                    cleared ^= z_ops[j];
                }
                t = std::move(cleared);
            }
        }
        if (!t) {
            throw InvalidCodeError(
                "no logical X operator can be brought into the X/Y plane by diagonal Cliffords");
        }
        phase_frame = *t;
        for (auto &g : gens) {
            g = g.conjugated_by_s(phase_frame);
        }
        s = std::move(x);
        clear_b_pivots(gens, m, z_pivots);
    }

    StandardFormCode sf;
    sf.n = n;
    sf.a_x = std::move(a_x);
    sf.b = BitMat(0, n);
    for (size_t i = 0; i < m; i++) {
        sf.b.append_row(gens[i].zbits);
        sf.x_phase.push_back(gens[i].phase);
    }
    sf.a_z = std::move(a_z);
    sf.r = std::move(r);
    sf.s = std::move(*s);
    sf.sign_frame = std::move(*frame);
    sf.phase_frame = std::move(phase_frame);
    sf.validate();
    return sf;
}

bool is_css(const StandardFormCode &sf) {
    return sf.b.is_zero();
}

std::vector<SupportTerm> logical_zero_support(const StandardFormCode &sf) {
    size_t m = sf.m();
    if (m >= 8 * sizeof(size_t) - 2) {
        throw RangeError("2^" + std::to_string(m) + " support terms are too many to list");
    }
    size_t count = size_t{1} << m;
    std::vector<PauliOp> products;
    products.reserve(count);
    products.emplace_back(sf.n);
    for (size_t i = 1; i < count; i++) {
        products.push_back(products[i & (i - 1)] * sf.x_generator(std::countr_zero(i)));
    }
    // X^x Z^z |0...0> = |x>, so each product contributes i^phase |x>.
    std::vector<SupportTerm> out;
    out.reserve(count);
    for (auto &p : products) {
        out.push_back(SupportTerm{std::move(p.xbits), p.phase});
    }
    return out;
}

DegeneracyPartition degeneracy_classes(const BitMat &a_x) {
    DegeneracyPartition part;
    BitMat columns = a_x.transpose();
    std::map<BitVec, size_t> index;
    part.class_of.resize(a_x.cols());
    for (size_t q = 0; q < a_x.cols(); q++) {
        const BitVec &col = columns.row(q);
        auto [it, inserted] = index.try_emplace(col, part.classes.size());
        if (inserted) {
            part.classes.emplace_back();
            part.representatives.push_back(q);
            if (col.none()) {
                part.undetectable_class = it->second;
            }
        }
        part.classes[it->second].push_back(q);
        part.class_of[q] = it->second;
    }
    return part;
}

NondegenerateReduction nondegenerate_reduction(const BitMat &a_x, const DyadicPhaseVector &theta) {
    if (theta.size() != a_x.cols()) {
        throw DimensionError("phase vector length " + std::to_string(theta.size()) +
                             " does not match n = " + std::to_string(a_x.cols()));
    }
    DegeneracyPartition part = degeneracy_classes(a_x);
    std::vector<int64_t> aggregated(a_x.cols(), 0);
    BitVec reps(a_x.cols());
    for (size_t c = 0; c < part.classes.size(); c++) {
        uint64_t sum = 0;
        for (size_t q : part.classes[c]) {
            sum += theta[q];
        }
        aggregated[part.representatives[c]] = static_cast<int64_t>(sum & (theta.modulus() - 1));
        reps.set(part.representatives[c]);
    }
    BitMat reduced = a_x.select_columns(part.representatives);
    return NondegenerateReduction{std::move(part), std::move(reps), std::move(reduced),
                                  DyadicPhaseVector(theta.k(), aggregated)};
}

NondegenerateReduction nondegenerate_reduction(const StandardFormCode &sf,
                                               const DyadicPhaseVector &theta) {
    return nondegenerate_reduction(sf.a_x, theta);
}

}  // namespace korth
