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

#ifndef KORTH_CODES_H
#define KORTH_CODES_H

#include <cstdint>
#include <optional>
#include <vector>

#include "korth/dyadic.h"
#include "korth/gf2.h"
#include "korth/pauli.h"

namespace korth {

/// A stabilizer code given by an arbitrary list of generators.
struct StabilizerCode {
    size_t n = 0;
    std::vector<PauliOp> generators;
    std::optional<PauliOp> logical_x;
    std::optional<PauliOp> logical_z;

    size_t num_logical_qubits() const {
        return n - generators.size();
    }
    /// Throws InvalidCodeError unless the generators are Hermitian, pairwise
    /// commuting and independent, and any logicals commute with them,
    /// anticommute with each other and lie outside the stabilizer group.
    void validate() const;
};

/// A single-logical-qubit code in the block form
///
///     [ A_X  B  ]
///     [  0  A_Z ]
///
/// with A_X of full row rank m, all A_Z rows carrying a + sign, Z_L = Z_r and
/// X_L = X_s.
///
/// Row i of the upper block is the operator i^x_phase[i] · X^{A_X[i]} Z^{B[i]}.
/// When the reduction had to conjugate the input code to reach this form,
/// the conjugation is recorded: the stored code is S_t X_y C X_y S_t^† for
/// the input code C, with y = sign_frame and t = phase_frame.
struct StandardFormCode {
    size_t n = 0;
    BitMat a_x;
    BitMat b;
    BitMat a_z;
    std::vector<uint8_t> x_phase;
    BitVec r;
    BitVec s;
    BitVec sign_frame;
    BitVec phase_frame;

    size_t m() const {
        return a_x.rows();
    }
    PauliOp x_generator(size_t i) const;
    PauliOp z_generator(size_t j) const;
    std::vector<PauliOp> generators() const;
    PauliOp logical_x() const {
        return PauliOp::x_type(s);
    }
    PauliOp logical_z() const {
        return PauliOp::z_type(r);
    }
    StabilizerCode to_stabilizer_code() const;
    /// Throws InvalidCodeError if any block-form invariant fails.
    void validate() const;
};

/// CSS code in standard form from its two check matrices and logical supports.
StandardFormCode make_css_code(BitMat a_x, BitMat a_z, BitVec r, BitVec s);

/// Rank of the generators' (x|z) vectors over GF(2).
size_t symplectic_rank(const std::vector<PauliOp> &ops);
/// If p's (x|z) vector is a combination of the generators, returns the phase
/// exponent of that product (so p is in the group iff the result equals
/// p.phase). Returns nullopt otherwise. Generators must pairwise commute.
std::optional<uint8_t> group_element_phase(const std::vector<PauliOp> &generators,
                                           const PauliOp &p);

/// Row-reduces the generators into block form, normalizes the Z-block signs by
/// conjugating with an X string, and fixes Z_L = Z_r, X_L = X_s. Logical
/// operators missing from the input are derived from the normalizer.
StandardFormCode to_standard_form(const StabilizerCode &code);

bool is_css(const StandardFormCode &sf);

/// One basis state of the encoded |0_L>, with amplitude i^phase.
struct SupportTerm {
    BitVec x;
    uint8_t phase = 0;
};

/// The 2^m basis states (and their fourth-root-of-unity phases) appearing in
/// |0_L>. Element i is the product of the upper-block generators selected by
/// the bits of i.
std::vector<SupportTerm> logical_zero_support(const StandardFormCode &sf);

/// Qubits grouped by identical A_X column (identical Z-error syndrome).
struct DegeneracyPartition {
    /// Classes ordered by their smallest member; members ascending.
    std::vector<std::vector<size_t>> classes;
    /// Smallest member of each class.
    std::vector<size_t> representatives;
    /// class_of[q] is the index of the class containing qubit q.
    std::vector<size_t> class_of;
    /// Index of the class whose column is zero (errors there are undetectable).
    std::optional<size_t> undetectable_class;

    bool is_nondegenerate() const {
        return classes.size() == class_of.size() && !undetectable_class;
    }
};

DegeneracyPartition degeneracy_classes(const BitMat &a_x);

struct NondegenerateReduction {
    DegeneracyPartition partition;
    /// One marked qubit per degeneracy class.
    BitVec representatives;
    /// A_X restricted to the representative columns.
    BitMat reduced_a_x;
    /// Class sums placed on representatives, zero on the other members.
    DyadicPhaseVector phases;
};

NondegenerateReduction nondegenerate_reduction(const BitMat &a_x, const DyadicPhaseVector &theta);
NondegenerateReduction nondegenerate_reduction(const StandardFormCode &sf,
                                               const DyadicPhaseVector &theta);

}  // namespace korth

#endif
