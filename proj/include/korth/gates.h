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

#ifndef KORTH_GATES_H
#define KORTH_GATES_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "korth/codes.h"
#include "korth/congruence.h"
#include "korth/dyadic.h"
#include "korth/orthogonality.h"

namespace korth {

/// Result of applying ⊗_i P(p_i·π/2^(k-1)) to a code.
///
/// The gate acts as a logical phase gate when every basis state of |0_L>
/// (the strings x ∈ S_X) picks up no phase and every basis state of |1_L>
/// (the strings x ⊕ s) picks up the same phase. The logical phase is then
/// logical_numerator·π/2^(k-1).
struct PhaseActionReport {
    int k = 0;
    bool fixes_zero = true;
    bool uniform_on_one = true;
    std::optional<uint64_t> logical_numerator;
    /// First offending basis string (Gray-code order over S_X) and its phase.
    std::optional<BitVec> violating_x;
    uint64_t violating_numerator = 0;
    /// Set for non-CSS inputs: the verdict uses only the basis-state supports
    /// of |0_L> and |1_L>, never the i^phase amplitudes.
    bool support_only = false;

    bool is_logical() const {
        return fixes_zero && uniform_on_one;
    }
    std::string phase_string() const;
};

PhaseActionReport logical_phase_action(const StandardFormCode &sf, const DyadicPhaseVector &theta);

/// x·p mod 2^k for every x in the row space of a_x, in span_enumerate order.
std::vector<uint64_t> support_phases(const BitMat &a_x, const DyadicPhaseVector &theta);

/// Exponent e such that every transversal phase admissible on this
/// non-degenerate code is a multiple of π/2^e (e = m - 2). Each column is
/// isolated in turn and the all-rows product is checked to be its indicator.
/// Throws DegenerateCodeError or NoSyndromeError for degenerate inputs.
int phase_quantization_exponent(const StandardFormCode &sf);

/// Every p ∈ (Z/2^k)^n that makes ⊗ P(p_i·π/2^(k-1)) a logical phase gate.
struct TransversalPhaseSolutions {
    int k = 0;
    size_t n = 0;
    /// The congruences p must satisfy (mod 2^k).
    std::vector<Residues> constraints;
    CongruenceSolution module;
    /// Logical phase numerator of each module generator.
    std::vector<uint64_t> generator_numerators;
    /// One solution per reachable logical phase valuation, finest first.
    std::vector<Residues> particular;
    std::vector<uint64_t> particular_numerators;

    bool contains(const DyadicPhaseVector &theta) const;
};

/// Solves the linear congruences exactly over Z/2^k. The "all x ∈ S_X"
/// conditions are expressed through generator products: 2^(|U|-1)·Σ_i
/// (∏_U x)_i p_i ≡ 0 for every set U of at most k rows, plus the matching
/// conditions 2^|U|·Σ_i (∏_U x · s)_i p_i ≡ 0 for the |1_L> branch.
TransversalPhaseSolutions find_transversal_phases(const StandardFormCode &sf, int k);

/// A failed congruence Σ_i (∏_rows x)_i p_i ≡ 0 (mod 2^modulus_log2).
struct CongruenceFailure {
    std::vector<size_t> rows;
    int modulus_log2 = 0;
    uint64_t residue = 0;
};

/// Checks Σ_i (x^{i1}·…·x^{it})_i p_i ≡ 0 (mod 2^e(t)) over every set of
/// t <= max_t distinct generator rows. Returns the first failure in order of
/// increasing t and then lexicographic rows.
std::optional<CongruenceFailure> check_graded_congruences(const BitMat &a_x,
                                                          const DyadicPhaseVector &theta,
                                                          int max_t,
                                                          const std::function<int(int)> &e);

struct NecessityReport {
    uint64_t logical_numerator = 0;
    /// r_i = p_i mod 2.
    BitVec induced_r;
    OrthogonalityReport orthogonality;
    std::optional<CongruenceFailure> graded_failure;

    bool holds() const {
        return orthogonality.holds && !graded_failure;
    }
};

/// Given a transversal gate with odd logical numerator, confirms that A_X is
/// k-orthogonal with respect to r = p mod 2 and that the graded congruences
/// Σ (x¹·…·x^q)_i p_i ≡ 0 (mod 2^(k-q+1)) hold for q = 1..k. Throws
/// PreconditionError when the gate is not logical or its numerator is even.
NecessityReport verify_korth_necessity(const StandardFormCode &sf, const DyadicPhaseVector &theta);

/// A claimed transversal diagonal gate ⊗_i c^q-P(p_i·π/2^(k-q-1)).
///
/// Every physical gate is a power p_i of the single base gate
/// c^q-P(π/2^(k-q-1)); realized.k() fixes the base.
struct GateDescriptor {
    int controls = 0;
    DyadicPhaseVector realized;
    /// Optional claimed logical numerator, mod 2^(k-q).
    std::optional<uint64_t> claimed_logical_numerator;

    int k() const {
        return realized.k();
    }
    /// Exponent of the base gate's phase denominator: π/2^base_exponent().
    int base_exponent() const {
        return realized.k() - controls - 1;
    }
    /// Throws RangeError / DimensionError on an inconsistent descriptor.
    void validate(size_t n) const;
};

struct ControlledPhaseReport {
    int controls = 0;
    bool holds = false;
    std::optional<CongruenceFailure> failure;
    /// Logical gate c^q-P(logical_numerator·π/2^(k-q-1)).
    uint64_t logical_numerator = 0;
    int logical_exponent = 0;
    std::optional<bool> claim_matches;
    BitVec induced_r;
    bool non_clifford = false;
    OrthogonalityReport r_orthogonality;
    /// |r| >= 2^(k+1) - 1; only evaluated for non-Clifford gates.
    std::optional<bool> size_bound_ok;
    /// Exact action on every logical basis state of the q+1 blocks: each tuple
    /// y^j ∈ S_X ⊕ a_j·s must pick up logical_numerator·∏_j a_j. The graded
    /// congruences behind `holds` only constrain the all-|0_L> tuples, so they
    /// are necessary but not sufficient. Absent when there are more than
    /// kMaxControlledTuples tuples to enumerate.
    std::optional<bool> logical_action;
    /// First failing logical basis state (a_1 … a_{q+1}) and its phase.
    std::vector<int> violating_assignment;
    uint64_t violating_numerator = 0;

    /// The gate is a logical c^q-P of the reported phase.
    bool certified() const {
        return holds && logical_action.value_or(false);
    }

    std::string phase_string() const;
};

inline constexpr uint64_t kMaxControlledTuples = uint64_t{1} << 24;

/// Certifies a transversal q-controlled phase on q+1 blocks of a CSS code via
/// Σ_i (x¹·…·xᵗ)_i p_i ≡ 0 (mod 2^(k - max(q, t-1))) for t = 1..k, then
/// checks the full logical action by enumeration. With q = 0 both verdicts are
/// that of logical_phase_action. Throws UnsupportedError for non-CSS codes.
ControlledPhaseReport controlled_phase_action(const StandardFormCode &sf, const GateDescriptor &g);

/// Transversal CNOT between two blocks is logical exactly for CSS codes.
bool transversal_cnot_check(const StandardFormCode &sf);

}  // namespace korth

#endif
