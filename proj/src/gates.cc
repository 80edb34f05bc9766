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

#include "korth/gates.h"

#include <algorithm>
#include <bit>
#include <set>

#include "korth/errors.h"

namespace korth {

namespace {

constexpr size_t kMaxSpanRows = 30;

uint64_t masked_dot(const Residues &p, const BitVec &x, uint64_t mask) {
    uint64_t acc = 0;
    for (size_t i : x.support()) {
        acc += p[i];
    }
    return acc & mask;
}

// Visits every set of t distinct rows (1 <= t <= max_t), t ascending and
// lexicographic within t, with the AND of the chosen rows. Sets whose
// product is already empty are skipped along with their extensions. The
// visitor returns false to stop.
template <typename Visit>
bool for_each_row_product(const BitMat &a, size_t max_t, Visit &&visit) {
    std::vector<size_t> chosen;
    std::function<bool(size_t, size_t, const BitVec &)> walk = [&](size_t t, size_t start,
                                                                  const BitVec &prefix) {
        if (chosen.size() == t) {
            return visit(chosen, prefix);
        }
        size_t needed = t - chosen.size();
        for (size_t i = start; i + needed <= a.rows(); i++) {
            BitVec next = chosen.empty() ? a.row(i) : (prefix & a.row(i));
            if (next.none()) {
                continue;
            }
            chosen.push_back(i);
            bool keep_going = walk(t, i + 1, next);
            chosen.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    };
    size_t top = std::min(max_t, a.rows());
    for (size_t t = 1; t <= top; t++) {
        if (!walk(t, 0, BitVec(a.cols()))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string PhaseActionReport::phase_string() const {
    return logical_numerator ? format_dyadic_phase(*logical_numerator, k) : "none";
}

PhaseActionReport logical_phase_action(const StandardFormCode &sf, const DyadicPhaseVector &theta) {
    if (theta.size() != sf.n) {
        throw DimensionError("phase vector has " + std::to_string(theta.size()) +
                             " entries but the code has n = " + std::to_string(sf.n));
    }
    size_t m = sf.m();
    if (m > kMaxSpanRows) {
        throw RangeError("S_X with 2^" + std::to_string(m) + " elements is too large to scan");
    }
    PhaseActionReport rep;
    rep.k = theta.k();
    rep.support_only = !is_css(sf);
    const uint64_t mask = theta.modulus() - 1;
    const Residues &p = theta.p();
    const uint64_t one_phase = masked_dot(p, sf.s, mask);

    BitVec x(sf.n);
    size_t count = size_t{1} << m;
    for (size_t i = 1; i < count; i++) {
        x ^= sf.a_x.row(std::countr_zero(i));
        uint64_t zero_branch = masked_dot(p, x, mask);
        if (zero_branch != 0) {
            rep.fixes_zero = false;
            rep.violating_x = x;
            rep.violating_numerator = zero_branch;
            return rep;
        }
        BitVec shifted = x ^ sf.s;
        uint64_t one_branch = masked_dot(p, shifted, mask);
        if (one_branch != one_phase) {
            rep.uniform_on_one = false;
            rep.violating_x = std::move(shifted);
            rep.violating_numerator = one_branch;
            return rep;
        }
    }
    rep.logical_numerator = one_phase;
    return rep;
}

std::vector<uint64_t> support_phases(const BitMat &a_x, const DyadicPhaseVector &theta) {
    std::vector<uint64_t> out;
    for (const auto &x : span_enumerate(a_x)) {
        out.push_back(theta.dot(x));
    }
    return out;
}

int phase_quantization_exponent(const StandardFormCode &sf) {
    DegeneracyPartition part = degeneracy_classes(sf.a_x);
    if (part.undetectable_class) {
        throw NoSyndromeError("qubit " +
                              std::to_string(part.representatives[*part.undetectable_class]) +
                              " has no syndrome; apply nondegenerate_reduction first");
    }
    if (!part.is_nondegenerate()) {
        throw DegenerateCodeError(
            "the code is degenerate (repeated A_X columns); apply nondegenerate_reduction first");
    }
    int m = static_cast<int>(sf.m());
    if (m < 2) {
        throw PreconditionError("with m = " + std::to_string(m) +
                                " every admissible transversal phase is a multiple of 2π");
    }
    for (size_t q = 0; q < sf.n; q++) {
        BitMat iso = isolate_column(sf.a_x, q);
        BitVec product = and_product(std::span<const BitVec>(iso.row_list()));
        if (product != BitVec::unit(sf.n, q)) {
            throw std::logic_error("isolating column " + std::to_string(q) +
                                   " did not single it out");
        }
    }
    // 2^(m-1)·θ_q ≡ 0 (mod 2π) for each isolated column q.
    return m - 2;
}

bool TransversalPhaseSolutions::contains(const DyadicPhaseVector &theta) const {
    if (theta.k() != k || theta.size() != n) {
        return false;
    }
    return satisfies_congruences(constraints, theta.p(), k);
}

TransversalPhaseSolutions find_transversal_phases(const StandardFormCode &sf, int k) {
    if (k < 1 || k > kMaxDyadicK) {
        throw RangeError("k must lie in [1, " + std::to_string(kMaxDyadicK) + "]");
    }
    const uint64_t mask = (uint64_t{1} << k) - 1;
    std::set<Residues> unique;
    auto add = [&](const BitVec &support, int shift) {
        if (shift >= k || support.none()) {
            return;
        }
        Residues row(sf.n, 0);
        for (size_t i : support.support()) {
            row[i] = (uint64_t{1} << shift) & mask;
        }
        unique.insert(std::move(row));
    };
    for_each_row_product(sf.a_x, static_cast<size_t>(k),
                         [&](const std::vector<size_t> &rows, const BitVec &product) {
                             int t = static_cast<int>(rows.size());
                             add(product, t - 1);
                             add(product & sf.s, t);
                             return true;
                         });

    TransversalPhaseSolutions out;
    out.k = k;
    out.n = sf.n;
    out.constraints.assign(unique.begin(), unique.end());
    out.module = solve_congruences(out.constraints, sf.n, k);
    int best_valuation = k;
    size_t best = 0;
    for (size_t j = 0; j < out.module.generators.size(); j++) {
        uint64_t num = masked_dot(out.module.generators[j], sf.s, mask);
        out.generator_numerators.push_back(num);
        if (num != 0 && std::countr_zero(num) < best_valuation) {
            best_valuation = std::countr_zero(num);
            best = j;
        }
    }
    if (best_valuation == k) {
        out.particular.push_back(Residues(sf.n, 0));
        out.particular_numerators.push_back(0);
        return out;
    }
    for (int j = 0; best_valuation + j < k; j++) {
        Residues scaled = out.module.generators[best];
        for (auto &v : scaled) {
            v = (v << j) & mask;
        }
        out.particular_numerators.push_back(masked_dot(scaled, sf.s, mask));
        out.particular.push_back(std::move(scaled));
    }
    return out;
}

std::optional<CongruenceFailure> check_graded_congruences(const BitMat &a_x,
                                                          const DyadicPhaseVector &theta,
                                                          int max_t,
                                                          const std::function<int(int)> &e) {
    if (theta.size() != a_x.cols()) {
        throw DimensionError("phase vector length does not match the column count");
    }
    std::optional<CongruenceFailure> failure;
    if (max_t < 1) {
        return failure;
    }
    for_each_row_product(a_x, static_cast<size_t>(max_t),
                         [&](const std::vector<size_t> &rows, const BitVec &product) {
                             int exponent = e(static_cast<int>(rows.size()));
                             if (exponent <= 0) {
                                 return true;
                             }
                             uint64_t mask = (uint64_t{1} << exponent) - 1;
                             uint64_t residue = masked_dot(theta.p(), product, mask);
                             if (residue != 0) {
                                 failure = CongruenceFailure{rows, exponent, residue};
                                 return false;
                             }
                             return true;
                         });
    return failure;
}

NecessityReport verify_korth_necessity(const StandardFormCode &sf, const DyadicPhaseVector &theta) {
    PhaseActionReport action = logical_phase_action(sf, theta);
    if (!action.is_logical()) {
        throw PreconditionError(
            std::string("the gate is not a logical phase gate: basis state ") +
            action.violating_x->str() + " picks up phase " +
            format_dyadic_phase(action.violating_numerator, theta.k()) +
            (action.fixes_zero ? " inside |1_L>" : " inside |0_L>"));
    }
    if (*action.logical_numerator % 2 == 0) {
        throw PreconditionError("logical phase " + action.phase_string() +
                                " has an even numerator over π/2^" +
                                std::to_string(theta.k() - 1) +
                                "; the necessity check needs an odd one");
    }
    NecessityReport rep;
    int k = theta.k();
    rep.logical_numerator = *action.logical_numerator;
    rep.induced_r = theta.parity();
    rep.orthogonality = is_k_orthogonal(sf.a_x, k, rep.induced_r);
    rep.graded_failure =
        check_graded_congruences(sf.a_x, theta, k, [k](int q) { return k - q + 1; });
    return rep;
}

void GateDescriptor::validate(size_t n) const {
    if (controls < 0) {
        throw RangeError("controls must be non-negative");
    }
    if (controls >= realized.k()) {
        throw RangeError("with k = " + std::to_string(realized.k()) + " at most " +
                         std::to_string(realized.k() - 1) + " controls fit: the base gate is " +
                         "c^q-P(π/2^(k-q-1))");
    }
    if (realized.size() != n) {
        throw DimensionError("gate acts on " + std::to_string(realized.size()) +
                             " qubits but the code has n = " + std::to_string(n));
    }
    if (claimed_logical_numerator &&
        *claimed_logical_numerator >= (uint64_t{1} << (realized.k() - controls))) {
        throw RangeError("claimed logical numerator must be below 2^(k-q)");
    }
}

std::string ControlledPhaseReport::phase_string() const {
    return format_dyadic_phase(logical_numerator, logical_exponent + 1);
}

namespace {

// Number of non-decreasing (q+1)-tuples over `size` elements, saturating.
uint64_t multiset_count(uint64_t size, int q) {
    long double count = 1;
    for (int j = 0; j <= q; j++) {
        count = count * static_cast<long double>(size + j) / (j + 1);
    }
    return count > 1e18L ? UINT64_MAX : static_cast<uint64_t>(count + 0.5L);
}

// The tuple phase Σ_i p_i·∏_j y^j_i is symmetric in the blocks, so only
// non-decreasing index tuples over S_X ∪ (S_X ⊕ s) are visited.
void enumerate_controlled_action(const StandardFormCode &sf, const GateDescriptor &g,
                                 ControlledPhaseReport &rep) {
    const size_t m = sf.m();
    const int q = g.controls;
    if (m + 1 >= 63 || multiset_count(uint64_t{1} << (m + 1), q) > kMaxControlledTuples) {
        return;
    }
    const uint64_t mask = (uint64_t{1} << (g.k() - q)) - 1;
    std::vector<BitVec> elems;
    std::vector<int> is_one;
    std::vector<BitVec> span = span_enumerate(sf.a_x);
    for (int a = 0; a < 2; a++) {
        for (const auto &x : span) {
            elems.push_back(a ? (x ^ sf.s) : x);
            is_one.push_back(a);
        }
    }
    std::vector<size_t> idx(q + 1, 0);
    bool ok = true;
    auto visit = [&](auto &&self, int j, size_t start, const BitVec &prod) -> void {
        for (size_t e = start; e < elems.size() && ok; e++) {
            idx[j] = e;
            BitVec next = prod & elems[e];
            if (j < q) {
                self(self, j + 1, e, next);
                continue;
            }
            bool all_one = true;
            for (size_t i : idx) {
                all_one = all_one && is_one[i];
            }
            uint64_t want = all_one ? rep.logical_numerator : 0;
            uint64_t got = masked_dot(g.realized.p(), next, mask);
            if (got != want) {
                ok = false;
                for (size_t i : idx) {
                    rep.violating_assignment.push_back(is_one[i]);
                }
                rep.violating_numerator = got;
            }
        }
    };
    visit(visit, 0, 0, BitVec::ones(sf.n));
    rep.logical_action = ok;
}

}  // namespace

ControlledPhaseReport controlled_phase_action(const StandardFormCode &sf, const GateDescriptor &g) {
    if (!is_css(sf)) {
        throw UnsupportedError("transversal controlled phases are only certified for CSS codes");
    }
    g.validate(sf.n);
    const int k = g.k();
    const int q = g.controls;
    ControlledPhaseReport rep;
    rep.controls = q;
    rep.failure = check_graded_congruences(sf.a_x, g.realized, k,
                                           [k, q](int t) { return k - std::max(q, t - 1); });
    if (q == 0) {
        rep.holds = logical_phase_action(sf, g.realized).is_logical();
    } else {
        rep.holds = !rep.failure;
    }
    rep.logical_exponent = k - q - 1;
    rep.logical_numerator = masked_dot(g.realized.p(), sf.s, (uint64_t{1} << (k - q)) - 1);
    if (q == 0) {
        rep.logical_action = rep.holds;
    } else {
        enumerate_controlled_action(sf, g, rep);
    }
    if (g.claimed_logical_numerator) {
        rep.claim_matches = *g.claimed_logical_numerator == rep.logical_numerator;
    }
    rep.induced_r = g.realized.parity();
    rep.non_clifford = k >= 3 && (rep.logical_numerator & 1);
    rep.r_orthogonality = is_k_orthogonal(sf.a_x, k, rep.induced_r);
    if (rep.non_clifford) {
        rep.size_bound_ok = rep.induced_r.weight() >= (size_t{1} << (k + 1)) - 1;
    }
    return rep;
}

bool transversal_cnot_check(const StandardFormCode &sf) {
    return is_css(sf);
}

}  // namespace korth
