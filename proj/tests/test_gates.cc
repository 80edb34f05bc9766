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

#include <gtest/gtest.h>

#include <functional>

#include "korth/codes.h"
#include "korth/congruence.h"
#include "korth/constructions.h"
#include "korth/errors.h"
#include "korth/gates.h"
#include "support/oracles.h"

namespace korth {
namespace {

DyadicPhaseVector ones(int k, size_t n) {
    return DyadicPhaseVector::uniform(k, n, 1);
}

DyadicPhaseVector random_phases(oracle::Rng &rng, int k, size_t n) {
    std::vector<int64_t> p(n);
    for (auto &v : p) {
        v = static_cast<int64_t>(rng() % (uint64_t{1} << k));
    }
    return DyadicPhaseVector(k, p);
}

StandardFormCode random_css(oracle::Rng &rng, size_t m, size_t n) {
    for (;;) {
        StabilizerCode c = oracle::random_scrambled_code(rng, n);
        StandardFormCode sf = to_standard_form(c);
        if (is_css(sf) && sf.m() == m) {
            return sf;
        }
    }
}

// Group-level model of a transversal c^q-P gate on q+1 blocks: the tuple
// (x¹, …, x^{q+1}) picks up Σ_i p_i·∏_j x^j_i (mod 2^(k-q)). The gate is a
// logical c^q-P(L·π/2^(k-q-1)) iff every tuple drawn from the logical basis
// cosets picks up L·∏ a_j.
std::optional<uint64_t> brute_controlled_phase(const StandardFormCode &sf,
                                               const DyadicPhaseVector &theta, int q) {
    const uint64_t mod = uint64_t{1} << (theta.k() - q);
    std::vector<BitVec> span = oracle::naive_span(sf.a_x);
    std::optional<uint64_t> logical;
    bool ok = true;
    std::vector<BitVec> tuple(q + 1);
    std::function<void(int, bool, BitVec)> rec = [&](int j, bool all_one, BitVec prod) {
        if (!ok) {
            return;
        }
        if (j == q + 1) {
            uint64_t phase = theta.dot(prod) % mod;
            if (!all_one) {
                ok = phase == 0;
            } else if (!logical) {
                logical = phase;
            } else {
                ok = *logical == phase;
            }
            return;
        }
        for (int a = 0; a < 2; a++) {
            for (const auto &x : span) {
                BitVec v = a ? (x ^ sf.s) : x;
                rec(j + 1, all_one && a, prod & v);
            }
        }
    };
    rec(0, true, BitVec::ones(sf.n));
    if (!ok) {
        return std::nullopt;
    }
    return logical;
}

TEST(LogicalPhaseAction, SteaneSGivesSDagger) {
    auto rep = logical_phase_action(subdual_css(3), ones(2, 7));
    EXPECT_TRUE(rep.is_logical());
    EXPECT_EQ(rep.logical_numerator, 3u);
    EXPECT_EQ(rep.phase_string(), "3π/2");
    EXPECT_FALSE(rep.support_only);
}

TEST(LogicalPhaseAction, FifteenQubitTGivesTDagger) {
    auto rep = logical_phase_action(subdual_css(4), ones(3, 15));
    EXPECT_TRUE(rep.is_logical());
    EXPECT_EQ(rep.logical_numerator, 7u);
    EXPECT_EQ(rep.phase_string(), "7π/4");
}

TEST(LogicalPhaseAction, ZeroAndFailures) {
    for (int m = 3; m <= 5; m++) {
        StandardFormCode sf = subdual_css(m);
        auto rep = logical_phase_action(sf, DyadicPhaseVector::uniform(4, sf.n, 0));
        EXPECT_TRUE(rep.is_logical());
        EXPECT_EQ(rep.logical_numerator, 0u);
        EXPECT_EQ(rep.phase_string(), "0");
    }
    auto bad = logical_phase_action(subdual_css(3), ones(3, 7));
    EXPECT_FALSE(bad.fixes_zero);
    ASSERT_TRUE(bad.violating_x);
    EXPECT_NE(bad.violating_numerator, 0u);
    EXPECT_EQ(ones(3, 7).dot(*bad.violating_x), bad.violating_numerator);
    EXPECT_THROW(logical_phase_action(subdual_css(3), ones(2, 6)), DimensionError);
}

TEST(LogicalPhaseAction, NonCssCodesUseSupportsOnly) {
    auto rep = logical_phase_action(to_standard_form(oracle::five_qubit_code()),
                                    DyadicPhaseVector::uniform(2, 5, 0));
    EXPECT_TRUE(rep.support_only);
    EXPECT_TRUE(rep.is_logical());
}

TEST(LogicalPhaseAction, AgreesWithDenseSimulation) {
    oracle::Rng rng(21);
    int logical = 0;
    for (int trial = 0; trial < 150; trial++) {
        StandardFormCode sf = to_standard_form(oracle::random_scrambled_code(rng, 2 + rng() % 6));
        oracle::DenseCode dc = oracle::dense_code(sf.to_stabilizer_code());
        int k = 1 + rng() % 3;
        std::vector<DyadicPhaseVector> candidates = {random_phases(rng, k, sf.n)};
        auto sols = find_transversal_phases(sf, k);
        for (const auto &p : sols.particular) {
            candidates.emplace_back(k, std::vector<int64_t>(p.begin(), p.end()));
        }
        for (const auto &theta : candidates) {
            auto rep = logical_phase_action(sf, theta);
            auto dense = oracle::dense_logical_phase(dc, theta.p(), k);
            ASSERT_EQ(rep.is_logical(), dense.has_value());
            if (dense) {
                EXPECT_EQ(*rep.logical_numerator, *dense);
                logical++;
            }
        }
    }
    EXPECT_GT(logical, 100);
}

TEST(LogicalPhaseAction, MatchesGradedGeneratorCongruences) {
    oracle::Rng rng(22);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 3 + rng() % 6;
        StandardFormCode sf = random_css(rng, 1 + rng() % std::min<size_t>(5, n - 1), n);
        int k = 1 + rng() % 3;
        // Bias towards near-solutions so both verdicts occur.
        DyadicPhaseVector theta = random_phases(rng, k, n);
        if (trial % 2) {
            auto sols = find_transversal_phases(sf, k);
            Residues p = sols.particular.back();
            p[rng() % n] += (trial % 4 == 1);
            theta = DyadicPhaseVector(k, std::vector<int64_t>(p.begin(), p.end()));
        }
        auto fail = check_graded_congruences(sf.a_x, theta, k, [k](int t) { return k - t + 1; });
        EXPECT_EQ(logical_phase_action(sf, theta).fixes_zero, !fail);
    }
}

TEST(PhaseQuantization, Examples) {
    EXPECT_EQ(phase_quantization_exponent(subdual_css(4)), 2);
    EXPECT_EQ(phase_quantization_exponent(subdual_css(3)), 1);
    StandardFormCode rep = make_css_code(hamming_parity_check(2), BitMat(0, 3), BitVec::ones(3),
                                         BitVec::from_string("100"));
    EXPECT_EQ(phase_quantization_exponent(rep), 0);
    StandardFormCode degenerate =
        make_css_code(BitMat::from_strings({"1111"}), BitMat::from_strings({"0011", "0110"}),
                      BitVec::from_string("1100"), BitVec::from_string("1000"));
    EXPECT_THROW(phase_quantization_exponent(degenerate), DegenerateCodeError);
}

TEST(PhaseQuantization, BoundsEveryAdmissiblePhase) {
    for (int m = 3; m <= 4; m++) {
        StandardFormCode sf = subdual_css(m);
        int e = phase_quantization_exponent(sf);
        // With k = e + 2 every solution is even: θ_i is a multiple of π/2^e.
        auto sols = find_transversal_phases(sf, e + 2);
        for (const auto &g : sols.module.generators) {
            for (uint64_t v : g) {
                EXPECT_EQ(v % 2, 0u);
            }
        }
        EXPECT_TRUE(find_transversal_phases(sf, e + 1).contains(ones(e + 1, sf.n)));
    }
}

TEST(FindTransversalPhases, FifteenQubitContainsT) {
    auto sols = find_transversal_phases(subdual_css(4), 3);
    EXPECT_TRUE(sols.contains(ones(3, 15)));
    bool found_odd = false;
    for (size_t i = 0; i < sols.particular.size(); i++) {
        auto rep = logical_phase_action(
            subdual_css(4),
            DyadicPhaseVector(3, std::vector<int64_t>(sols.particular[i].begin(),
                                                      sols.particular[i].end())));
        EXPECT_EQ(rep.logical_numerator, sols.particular_numerators[i]);
        found_odd = found_odd || sols.particular_numerators[i] % 2;
    }
    EXPECT_TRUE(found_odd);
    std::vector<int64_t> single(15, 0);
    single[0] = 1;
    EXPECT_FALSE(sols.contains(DyadicPhaseVector(3, single)));
}

TEST(FindTransversalPhases, LevelOneIsTheNullSpace) {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 3 + rng() % 5;
        StandardFormCode sf = random_css(rng, 1 + rng() % (n - 1), n);
        auto sols = find_transversal_phases(sf, 1);
        size_t expected = 0;
        for (uint64_t w = 0; w < (uint64_t{1} << n); w++) {
            BitVec v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(i, (w >> i) & 1);
            }
            bool in_null = sf.a_x.multiply(v).none();
            expected += in_null;
            std::vector<int64_t> p(n);
            for (size_t i = 0; i < n; i++) {
                p[i] = v.get(i);
            }
            EXPECT_EQ(sols.contains(DyadicPhaseVector(1, p)), in_null);
        }
        EXPECT_EQ(uint64_t{1} << sols.module.log2_count(), expected);
    }
}

TEST(FindTransversalPhases, DoublingLiftsSolutions) {
    oracle::Rng rng(24);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 4 + rng() % 5;
        StandardFormCode sf = random_css(rng, 1 + rng() % 3, n);
        for (int k = 2; k <= 4; k++) {
            auto lower = find_transversal_phases(sf, k - 1);
            auto upper = find_transversal_phases(sf, k);
            for (const auto &g : lower.module.generators) {
                std::vector<int64_t> doubled(n);
                for (size_t i = 0; i < n; i++) {
                    doubled[i] = static_cast<int64_t>(2 * g[i]);
                }
                EXPECT_TRUE(upper.contains(DyadicPhaseVector(k, doubled)));
            }
        }
    }
}

TEST(FindTransversalPhases, RoundTripAndRepetitionLaw) {
    oracle::Rng rng(25);
    for (int trial = 0; trial < 60; trial++) {
        StandardFormCode sf = to_standard_form(oracle::random_scrambled_code(rng, 2 + rng() % 7));
        int k = 1 + rng() % 4;
        auto sols = find_transversal_phases(sf, k);
        ASSERT_EQ(sols.generator_numerators.size(), sols.module.generators.size());
        // A random element of the module.
        std::vector<int64_t> p(sf.n, 0);
        for (size_t j = 0; j < sols.module.generators.size(); j++) {
            uint64_t c = rng() % (uint64_t{1} << sols.module.log2_orders[j]);
            for (size_t i = 0; i < sf.n; i++) {
                p[i] += static_cast<int64_t>((c * sols.module.generators[j][i]) % (uint64_t{1} << k));
            }
        }
        DyadicPhaseVector theta(k, p);
        auto rep = logical_phase_action(sf, theta);
        ASSERT_TRUE(rep.is_logical());
        uint64_t mod = uint64_t{1} << k;
        uint64_t repeated = (*rep.logical_numerator << (k - 1)) % mod;
        EXPECT_TRUE(repeated == 0 || repeated == mod / 2);
    }
}

TEST(Necessity, Examples) {
    auto fifteen = verify_korth_necessity(subdual_css(4), ones(3, 15));
    EXPECT_TRUE(fifteen.holds());
    EXPECT_EQ(fifteen.logical_numerator, 7u);
    EXPECT_EQ(fifteen.induced_r.weight(), 15u);
    EXPECT_EQ(fifteen.orthogonality.level_checked, 3);

    auto seven = verify_korth_necessity(subdual_css(3), ones(2, 7));
    EXPECT_TRUE(seven.holds());

    EXPECT_THROW(verify_korth_necessity(subdual_css(3), DyadicPhaseVector::uniform(2, 7, 0)),
                 PreconditionError);
    EXPECT_THROW(verify_korth_necessity(subdual_css(3), ones(3, 7)), PreconditionError);
}

TEST(Necessity, HoldsForEveryOddLogicalGate) {
    oracle::Rng rng(26);
    int checked = 0;
    for (int trial = 0; trial < 80; trial++) {
        StandardFormCode sf = to_standard_form(oracle::random_scrambled_code(rng, 2 + rng() % 7));
        int k = 1 + rng() % 3;
        auto sols = find_transversal_phases(sf, k);
        for (size_t i = 0; i < sols.particular.size(); i++) {
            if (sols.particular_numerators[i] % 2 == 0) {
                continue;
            }
            const Residues &p = sols.particular[i];
            auto rep = verify_korth_necessity(
                sf, DyadicPhaseVector(k, std::vector<int64_t>(p.begin(), p.end())));
            EXPECT_TRUE(rep.holds());
            checked++;
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(ControlledPhase, FifteenQubitCode) {
    StandardFormCode sf = subdual_css(4);
    auto cs = controlled_phase_action(sf, GateDescriptor{1, ones(3, 15), {}});
    EXPECT_TRUE(cs.holds);
    EXPECT_EQ(cs.logical_numerator, 3u);
    EXPECT_EQ(cs.phase_string(), "3π/2");
    EXPECT_TRUE(cs.certified());
    // Controlled-S is outside the Clifford group.
    EXPECT_TRUE(cs.non_clifford);
    EXPECT_EQ(cs.size_bound_ok, true);

    auto ccz = controlled_phase_action(sf, GateDescriptor{2, ones(3, 15), 1});
    EXPECT_TRUE(ccz.certified());
    EXPECT_EQ(ccz.logical_numerator, 1u);
    EXPECT_EQ(ccz.phase_string(), "π");
    EXPECT_EQ(ccz.claim_matches, true);

    auto t = controlled_phase_action(sf, GateDescriptor{0, ones(3, 15), 5});
    EXPECT_TRUE(t.holds);
    EXPECT_TRUE(t.non_clifford);
    EXPECT_EQ(t.size_bound_ok, true);
    EXPECT_EQ(t.claim_matches, false);
}

TEST(ControlledPhase, SteaneHasCzButNotControlledS) {
    StandardFormCode sf = subdual_css(3);
    auto cz = controlled_phase_action(sf, GateDescriptor{1, ones(2, 7), {}});
    EXPECT_TRUE(cz.certified());
    EXPECT_FALSE(cz.non_clifford);
    auto cs = controlled_phase_action(sf, GateDescriptor{1, ones(3, 7), {}});
    EXPECT_FALSE(cs.holds);
    ASSERT_TRUE(cs.failure);
    EXPECT_EQ(cs.failure->rows.size(), 2u);
}

TEST(ControlledPhase, MatchesGroupLevelModel) {
    oracle::Rng rng(27);
    std::vector<StandardFormCode> codes = {subdual_css(3), subdual_css(4)};
    for (int i = 0; i < 20; i++) {
        size_t n = 4 + rng() % 5;
        codes.push_back(random_css(rng, 1 + rng() % 3, n));
    }
    int holds = 0;
    for (const auto &sf : codes) {
        for (int q = 0; q <= 2; q++) {
            for (int k = q + 1; k <= q + 2; k++) {
                for (int trial = 0; trial < 4; trial++) {
                    DyadicPhaseVector theta =
                        trial == 0 ? ones(k, sf.n) : random_phases(rng, k, sf.n);
                    if (trial == 1) {
                        auto sols = find_transversal_phases(sf, k);
                        const Residues &p = sols.particular.front();
                        theta = DyadicPhaseVector(k, std::vector<int64_t>(p.begin(), p.end()));
                    }
                    if (q > 0 && sf.m() * (q + 1) > 12) {
                        continue;
                    }
                    auto rep = controlled_phase_action(sf, GateDescriptor{q, theta, {}});
                    auto brute = brute_controlled_phase(sf, theta, q);
                    ASSERT_TRUE(rep.logical_action);
                    ASSERT_EQ(rep.certified(), brute.has_value()) << "q=" << q << " k=" << k;
                    // The graded congruences are implied by the logical action.
                    EXPECT_TRUE(!brute || rep.holds);
                    if (brute) {
                        EXPECT_EQ(rep.logical_numerator, *brute);
                        holds++;
                    }
                }
            }
        }
    }
    EXPECT_GT(holds, 30);
}

TEST(ControlledPhase, GradedCongruencesAreNotSufficient) {
    // |0_L> blocks are fixed, but mixed logical states pick up a phase.
    oracle::Rng rng(29);
    int found = 0;
    for (int trial = 0; trial < 400 && !found; trial++) {
        StandardFormCode sf = random_css(rng, 1 + rng() % 2, 4 + rng() % 3);
        DyadicPhaseVector theta = random_phases(rng, 2, sf.n);
        auto rep = controlled_phase_action(sf, GateDescriptor{1, theta, {}});
        if (rep.holds && !rep.certified()) {
            found++;
            EXPECT_FALSE(brute_controlled_phase(sf, theta, 1));
            EXPECT_EQ(rep.violating_assignment.size(), 2u);
        }
    }
    EXPECT_EQ(found, 1);
}

TEST(ControlledPhase, Errors) {
    EXPECT_THROW(controlled_phase_action(to_standard_form(oracle::five_qubit_code()),
                                         GateDescriptor{1, ones(3, 5), {}}),
                 UnsupportedError);
    EXPECT_THROW(GateDescriptor({3, ones(3, 15), {}}).validate(15), RangeError);
    EXPECT_THROW(GateDescriptor({0, ones(3, 14), {}}).validate(15), DimensionError);
    EXPECT_NO_THROW(GateDescriptor({2, ones(3, 15), {}}).validate(15));
}

TEST(TransversalCnot, Examples) {
    EXPECT_TRUE(transversal_cnot_check(subdual_css(3)));
    EXPECT_FALSE(transversal_cnot_check(to_standard_form(oracle::five_qubit_code())));
    EXPECT_TRUE(transversal_cnot_check(
        make_css_code(BitMat(0, 1), BitMat(0, 1), BitVec::ones(1), BitVec::ones(1))));
}

TEST(Congruence, InverseModPow2) {
    for (int k = 1; k <= 62; k += 7) {
        uint64_t mask = k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
        for (uint64_t a : {uint64_t{1}, uint64_t{3}, uint64_t{12345}, mask}) {
            a = (a | 1) & mask;
            EXPECT_EQ((a * inverse_mod_pow2(a, k)) & mask, 1u);
        }
    }
}

TEST(Congruence, SolverMatchesBruteForce) {
    oracle::Rng rng(28);
    for (int trial = 0; trial < 100; trial++) {
        int k = 1 + rng() % 3;
        size_t n = 1 + rng() % 4;
        uint64_t mod = uint64_t{1} << k;
        std::vector<Residues> rows(rng() % 4, Residues(n));
        for (auto &row : rows) {
            for (auto &v : row) {
                v = rng() % mod;
            }
        }
        auto sol = solve_congruences(rows, n, k);
        uint64_t count = 0;
        uint64_t total = uint64_t{1} << (k * n);
        for (uint64_t w = 0; w < total; w++) {
            Residues p(n);
            for (size_t i = 0; i < n; i++) {
                p[i] = (w >> (k * i)) & (mod - 1);
            }
            count += satisfies_congruences(rows, p, k);
        }
        EXPECT_EQ(uint64_t{1} << sol.log2_count(), count);
        for (const auto &g : sol.generators) {
            EXPECT_TRUE(satisfies_congruences(rows, g, k));
        }
    }
}

}  // namespace
}  // namespace korth
