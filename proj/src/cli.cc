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

#include "korth/cli.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "korth/code_io.h"
#include "korth/codes.h"
#include "korth/constructions.h"
#include "korth/distance.h"
#include "korth/errors.h"
#include "korth/gates.h"
#include "korth/orthogonality.h"
#include "korth/search.h"

namespace korth {

namespace {

using ordered_json = nlohmann::ordered_json;

// A file could not be read or parsed; the message already names the file.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    bool verbose = false;
    // construct
    std::string family = "subdual";
    int m = 4;
    int k = 0;
    std::string out_path;
    std::string ax_out;
    std::string az_out;
    // inputs
    std::string code_path;
    std::string matrix_path;
    std::string ax_path;
    std::string az_path;
    std::string gate_path;
    // checks
    std::string r_text;
    bool max_level = false;
    std::string p_text;
    int controls = 0;
    std::optional<uint64_t> claim;
    bool json = false;
    // distance
    std::string method = "auto";
    size_t weight_cap = 8;
    int threads = 1;
    // search
    int m_min = 3;
    int m_max = 6;
    int n_max = 6;
    double budget_seconds = 0;
    std::string prune = "none";
    bool timing = false;
};

std::string load(const std::string &path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error &e) {
        throw InputError(e.what());
    }
}

template <typename Parse>
auto parse_file(const std::string &path, Parse &&parse) {
    std::string text = load(path);
    try {
        return parse(text);
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

BitMat load_matrix(const std::string &path) {
    return parse_file(path, [](const std::string &t) { return BitMat::parse_text(t); });
}

StabilizerCode load_code(const std::string &path) {
    return parse_file(path, [](const std::string &t) { return parse_code_json(t); });
}

StandardFormCode load_standard_form(const std::string &path) {
    return to_standard_form(load_code(path));
}

void require_inputs_exist(const std::vector<std::string> &paths) {
    for (const auto &p : paths) {
        if (!p.empty() && !std::filesystem::is_regular_file(p)) {
            throw InputError("cannot open " + p);
        }
    }
}

void require_output_dir(const std::string &path) {
    if (path.empty()) {
        return;
    }
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        throw InputError("output directory " + parent.string() + " does not exist");
    }
}

std::vector<int64_t> parse_p(const std::string &text, size_t n) {
    if (text == "all-ones") {
        return std::vector<int64_t>(n, 1);
    }
    std::vector<int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw InputError("--p entry '" + item + "' is not an integer");
        }
    }
    if (out.size() != n) {
        throw InputError("--p has " + std::to_string(out.size()) + " entries but the code has n = " +
                         std::to_string(n));
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T> &v, const char *sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? sep : "") + std::to_string(v[i]);
    }
    return s;
}

std::string residues_string(const Residues &p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); i++) {
        s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s + "]";
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        write_file(cfg.out_path, text);
    }
}

int cmd_construct(const RunConfig &cfg, std::ostream &out) {
    if (cfg.family == "subdual") {
        StandardFormCode code = subdual_css(cfg.m);
        emit(cfg, out, format_code_json(code.to_stabilizer_code()));
        if (!cfg.ax_out.empty()) {
            write_file(cfg.ax_out, code.a_x.to_text());
        }
        if (!cfg.az_out.empty()) {
            write_file(cfg.az_out, code.a_z.to_text());
        }
        if (!cfg.out_path.empty()) {
            out << "wrote [[" << code.n << ",1,3]] sub-dual Hamming code (m=" << cfg.m << ") to "
                << cfg.out_path << "\n";
        }
        return kExitPass;
    }
    if (!cfg.ax_out.empty() || !cfg.az_out.empty()) {
        throw InputError("--ax-out/--az-out only apply to --family subdual");
    }
    BitMat mat;
    if (cfg.family == "hamming") {
        mat = hamming_parity_check(cfg.m);
    } else if (cfg.family == "minimal-korth") {
        if (cfg.k < 1) {
            throw InputError("--family minimal-korth needs --k >= 1");
        }
        mat = minimal_korth_matrix(cfg.k);
    } else {
        throw InputError("unknown family '" + cfg.family + "'");
    }
    emit(cfg, out, mat.to_text());
    return kExitPass;
}

int cmd_standard_form(const RunConfig &cfg, std::ostream &out) {
    StandardFormCode sf = load_standard_form(cfg.code_path);
    out << "n=" << sf.n << " m=" << sf.m() << " z_rows=" << sf.a_z.rows()
        << " css=" << (is_css(sf) ? "yes" : "no") << "\n";
    out << "A_X\n" << sf.a_x.to_text();
    out << "B\n" << sf.b.to_text();
    out << "A_Z\n" << sf.a_z.to_text();
    std::string phases;
    for (uint8_t p : sf.x_phase) {
        phases += static_cast<char>('0' + p);
    }
    out << "x_phase=" << phases << "\n";
    out << "r=" << sf.r.str() << "\n";
    out << "s=" << sf.s.str() << "\n";
    out << "sign_frame=" << sf.sign_frame.str() << "\n";
    out << "phase_frame=" << sf.phase_frame.str() << "\n";
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, format_code_json(sf.to_stabilizer_code()));
    }
    return kExitPass;
}

BitMat x_checks(const RunConfig &cfg) {
    if (!cfg.matrix_path.empty() == !cfg.code_path.empty()) {
        throw InputError("give exactly one of --matrix and --code");
    }
    if (!cfg.matrix_path.empty()) {
        return load_matrix(cfg.matrix_path);
    }
    return load_standard_form(cfg.code_path).a_x;
}

int cmd_check_orth(const RunConfig &cfg, std::ostream &out) {
    BitMat a = x_checks(cfg);
    if (cfg.max_level) {
        out << "max_orthogonality=" << max_orthogonality(a) << "\n";
        return kExitPass;
    }
    if (cfg.k < 1) {
        throw InputError("check-orth needs --k >= 1 or --max");
    }
    std::optional<BitVec> r;
    if (!cfg.r_text.empty()) {
        r = BitVec::from_string(cfg.r_text);
    }
    OrthogonalityReport rep = is_k_orthogonal(a, cfg.k, r);
    if (rep.holds) {
        out << "PASS: " << cfg.k << "-orthogonal (t = 1.." << rep.level_checked << ")\n";
        return kExitPass;
    }
    const auto &w = *rep.witness;
    out << "FAIL: not " << cfg.k << "-orthogonal\n";
    out << "witness: t=" << w.t << " rows " << join(w.rows) << " product " << w.product.str()
        << " weight " << w.product_weight << "\n";
    return kExitFail;
}

int cmd_find_gates(const RunConfig &cfg, std::ostream &out) {
    if (cfg.k < 1) {
        throw InputError("find-gates needs --k >= 1");
    }
    StandardFormCode sf = load_standard_form(cfg.code_path);
    TransversalPhaseSolutions sol = find_transversal_phases(sf, cfg.k);
    out << "k=" << sol.k << " n=" << sol.n << " constraints=" << sol.constraints.size()
        << " solutions=2^" << sol.module.log2_count() << "\n";
    for (size_t i = 0; i < sol.module.generators.size(); i++) {
        out << "generator " << i << ": p=" << residues_string(sol.module.generators[i])
            << " order=2^" << sol.module.log2_orders[i] << " logical phase "
            << format_dyadic_phase(sol.generator_numerators[i], cfg.k) << "\n";
    }
    for (size_t i = 0; i < sol.particular.size(); i++) {
        out << "phase " << format_dyadic_phase(sol.particular_numerators[i], cfg.k)
            << ": p=" << residues_string(sol.particular[i]) << "\n";
    }
    return kExitPass;
}

GateDescriptor gate_from_flags(const RunConfig &cfg, size_t n) {
    if (!cfg.gate_path.empty()) {
        if (cfg.k || !cfg.p_text.empty()) {
            throw InputError("--gate cannot be combined with --k/--p");
        }
        return parse_file(cfg.gate_path, [](const std::string &t) { return parse_gate_json(t); });
    }
    if (cfg.k < 1 || cfg.p_text.empty()) {
        throw InputError("verify-gate needs --gate or both --k and --p");
    }
    return GateDescriptor{cfg.controls, DyadicPhaseVector(cfg.k, parse_p(cfg.p_text, n)),
                          cfg.claim};
}

ordered_json failure_json(const CongruenceFailure &f) {
    return ordered_json{{"rows", f.rows}, {"modulus_log2", f.modulus_log2}, {"residue", f.residue}};
}

int cmd_verify_gate(const RunConfig &cfg, std::ostream &out) {
    StandardFormCode sf = load_standard_form(cfg.code_path);
    GateDescriptor g = gate_from_flags(cfg, sf.n);
    g.validate(sf.n);
    const int k = g.k();
    ordered_json doc;
    doc["schema"] = 1;
    doc["k"] = k;
    doc["controls"] = g.controls;
    std::ostringstream text;
    bool pass = false;

    if (g.controls == 0) {
        PhaseActionReport rep = logical_phase_action(sf, g.realized);
        bool claim_ok =
            !g.claimed_logical_numerator || rep.logical_numerator == g.claimed_logical_numerator;
        pass = rep.is_logical() && claim_ok;
        doc["verdict"] = pass ? "PASS" : "FAIL";
        if (rep.is_logical()) {
            doc["logical_numerator"] = *rep.logical_numerator;
            doc["logical_phase"] = rep.phase_string();
            text << (pass ? "PASS" : "FAIL") << ": logical phase " << rep.phase_string() << "\n";
            if (!claim_ok) {
                text << "claimed logical phase "
                     << format_dyadic_phase(*g.claimed_logical_numerator, k) << " does not match\n";
            }
        } else {
            std::string branch = rep.fixes_zero ? "|1_L>" : "|0_L>";
            std::string phase = format_dyadic_phase(rep.violating_numerator, k);
            text << "FAIL: not a logical phase gate\n";
            text << "witness: " << branch << " basis state " << rep.violating_x->str()
                 << " picks up phase " << phase << "\n";
            doc["witness"] = {{"branch", branch},
                              {"basis_state", rep.violating_x->str()},
                              {"phase", phase}};
        }
        if (rep.support_only) {
            text << "note: non-CSS code; the verdict uses basis-state supports only\n";
            doc["support_only"] = true;
        }
        if (rep.is_logical() && (*rep.logical_numerator & 1)) {
            NecessityReport nec = verify_korth_necessity(sf, g.realized);
            text << "A_X is " << (nec.orthogonality.holds ? "" : "not ") << k
                 << "-orthogonal with respect to r = p mod 2 (|r| = " << nec.induced_r.weight()
                 << ")\n";
            doc["r_orthogonal"] = nec.orthogonality.holds;
            doc["r_weight"] = nec.induced_r.weight();
            doc["graded_congruences"] = !nec.graded_failure;
        }
    } else {
        ControlledPhaseReport rep = controlled_phase_action(sf, g);
        pass = rep.certified() && rep.claim_matches.value_or(true);
        doc["verdict"] = pass ? "PASS" : "FAIL";
        doc["graded_congruences"] = rep.holds;
        if (rep.logical_action) {
            doc["logical_action"] = *rep.logical_action;
        }
        std::string gate = "c^" + std::to_string(g.controls) + "-P(" + rep.phase_string() + ")";
        if (rep.holds && !rep.logical_action) {
            text << "FAIL: graded congruences hold, but the code is too large to enumerate the "
                    "action on mixed logical states\n";
        } else if (rep.holds && !*rep.logical_action) {
            std::string phase = format_dyadic_phase(rep.violating_numerator, rep.logical_exponent + 1);
            text << "FAIL: not a logical controlled phase\n";
            text << "witness: logical basis state |" << join(rep.violating_assignment, "")
                 << "> picks up phase " << phase << "\n";
            doc["witness"] = {{"logical_state", join(rep.violating_assignment, "")},
                              {"phase", phase}};
        } else if (rep.holds) {
            text << (pass ? "PASS" : "FAIL") << ": logical " << gate << "\n";
            doc["logical_numerator"] = rep.logical_numerator;
            doc["logical_gate"] = gate;
            if (rep.claim_matches == false) {
                text << "claimed logical numerator " << *g.claimed_logical_numerator
                     << " does not match\n";
            }
        } else {
            text << "FAIL: not a logical controlled phase\n";
            if (rep.failure) {
                text << "witness: rows " << join(rep.failure->rows) << " sum ≡ "
                     << rep.failure->residue << " (mod 2^" << rep.failure->modulus_log2 << ")\n";
                doc["witness"] = failure_json(*rep.failure);
            }
        }
        doc["non_clifford"] = rep.non_clifford;
        if (rep.size_bound_ok) {
            text << "non-Clifford: |r| = " << rep.induced_r.weight() << " >= 2^(k+1)-1 "
                 << (*rep.size_bound_ok ? "holds" : "FAILS") << "\n";
            doc["size_bound_ok"] = *rep.size_bound_ok;
        }
    }
    if (cfg.json) {
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return pass ? kExitPass : kExitFail;
}

DistanceMethod parse_method(const std::string &m) {
    if (m == "auto") {
        return DistanceMethod::kAuto;
    }
    if (m == "coset") {
        return DistanceMethod::kCosetEnumeration;
    }
    if (m == "weight") {
        return DistanceMethod::kWeightSearch;
    }
    throw InputError("--method must be auto, coset or weight");
}

int cmd_distance(const RunConfig &cfg, std::ostream &out) {
    BitMat a_x, a_z;
    BitVec r, s;
    if (!cfg.code_path.empty()) {
        if (!cfg.ax_path.empty() || !cfg.az_path.empty()) {
            throw InputError("give either --code or --ax/--az");
        }
        StandardFormCode sf = load_standard_form(cfg.code_path);
        if (!is_css(sf)) {
            throw UnsupportedError("distances are only computed for CSS codes");
        }
        a_x = sf.a_x;
        a_z = sf.a_z;
        r = sf.r;
        s = sf.s;
    } else {
        if (cfg.ax_path.empty() || cfg.az_path.empty()) {
            throw InputError("distance needs --code or both --ax and --az");
        }
        a_x = load_matrix(cfg.ax_path);
        a_z = load_matrix(cfg.az_path);
        std::tie(r, s) = css_logicals(a_x, a_z);
    }
    DistanceOptions opts;
    opts.method = parse_method(cfg.method);
    opts.weight_cap = cfg.weight_cap;
    opts.threads = cfg.threads;
    DistanceReport rep = css_distances(a_x, a_z, r, s, opts);
    auto value = [](const LogicalWeight &w) {
        return (w.exact ? "=" : ">=") + std::to_string(w.distance);
    };
    out << "d_Z" << value(rep.z) << " d_X" << value(rep.x) << "\n";
    if (rep.z.witness) {
        out << "Z witness: " << rep.z.witness->str() << "\n";
    }
    if (rep.x.witness) {
        out << "X witness: " << rep.x.witness->str() << "\n";
    }
    out << "method: Z " << method_name(rep.z.method) << ", X " << method_name(rep.x.method) << "\n";
    if (rep.lower_bound_only()) {
        out << "lower bound only: weight cap " << cfg.weight_cap << " exhausted\n";
    }
    return kExitPass;
}

const char *status_name(BoxStatus s) {
    switch (s) {
        case BoxStatus::kComplete:
            return "complete";
        case BoxStatus::kIncomplete:
            return "incomplete";
        case BoxStatus::kSkipped:
            return "skipped";
    }
    return "unknown";
}

ordered_json search_json(const SearchReport &rep, bool timing) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["k"] = rep.space.k;
    doc["m_min"] = rep.space.m_min;
    doc["m_max"] = rep.space.m_max;
    doc["n_max"] = rep.space.n_max;
    doc["prune"] = prune_name(rep.space.prune);
    doc["budget_seconds"] = rep.space.budget_seconds;
    doc["boxes"] = ordered_json::array();
    ordered_json certified = ordered_json::array();
    for (const auto &box : rep.boxes) {
        ordered_json b;
        b["m"] = box.m;
        b["status"] = status_name(box.status);
        if (!box.skip_reason.empty()) {
            b["reason"] = box.skip_reason;
            b["sound_exclusion"] = box.skip_is_sound;
        }
        if (box.status != BoxStatus::kSkipped) {
            b["nodes"] = box.nodes;
            b["sizes"] = ordered_json::array();
            for (const auto &sc : box.sizes) {
                b["sizes"].push_back(
                    {{"n", sc.n}, {"full_rank", sc.full_rank}, {"k_orthogonal", sc.k_orthogonal}});
            }
        }
        if (box.status == BoxStatus::kComplete) {
            certified.push_back({{"m", box.m}, {"n_max", rep.space.n_max}});
        }
        doc["boxes"].push_back(std::move(b));
    }
    doc["witness_count"] = rep.witness_count;
    doc["witnesses"] = ordered_json::array();
    for (const auto &w : rep.witnesses) {
        doc["witnesses"].push_back({{"m", w.m},
                                    {"n", w.columns.size()},
                                    {"columns", w.columns},
                                    {"rows", w.matrix.row_strings()},
                                    {"rechecked", w.rechecked}});
    }
    doc["certified_boxes"] = std::move(certified);
    doc["complete"] = rep.complete;
    doc["minimality_run"] = rep.minimality_run();
    doc["consistent_with_bound"] = rep.consistent_with_bound();
    doc["scope"] =
        "certifies only the listed (m, n <= n_max) boxes; row counts outside them are not covered";
    if (timing) {
        doc["elapsed_seconds"] = rep.elapsed_seconds;
    }
    return doc;
}

int cmd_search_min(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    SearchSpace space;
    space.k = cfg.k;
    space.m_min = cfg.m_min;
    space.m_max = cfg.m_max;
    space.n_max = cfg.n_max;
    space.budget_seconds = cfg.budget_seconds;
    space.threads = cfg.threads;
    try {
        space.prune = parse_prune(cfg.prune);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    SearchReport rep = minimality_search(space);
    emit(cfg, out, search_json(rep, cfg.timing).dump(2) + "\n");
    if (cfg.verbose) {
        err << "search finished in " << rep.elapsed_seconds << " s\n";
    }
    bool rechecked = std::all_of(rep.witnesses.begin(), rep.witnesses.end(),
                                 [](const SearchWitness &w) { return w.rechecked; });
    return rep.complete && rep.consistent_with_bound() && rechecked ? kExitPass : kExitFail;
}

int cmd_reduce_degenerate(const RunConfig &cfg, std::ostream &out) {
    BitMat a = x_checks(cfg);
    int k = cfg.k < 1 ? 1 : cfg.k;
    std::vector<int64_t> p =
        cfg.p_text.empty() ? std::vector<int64_t>(a.cols(), 0) : parse_p(cfg.p_text, a.cols());
    NondegenerateReduction red = nondegenerate_reduction(a, DyadicPhaseVector(k, p));
    const auto &part = red.partition;
    out << "classes=" << part.classes.size() << " n=" << a.cols()
        << (part.is_nondegenerate() ? " (already non-degenerate)" : "") << "\n";
    for (size_t c = 0; c < part.classes.size(); c++) {
        out << "class " << c << ": qubits " << join(part.classes[c]) << " -> "
            << part.representatives[c];
        if (part.undetectable_class == c) {
            out << " (no syndrome)";
        }
        out << "\n";
    }
    if (!cfg.p_text.empty()) {
        Residues agg;
        for (size_t rep : part.representatives) {
            agg.push_back(red.phases[rep]);
        }
        out << "aggregated p=" << residues_string(agg) << " (mod 2^" << k << ")\n";
    }
    out << "reduced A_X\n" << red.reduced_a_x.to_text();
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, red.reduced_a_x.to_text());
    }
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Construct and certify codes with transversal phase gates", "korth"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", cfg.verbose, "Diagnostics on stderr");

    auto *construct = app.add_subcommand("construct", "Build a code or check matrix");
    construct->add_option("--family", cfg.family, "subdual, hamming or minimal-korth")
        ->check(CLI::IsMember({"subdual", "hamming", "minimal-korth"}));
    construct->add_option("--m", cfg.m, "Row count for subdual/hamming");
    construct->add_option("--k", cfg.k, "Orthogonality level for minimal-korth");
    construct->add_option("--out", cfg.out_path, "Write the artifact here instead of stdout");
    construct->add_option("--ax-out", cfg.ax_out, "Also export A_X as matrix text");
    construct->add_option("--az-out", cfg.az_out, "Also export A_Z as matrix text");

    auto *standard = app.add_subcommand("standard-form", "Bring a code to standard form");
    standard->add_option("--code", cfg.code_path, "JSON code descriptor")->required();
    standard->add_option("--out", cfg.out_path, "Write the standard-form descriptor here");

    auto *orth = app.add_subcommand("check-orth", "Check k-orthogonality of A_X");
    orth->add_option("--matrix", cfg.matrix_path, "Matrix text file");
    orth->add_option("--code", cfg.code_path, "JSON code descriptor");
    orth->add_option("--k", cfg.k, "Level to check");
    orth->add_option("--r", cfg.r_text, "Restrict weights to this subset (bit string)");
    orth->add_flag("--max", cfg.max_level, "Report the largest level that holds");

    auto *find = app.add_subcommand("find-gates", "Solve for all transversal phase gates");
    find->add_option("--code", cfg.code_path, "JSON code descriptor")->required();
    find->add_option("--k", cfg.k, "Phases are multiples of π/2^(k-1)")->required();

    auto *verify = app.add_subcommand("verify-gate", "Certify a transversal diagonal gate");
    verify->add_option("--code", cfg.code_path, "JSON code descriptor")->required();
    verify->add_option("--gate", cfg.gate_path, "JSON gate descriptor");
    verify->add_option("--k", cfg.k, "Base phase π/2^(k-q-1)");
    verify->add_option("--p", cfg.p_text, "all-ones or a comma-separated list");
    verify->add_option("--controls", cfg.controls, "Number of controls q");
    verify->add_option("--claim", cfg.claim, "Claimed logical numerator");
    verify->add_flag("--json", cfg.json, "JSON report");

    auto *dist = app.add_subcommand("distance", "Exact CSS distances");
    dist->add_option("--code", cfg.code_path, "JSON code descriptor");
    dist->add_option("--ax", cfg.ax_path, "A_X matrix text");
    dist->add_option("--az", cfg.az_path, "A_Z matrix text");
    dist->add_option("--method", cfg.method, "auto, coset or weight");
    dist->add_option("--weight-cap", cfg.weight_cap, "Largest weight for the weight search");
    dist->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto *search = app.add_subcommand("search-min", "Exhaustive minimality search");
    search->add_option("--k", cfg.k, "Orthogonality level")->required();
    search->add_option("--m-min", cfg.m_min, "Smallest row count");
    search->add_option("--m-max", cfg.m_max, "Largest row count");
    search->add_option("--n-max", cfg.n_max, "Largest column count");
    search->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget (0: none)");
    search->add_option("--prune", cfg.prune, "none or orbit");
    search->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    search->add_flag("--timing", cfg.timing, "Include elapsed time in the report");

    auto *reduce = app.add_subcommand("reduce-degenerate", "Merge qubits with equal syndromes");
    reduce->add_option("--matrix", cfg.matrix_path, "Matrix text file");
    reduce->add_option("--code", cfg.code_path, "JSON code descriptor");
    reduce->add_option("--k", cfg.k, "Phase exponent for --p");
    reduce->add_option("--p", cfg.p_text, "Phases to aggregate per class");
    reduce->add_option("--out", cfg.out_path, "Write the reduced matrix here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    std::map<CLI::App *, std::function<int()>> dispatch = {
        {construct, [&] { return cmd_construct(cfg, out); }},
        {standard, [&] { return cmd_standard_form(cfg, out); }},
        {orth, [&] { return cmd_check_orth(cfg, out); }},
        {find, [&] { return cmd_find_gates(cfg, out); }},
        {verify, [&] { return cmd_verify_gate(cfg, out); }},
        {dist, [&] { return cmd_distance(cfg, out); }},
        {search, [&] { return cmd_search_min(cfg, out, err); }},
        {reduce, [&] { return cmd_reduce_degenerate(cfg, out); }},
    };
    try {
        require_inputs_exist(
            {cfg.code_path, cfg.matrix_path, cfg.ax_path, cfg.az_path, cfg.gate_path});
        require_output_dir(cfg.out_path);
        require_output_dir(cfg.ax_out);
        require_output_dir(cfg.az_out);
        return dispatch.at(app.get_subcommands().front())();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace korth
