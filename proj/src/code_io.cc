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

#include "korth/code_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "korth/errors.h"

namespace korth {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<size_t, size_t> line_and_column(std::string_view text, size_t offset) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < offset && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

// Position of character `index` inside the first occurrence of the quoted
// string `value`, or (0, 0) if it cannot be found.
std::pair<size_t, size_t> locate_in_string(std::string_view text, const std::string &value,
                                           size_t index) {
    size_t at = text.find("\"" + value + "\"");
    if (at == std::string_view::npos) {
        return {0, 0};
    }
    return line_and_column(text, at + 1 + index);
}

std::pair<size_t, size_t> locate_key(std::string_view text, const std::string &key) {
    size_t at = text.find("\"" + key + "\"");
    if (at == std::string_view::npos) {
        return {0, 0};
    }
    return line_and_column(text, at);
}

PauliOp parse_pauli_field(std::string_view text, const ordered_json &value, const std::string &what,
                          size_t n) {
    if (!value.is_string()) {
        auto [line, col] = locate_key(text, what);
        throw ParseError(what + " must be a string", line, col);
    }
    std::string str = value.get<std::string>();
    PauliOp p;
    try {
        p = PauliOp::parse(str);
    } catch (const ParseError &e) {
        auto [line, col] = locate_in_string(text, str, e.column - 1);
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw ParseError(what + ": " + msg, line, col);
    }
    if (p.size() != n) {
        auto [line, col] = locate_in_string(text, str, 0);
        throw ParseError(what + " \"" + str + "\" acts on " + std::to_string(p.size()) +
                             " qubits but n = " + std::to_string(n),
                         line, col);
    }
    return p;
}

ordered_json parse_document(std::string_view text, const std::string &what) {
    try {
        ordered_json doc = ordered_json::parse(text);
        if (!doc.is_object()) {
            throw ParseError(what + " must be a JSON object", 1, 1);
        }
        return doc;
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        throw ParseError("invalid JSON: " + msg, line, col);
    }
}

void reject_unknown_keys(std::string_view text, const ordered_json &doc,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto &[key, value] : doc.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            auto [line, col] = locate_key(text, key);
            throw ParseError("unknown field \"" + key + "\"", line, col);
        }
    }
}

[[noreturn]] void fail_at_key(std::string_view text, const std::string &key,
                              const std::string &msg) {
    auto [line, col] = locate_key(text, key);
    throw ParseError(msg, line, col);
}

}  // namespace

StabilizerCode parse_code_json(std::string_view text) {
    ordered_json doc = parse_document(text, "code descriptor");
    reject_unknown_keys(text, doc, {"n", "stabilizers", "logical_x", "logical_z"});
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
        auto [line, col] = locate_key(text, "n");
        throw ParseError("\"n\" must be a non-negative integer", line, col);
    }
    if (!doc.contains("stabilizers") || !doc["stabilizers"].is_array()) {
        auto [line, col] = locate_key(text, "stabilizers");
        throw ParseError("\"stabilizers\" must be an array of Pauli strings", line, col);
    }
    StabilizerCode code;
    code.n = doc["n"].get<size_t>();
    size_t i = 0;
    for (const auto &g : doc["stabilizers"]) {
        code.generators.push_back(
            parse_pauli_field(text, g, "stabilizers[" + std::to_string(i++) + "]", code.n));
    }
    if (doc.contains("logical_x")) {
        code.logical_x = parse_pauli_field(text, doc["logical_x"], "logical_x", code.n);
    }
    if (doc.contains("logical_z")) {
        code.logical_z = parse_pauli_field(text, doc["logical_z"], "logical_z", code.n);
    }
    return code;
}

GateDescriptor parse_gate_json(std::string_view text) {
    ordered_json doc = parse_document(text, "gate descriptor");
    reject_unknown_keys(text, doc, {"k", "controls", "p", "logical_phase"});
    if (!doc.contains("k") || !doc["k"].is_number_integer()) {
        fail_at_key(text, "k", "\"k\" must be an integer");
    }
    int64_t k = doc["k"].get<int64_t>();
    if (k < 1 || k > kMaxDyadicK) {
        fail_at_key(text, "k", "\"k\" must lie in [1, " + std::to_string(kMaxDyadicK) + "]");
    }
    int64_t controls = 0;
    if (doc.contains("controls")) {
        if (!doc["controls"].is_number_integer()) {
            fail_at_key(text, "controls", "\"controls\" must be an integer");
        }
        controls = doc["controls"].get<int64_t>();
        if (controls < 0 || controls >= k) {
            fail_at_key(text, "controls", "\"controls\" must lie in [0, k-1]");
        }
    }
    if (!doc.contains("p") || !doc["p"].is_array()) {
        fail_at_key(text, "p", "\"p\" must be an array of integers");
    }
    std::vector<int64_t> p;
    for (const auto &v : doc["p"]) {
        if (!v.is_number_integer()) {
            fail_at_key(text, "p", "\"p\" must be an array of integers");
        }
        p.push_back(v.get<int64_t>());
    }
    GateDescriptor g{static_cast<int>(controls), DyadicPhaseVector(static_cast<int>(k), p), {}};
    if (doc.contains("logical_phase")) {
        const auto &claim = doc["logical_phase"];
        if (!claim.is_number_unsigned() ||
            claim.get<uint64_t>() >= (uint64_t{1} << (k - controls))) {
            fail_at_key(text, "logical_phase",
                        "\"logical_phase\" must be an integer numerator in [0, 2^(k-controls))");
        }
        g.claimed_logical_numerator = claim.get<uint64_t>();
    }
    return g;
}

std::string format_code_json(const StabilizerCode &code) {
    ordered_json doc;
    doc["n"] = code.n;
    doc["stabilizers"] = ordered_json::array();
    for (const auto &g : code.generators) {
        doc["stabilizers"].push_back(g.str());
    }
    if (code.logical_x) {
        doc["logical_x"] = code.logical_x->str();
    }
    if (code.logical_z) {
        doc["logical_z"] = code.logical_z->str();
    }
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
}

}  // namespace korth
