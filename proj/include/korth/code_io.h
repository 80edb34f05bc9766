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

#ifndef KORTH_CODE_IO_H
#define KORTH_CODE_IO_H

#include <string>
#include <string_view>

#include "korth/codes.h"
#include "korth/gates.h"

namespace korth {

/// Parses a JSON code descriptor:
///
///     { "n": 5, "stabilizers": ["+XZZXI", ...],
///       "logical_x": "+XXXXX", "logical_z": "+ZZZZZ" }
///
/// The logical operators are optional. Errors carry the line and column of
/// the offending text where it can be located.
StabilizerCode parse_code_json(std::string_view text);

/// Canonical descriptor text (two-space indent, trailing newline). Parsing the
/// output reproduces the code exactly, and formatting a parsed canonical
/// descriptor reproduces its text byte for byte.
std::string format_code_json(const StabilizerCode &code);

/// Parses a gate descriptor { "k": 3, "controls": 0, "p": [1, 1, ...] } with an
/// optional "logical_phase" numerator claim. Lengths are checked against a
/// code later by GateDescriptor::validate.
GateDescriptor parse_gate_json(std::string_view text);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace korth

#endif
