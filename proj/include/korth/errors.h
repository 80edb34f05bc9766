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

#ifndef KORTH_ERRORS_H
#define KORTH_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace korth {

/// Operands disagree on a length or shape.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument is outside the supported range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A stabilizer code violates its structural invariants.
struct InvalidCodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A qubit whose Z error has zero syndrome (an all-zero A_X column).
struct NoSyndromeError : InvalidCodeError {
    using InvalidCodeError::InvalidCodeError;
};

/// Two qubits share a syndrome; reduce the code to one qubit per class first.
struct DegenerateCodeError : InvalidCodeError {
    using InvalidCodeError::InvalidCodeError;
};

/// An operation was called on an input it does not handle (e.g. non-CSS).
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a verification routine does not hold.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
struct ParseError : std::runtime_error {
    ParseError(const std::string &msg, size_t line, size_t column)
        : std::runtime_error(
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {
    }
    size_t line;
    size_t column;
};

}  // namespace korth

#endif
