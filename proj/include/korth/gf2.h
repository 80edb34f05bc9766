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

#ifndef KORTH_GF2_H
#define KORTH_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace korth {

/// A binary string packed into 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64. Bits at positions >= size()
/// are always zero, so word-level popcounts and comparisons need no masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t len);

    /// Parses a string of '0' and '1' characters; bit i is character i.
    static BitVec from_string(std::string_view text);
    static BitVec ones(size_t len);
    static BitVec unit(size_t len, size_t i);
    /// Low `len` bits of `word`; requires len <= 64.
    static BitVec from_word(size_t len, uint64_t word);

    size_t size() const {
        return len_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    /// Value of the single backing word; requires size() <= 64.
    uint64_t to_word() const;

    bool operator[](size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool get(size_t i) const;
    void set(size_t i, bool value = true);
    void flip(size_t i);

    size_t weight() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Index of the lowest set bit, or size() if there is none.
    size_t first_set() const;
    std::vector<size_t> support() const;

    /// GF(2) inner product: parity of the AND.
    bool dot(const BitVec &other) const;

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        return a |= b;
    }
    BitVec operator~() const;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order on the character string (bit 0 most significant).
    bool operator<(const BitVec &other) const;

    std::string str() const;

   private:
    void require_same_size(const BitVec &other) const;

    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Bitwise AND of one or more equal-length strings.
BitVec and_product(std::span<const BitVec> vs);
BitVec and_product(std::initializer_list<BitVec> vs);
size_t weight(const BitVec &v);
BitVec xor_add(const BitVec &a, const BitVec &b);

/// A dense row-major matrix over GF(2).
class BitMat {
   public:
    BitMat() = default;
    BitMat(size_t rows, size_t cols);

    static BitMat from_rows(std::vector<BitVec> rows, size_t cols);
    static BitMat from_strings(const std::vector<std::string> &rows, size_t cols_if_empty = 0);
    static BitMat from_strings(std::initializer_list<std::string_view> rows);
    static BitMat identity(size_t n);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVec &row(size_t i) const {
        return rows_[i];
    }
    BitVec &row(size_t i) {
        return rows_[i];
    }
    const std::vector<BitVec> &row_list() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }

    void append_row(BitVec row);
    BitVec column(size_t j) const;
    BitMat transpose() const;
    BitMat select_columns(std::span<const size_t> columns) const;
    BitMat hstack(const BitMat &right) const;
    BitMat vstack(const BitMat &below) const;
    bool is_zero() const;

    /// M·v over GF(2); the result has one bit per row.
    BitVec multiply(const BitVec &v) const;
    /// M·Nᵀ over GF(2); entry (i, j) is row i of M dotted with row j of N.
    BitMat mul_transpose(const BitMat &other) const;

    std::vector<std::string> row_strings() const;

    /// "m n" header line followed by m lines of n characters from {0,1}.
    std::string to_text() const;
    static BitMat parse_text(std::string_view text);

    bool operator==(const BitMat &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form with zero rows dropped.
struct RowEchelon {
    BitMat reduced;
    /// pivots[i] is the leading column of reduced row i; strictly increasing.
    std::vector<size_t> pivots;
};

RowEchelon row_reduce(const BitMat &m);
size_t rank(const BitMat &m);
/// Basis of {v : M·v = 0}, one row per free column of the echelon form.
BitMat null_space(const BitMat &m);
/// Every XOR-combination of the rows. Element i combines the rows whose bit is
/// set in i, so element 0 is the zero string.
std::vector<BitVec> span_enumerate(const BitMat &m);
/// Number of columns with at least one 1 among the first q rows.
size_t covered_columns_count(const BitMat &m, size_t q);
/// Some v with M·v = b, or nullopt when the system is inconsistent.
std::optional<BitVec> solve(const BitMat &m, const BitVec &b);

/// Incrementally maintained row space, kept in reduced echelon form.
class RowSpace {
   public:
    explicit RowSpace(size_t cols) : cols_(cols) {
    }
    explicit RowSpace(const BitMat &m);

    size_t dim() const {
        return basis_.size();
    }
    size_t cols() const {
        return cols_;
    }
    /// Reduces v against the basis; zero iff v is in the span.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const;
    /// Adds v to the space; returns false if it was already a member.
    bool insert(BitVec v);
    BitMat basis() const;

   private:
    size_t cols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace korth

#endif
