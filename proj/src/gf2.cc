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

#include "korth/gf2.h"

#include <algorithm>
#include <charconv>

#include "korth/errors.h"

namespace korth {

namespace {

size_t words_for(size_t len) {
    return (len + 63) >> 6;
}

}  // namespace

BitVec::BitVec(size_t len) : len_(len), words_(words_for(len), 0) {
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c == '1') {
            v.set(i);
        } else if (c != '0') {
            throw ParseError(std::string("expected '0' or '1', got '") + c + "'", 1, i + 1);
        }
    }
    return v;
}

BitVec BitVec::ones(size_t len) {
    BitVec v(len);
    for (auto &w : v.words_) {
        w = ~uint64_t{0};
    }
    if (len & 63) {
        v.words_.back() &= (uint64_t{1} << (len & 63)) - 1;
    }
    return v;
}

BitVec BitVec::unit(size_t len, size_t i) {
    BitVec v(len);
    v.set(i);
    return v;
}

BitVec BitVec::from_word(size_t len, uint64_t word) {
    if (len > 64) {
        throw RangeError("BitVec::from_word supports at most 64 bits");
    }
    BitVec v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? word : word & ((uint64_t{1} << len) - 1);
    }
    return v;
}

uint64_t BitVec::to_word() const {
    if (len_ > 64) {
        throw RangeError("BitVec::to_word supports at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

bool BitVec::get(size_t i) const {
    if (i >= len_) {
        throw RangeError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(len_));
    }
    return (*this)[i];
}

void BitVec::set(size_t i, bool value) {
    if (i >= len_) {
        throw RangeError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(len_));
    }
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::flip(size_t i) {
    if (i >= len_) {
        throw RangeError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(len_));
    }
    words_[i >> 6] ^= uint64_t{1} << (i & 63);
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::first_set() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return len_;
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

void BitVec::require_same_size(const BitVec &other) const {
    if (len_ != other.len_) {
        throw DimensionError("bit string lengths differ: " + std::to_string(len_) + " vs " +
                             std::to_string(other.len_));
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator~() const {
    return *this ^ BitVec::ones(len_);
}

bool BitVec::operator<(const BitVec &other) const {
    size_t n = std::min(words_.size(), other.words_.size());
    for (size_t k = 0; k < n; k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            // The first differing character decides; '0' sorts first.
            return !((words_[k] >> std::countr_zero(diff)) & 1);
        }
    }
    return len_ < other.len_;
}

std::string BitVec::str() const {
    std::string out(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

BitVec and_product(std::span<const BitVec> vs) {
    if (vs.empty()) {
        throw DimensionError("and_product needs at least one bit string");
    }
    BitVec out = vs[0];
    for (size_t i = 1; i < vs.size(); i++) {
        out &= vs[i];
    }
    return out;
}

BitVec and_product(std::initializer_list<BitVec> vs) {
    return and_product(std::span<const BitVec>(vs.begin(), vs.size()));
}

size_t weight(const BitVec &v) {
    return v.weight();
}

BitVec xor_add(const BitVec &a, const BitVec &b) {
    return a ^ b;
}

BitMat::BitMat(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMat BitMat::from_rows(std::vector<BitVec> rows, size_t cols) {
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw DimensionError("row of length " + std::to_string(r.size()) +
                                 " in a matrix with " + std::to_string(cols) + " columns");
        }
    }
    BitMat m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMat BitMat::from_strings(const std::vector<std::string> &rows, size_t cols_if_empty) {
    size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
    std::vector<BitVec> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        out.push_back(BitVec::from_string(r));
    }
    return from_rows(std::move(out), cols);
}

BitMat BitMat::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> copy;
    for (auto r : rows) {
        copy.emplace_back(r);
    }
    return from_strings(copy);
}

BitMat BitMat::identity(size_t n) {
    BitMat m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

void BitMat::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw DimensionError("row of length " + std::to_string(row.size()) +
                             " appended to a matrix with " + std::to_string(cols_) + " columns");
    }
    rows_.push_back(std::move(row));
}

BitVec BitMat::column(size_t j) const {
    if (j >= cols_) {
        throw RangeError("column " + std::to_string(j) + " out of range");
    }
    BitVec out(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i][j]) {
            out.set(i);
        }
    }
    return out;
}

BitMat BitMat::transpose() const {
    BitMat out(cols_, rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t j : rows_[i].support()) {
            out.set(j, i);
        }
    }
    return out;
}

BitMat BitMat::select_columns(std::span<const size_t> columns) const {
    BitMat out(rows_.size(), columns.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t c = 0; c < columns.size(); c++) {
            if (columns[c] >= cols_) {
                throw RangeError("column " + std::to_string(columns[c]) + " out of range");
            }
            if (rows_[i][columns[c]]) {
                out.set(i, c);
            }
        }
    }
    return out;
}

BitMat BitMat::hstack(const BitMat &right) const {
    if (rows() != right.rows()) {
        throw DimensionError("hstack needs equal row counts");
    }
    BitMat out(rows(), cols_ + right.cols_);
    for (size_t i = 0; i < rows(); i++) {
        for (size_t j : rows_[i].support()) {
            out.set(i, j);
        }
        for (size_t j : right.rows_[i].support()) {
            out.set(i, cols_ + j);
        }
    }
    return out;
}

BitMat BitMat::vstack(const BitMat &below) const {
    if (cols_ != below.cols_) {
        throw DimensionError("vstack needs equal column counts");
    }
    BitMat out = *this;
    for (const auto &r : below.rows_) {
        out.rows_.push_back(r);
    }
    return out;
}

bool BitMat::is_zero() const {
    return std::none_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.any(); });
}

BitVec BitMat::multiply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix has " + std::to_string(cols_) +
                             " columns but vector has length " + std::to_string(v.size()));
    }
    BitVec out(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].dot(v)) {
            out.set(i);
        }
    }
    return out;
}

BitMat BitMat::mul_transpose(const BitMat &other) const {
    if (cols_ != other.cols_) {
        throw DimensionError("mul_transpose needs equal column counts");
    }
    BitMat out(rows(), other.rows());
    for (size_t i = 0; i < rows(); i++) {
        for (size_t j = 0; j < other.rows(); j++) {
            if (rows_[i].dot(other.rows_[j])) {
                out.set(i, j);
            }
        }
    }
    return out;
}

std::vector<std::string> BitMat::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

std::string BitMat::to_text() const {
    std::string out = std::to_string(rows()) + " " + std::to_string(cols_) + "\n";
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

BitMat BitMat::parse_text(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    // Trailing blank lines are tolerated; everything else must be exact.
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError("missing \"m n\" header", 1, 1);
    }

    auto parse_count = [](std::string_view header, size_t &pos, size_t &value) {
        size_t begin = pos;
        auto [ptr, ec] = std::from_chars(header.data() + pos, header.data() + header.size(), value);
        if (ec != std::errc() || ptr == header.data() + begin) {
            throw ParseError("expected a non-negative integer in header", 1, begin + 1);
        }
        pos = ptr - header.data();
    };
    std::string_view header = lines[0];
    size_t pos = 0;
    size_t m = 0;
    size_t n = 0;
    parse_count(header, pos, m);
    if (pos >= header.size() || header[pos] != ' ') {
        throw ParseError("expected a single space between m and n", 1, pos + 1);
    }
    pos++;
    parse_count(header, pos, n);
    if (pos != header.size()) {
        throw ParseError("unexpected text after header", 1, pos + 1);
    }
    if (lines.size() - 1 != m) {
        throw ParseError("header declares " + std::to_string(m) + " rows but found " +
                             std::to_string(lines.size() - 1),
                         std::min(lines.size(), m + 1) + 1, 1);
    }

    BitMat out(m, n);
    for (size_t i = 0; i < m; i++) {
        std::string_view line = lines[i + 1];
        for (size_t j = 0; j < line.size(); j++) {
            char c = line[j];
            if (c != '0' && c != '1') {
                throw ParseError(std::string("expected '0' or '1', got '") + c + "'", i + 2, j + 1);
            }
            if (j >= n) {
                throw ParseError("row longer than the declared " + std::to_string(n) + " columns",
                                 i + 2, j + 1);
            }
            if (c == '1') {
                out.set(i, j);
            }
        }
        if (line.size() < n) {
            throw ParseError("row shorter than the declared " + std::to_string(n) + " columns",
                             i + 2, line.size() + 1);
        }
    }
    return out;
}

RowEchelon row_reduce(const BitMat &m) {
    std::vector<BitVec> rows = m.row_list();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < m.cols() && next < rows.size(); col++) {
        size_t found = next;
        while (found < rows.size() && !rows[found][col]) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != next && rows[i][col]) {
                rows[i] ^= rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    rows.resize(next);
    return RowEchelon{BitMat::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

size_t rank(const BitMat &m) {
    return RowSpace(m).dim();
}

BitMat null_space(const BitMat &m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    BitMat out(0, m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(f);
        for (size_t i = 0; i < e.pivots.size(); i++) {
            if (e.reduced.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        out.append_row(std::move(v));
    }
    return out;
}

std::vector<BitVec> span_enumerate(const BitMat &m) {
    if (m.rows() >= 8 * sizeof(size_t) - 2) {
        throw RangeError("span of " + std::to_string(m.rows()) + " rows is too large to list");
    }
    size_t count = size_t{1} << m.rows();
    std::vector<BitVec> out;
    out.reserve(count);
    out.emplace_back(m.cols());
    for (size_t i = 1; i < count; i++) {
        out.push_back(out[i & (i - 1)] ^ m.row(std::countr_zero(i)));
    }
    return out;
}

size_t covered_columns_count(const BitMat &m, size_t q) {
    if (q < 1 || q > m.rows()) {
        throw RangeError("covered_columns_count needs 1 <= q <= " + std::to_string(m.rows()) +
                         ", got " + std::to_string(q));
    }
    BitVec acc(m.cols());
    for (size_t i = 0; i < q; i++) {
        acc |= m.row(i);
    }
    return acc.weight();
}

std::optional<BitVec> solve(const BitMat &m, const BitVec &b) {
    if (b.size() != m.rows()) {
        throw DimensionError("right-hand side length does not match the row count");
    }
    // Augment with b as an extra column and eliminate.
    BitMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j : m.row(i).support()) {
            aug.set(i, j);
        }
        if (b[i]) {
            aug.set(i, m.cols());
        }
    }
    RowEchelon e = row_reduce(aug);
    BitVec x(m.cols());
    for (size_t i = 0; i < e.pivots.size(); i++) {
        if (e.pivots[i] == m.cols()) {
            return std::nullopt;
        }
        if (e.reduced.get(i, m.cols())) {
            x.set(e.pivots[i]);
        }
    }
    return x;
}

RowSpace::RowSpace(const BitMat &m) : cols_(m.cols()) {
    for (const auto &r : m.row_list()) {
        insert(r);
    }
}

BitVec RowSpace::reduce(BitVec v) const {
    if (v.size() != cols_) {
        throw DimensionError("vector length does not match the row space");
    }
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v[pivots_[i]]) {
            v ^= basis_[i];
        }
    }
    return v;
}

bool RowSpace::contains(const BitVec &v) const {
    return reduce(v).none();
}

bool RowSpace::insert(BitVec v) {
    v = reduce(std::move(v));
    if (v.none()) {
        return false;
    }
    size_t p = v.first_set();
    for (auto &b : basis_) {
        if (b[p]) {
            b ^= v;
        }
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, p);
    basis_.insert(basis_.begin() + at, std::move(v));
    return true;
}

BitMat RowSpace::basis() const {
    return BitMat::from_rows(basis_, cols_);
}

}  // namespace korth
