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

#ifndef KORTH_SEARCH_H
#define KORTH_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "korth/gf2.h"

namespace korth {

/// Largest row count the search kernel handles.
constexpr int kMaxSearchRows = 8;

enum class Prune { kNone, kOrbit };

std::string prune_name(Prune prune);
/// Parses "none" or "orbit"; throws std::invalid_argument otherwise.
Prune parse_prune(const std::string &text);

struct SearchSpace {
    int k = 2;
    int m_min = 3;
    int m_max = 6;
    int n_max = 6;
    /// Wall-clock limit; zero or negative means unlimited.
    double budget_seconds = 0;
    /// Limit on visited nodes, polled every 2^16 nodes of a worker; zero means
    /// unlimited.
    uint64_t node_budget = 0;
    Prune prune = Prune::kNone;
    int threads = 1;
    /// Witnesses kept in the report (the count is always exact).
    size_t max_witnesses = 16;

    /// Throws RangeError on a malformed space.
    void validate() const;
};

struct SizeCount {
    int n = 0;
    /// Full-rank candidates examined.
    uint64_t full_rank = 0;
    uint64_t k_orthogonal = 0;
};

enum class BoxStatus { kComplete, kIncomplete, kSkipped };

/// One row count m scanned for every n in [m, n_max].
struct SearchBox {
    int m = 0;
    BoxStatus status = BoxStatus::kSkipped;
    std::string skip_reason;
    /// Set when the exclusion is a proof rather than a limitation.
    bool skip_is_sound = false;
    std::vector<SizeCount> sizes;
    uint64_t nodes = 0;
};

struct SearchWitness {
    int m = 0;
    /// Columns as integers (bit i is row i), ascending.
    std::vector<uint32_t> columns;
    BitMat matrix;
    /// Independent re-check: k-orthogonal, full rank, distinct nonzero columns.
    bool rechecked = false;
};

struct SearchReport {
    SearchSpace space;
    std::vector<SearchBox> boxes;
    uint64_t witness_count = 0;
    std::vector<SearchWitness> witnesses;
    double elapsed_seconds = 0;
    /// Every admissible column subset of every box was visited or excluded by
    /// a sound argument.
    bool complete = false;

    /// n_max < 2^(k+1) - 1: the run can only confirm the size bound.
    bool minimality_run() const;
    /// No witness below 2^(k+1) - 1 columns.
    bool consistent_with_bound() const;
};

SearchReport minimality_search(const SearchSpace &space);

/// Full-rank m×n matrices with distinct nonzero columns, as ascending
/// column subsets of 1..2^m-1 in lexicographic order.
class CandidateEnumerator {
   public:
    CandidateEnumerator(int m, int n);
    std::optional<BitMat> next();

   private:
    bool advance();
    int m_;
    int n_;
    uint32_t top_;
    std::vector<uint32_t> cols_;
    bool started_ = false;
    bool done_ = false;
};

/// Builds the m×|columns| matrix whose column j has bit i of columns[j] in row i.
BitMat matrix_from_columns(int m, const std::vector<uint32_t> &columns);

}  // namespace korth

#endif
