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

#include "korth/search.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "korth/errors.h"
#include "korth/orthogonality.h"

namespace korth {

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kCheckInterval = uint64_t{1} << 16;
constexpr size_t kWitnessHardCap = 4096;

bool witness_less(const SearchWitness &a, const SearchWitness &b) {
    if (a.columns.size() != b.columns.size()) {
        return a.columns.size() < b.columns.size();
    }
    return a.columns < b.columns;
}

bool recheck(const SearchWitness &w, int k) {
    std::vector<uint32_t> sorted = w.columns;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    bool nonzero = std::find(sorted.begin(), sorted.end(), 0u) == sorted.end();
    return distinct && nonzero && rank(w.matrix) == static_cast<size_t>(w.m) &&
           is_k_orthogonal(w.matrix, k).holds;
}

// Shared state of one box scan. Each worker owns its counts; the merge sums
// them and sorts witnesses, so the report does not depend on scheduling.
struct BoxContext {
    int m = 0;
    int k = 0;
    int n_max = 0;
    std::vector<uint32_t> free_columns;
    std::vector<uint32_t> anchors;
    Clock::time_point deadline;
    bool has_deadline = false;
    uint64_t node_budget = 0;
    std::atomic<uint64_t> *global_nodes = nullptr;
    std::atomic<bool> *stop = nullptr;
};

struct WorkerResult {
    std::vector<uint64_t> full_rank;
    std::vector<uint64_t> k_orthogonal;
    std::vector<SearchWitness> witnesses;
    uint64_t witness_count = 0;
    uint64_t nodes = 0;
};

// Column subsets are scanned depth first. f holds, for every row set T with
// 1 <= |T| <= k, the parity of the number of chosen columns containing T;
// that parity is the weight parity of the AND of the rows in T, so the
// candidate is k-orthogonal exactly when f is zero.
template <size_t W>
class Kernel {
   public:
    using Bits = std::array<uint64_t, W>;

    Kernel(const BoxContext &ctx, WorkerResult &out) : ctx_(ctx), out_(out) {
        int m = ctx.m;
        std::vector<int> index(size_t{1} << m, -1);
        int count = 0;
        for (uint32_t t = 1; t < (1u << m); t++) {
            if (std::popcount(t) <= ctx.k) {
                index[t] = count++;
            }
        }
        sub_.assign(size_t{1} << m, Bits{});
        for (uint32_t c = 1; c < (1u << m); c++) {
            // Enumerate the nonempty submasks of c.
            for (uint32_t t = c; t; t = (t - 1) & c) {
                if (index[t] >= 0) {
                    sub_[c][index[t] >> 6] |= uint64_t{1} << (index[t] & 63);
                }
            }
        }
        out_.full_rank.assign(ctx.n_max + 1, 0);
        out_.k_orthogonal.assign(ctx.n_max + 1, 0);
    }

    // Starts from the anchors; with first < 0 only the anchor set itself is
    // examined, otherwise the subtree whose first free column is free[first].
    void run(int first) {
        State s{};
        for (uint32_t a : ctx_.anchors) {
            push(s, a);
        }
        chosen_ = ctx_.anchors;
        if (first < 0) {
            visit(s);
            return;
        }
        if (chosen_.size() >= static_cast<size_t>(ctx_.n_max)) {
            return;
        }
        State next = s;
        push(next, ctx_.free_columns[first]);
        chosen_.push_back(ctx_.free_columns[first]);
        dfs(next, static_cast<size_t>(first) + 1);
    }

    bool aborted() const {
        return aborted_;
    }

   private:
    struct State {
        Bits f;
        std::array<uint32_t, 32> basis;
        int rank;
    };

    void push(State &s, uint32_t c) const {
        for (size_t w = 0; w < W; w++) {
            s.f[w] ^= sub_[c][w];
        }
        uint32_t v = c;
        while (v) {
            int top = 31 - std::countl_zero(v);
            if (!s.basis[top]) {
                s.basis[top] = v;
                s.rank++;
                return;
            }
            v ^= s.basis[top];
        }
    }

    void visit(const State &s) {
        int n = static_cast<int>(chosen_.size());
        if (n < ctx_.m || s.rank < ctx_.m) {
            return;
        }
        out_.full_rank[n]++;
        for (size_t w = 0; w < W; w++) {
            if (s.f[w]) {
                return;
            }
        }
        out_.k_orthogonal[n]++;
        out_.witness_count++;
        if (out_.witnesses.size() < kWitnessHardCap) {
            SearchWitness wit;
            wit.m = ctx_.m;
            wit.columns = chosen_;
            std::sort(wit.columns.begin(), wit.columns.end());
            wit.matrix = matrix_from_columns(ctx_.m, wit.columns);
            out_.witnesses.push_back(std::move(wit));
        }
    }

    bool tick() {
        if (++out_.nodes % kCheckInterval != 0) {
            return true;
        }
        uint64_t total = ctx_.global_nodes->fetch_add(kCheckInterval) + kCheckInterval;
        if (ctx_.stop->load(std::memory_order_relaxed) ||
            (ctx_.node_budget && total >= ctx_.node_budget) ||
            (ctx_.has_deadline && Clock::now() >= ctx_.deadline)) {
            ctx_.stop->store(true);
            aborted_ = true;
            return false;
        }
        return true;
    }

    void dfs(const State &s, size_t start) {
        if (aborted_ || !tick()) {
            return;
        }
        visit(s);
        int size = static_cast<int>(chosen_.size());
        if (size == ctx_.n_max || s.rank + (ctx_.n_max - size) < ctx_.m) {
            return;
        }
        for (size_t i = start; i < ctx_.free_columns.size(); i++) {
            State next = s;
            push(next, ctx_.free_columns[i]);
            chosen_.push_back(ctx_.free_columns[i]);
            dfs(next, i + 1);
            chosen_.pop_back();
            if (aborted_) {
                return;
            }
        }
    }

    const BoxContext &ctx_;
    WorkerResult &out_;
    std::vector<Bits> sub_;
    std::vector<uint32_t> chosen_;
    bool aborted_ = false;
};

size_t subset_words(int m, int k) {
    size_t count = 0;
    for (uint32_t t = 1; t < (1u << m); t++) {
        count += std::popcount(t) <= k;
    }
    return (count + 63) / 64;
}

template <size_t W>
bool run_box(const BoxContext &ctx, int threads, WorkerResult &merged) {
    std::atomic<size_t> next_task{0};
    size_t tasks = ctx.free_columns.size();
    std::mutex mu;
    bool aborted = false;
    merged.full_rank.assign(ctx.n_max + 1, 0);
    merged.k_orthogonal.assign(ctx.n_max + 1, 0);
    auto absorb = [&](WorkerResult &r, bool worker_aborted) {
        std::lock_guard<std::mutex> lock(mu);
        for (int n = 0; n <= ctx.n_max; n++) {
            merged.full_rank[n] += r.full_rank[n];
            merged.k_orthogonal[n] += r.k_orthogonal[n];
        }
        merged.witness_count += r.witness_count;
        merged.nodes += r.nodes;
        for (auto &w : r.witnesses) {
            merged.witnesses.push_back(std::move(w));
        }
        aborted = aborted || worker_aborted;
    };
    {
        WorkerResult r;
        Kernel<W> kernel(ctx, r);
        kernel.run(-1);
        absorb(r, false);
    }
    auto work = [&] {
        WorkerResult r;
        Kernel<W> kernel(ctx, r);
        for (size_t t = next_task++; t < tasks; t = next_task++) {
            kernel.run(static_cast<int>(t));
            if (kernel.aborted()) {
                break;
            }
        }
        absorb(r, kernel.aborted());
    };
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<size_t>(tasks, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; i++) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return !aborted;
}

}  // namespace

std::string prune_name(Prune prune) {
    return prune == Prune::kOrbit ? "orbit" : "none";
}

Prune parse_prune(const std::string &text) {
    if (text == "none") {
        return Prune::kNone;
    }
    if (text == "orbit") {
        return Prune::kOrbit;
    }
    throw std::invalid_argument("prune must be 'none' or 'orbit', got '" + text + "'");
}

void SearchSpace::validate() const {
    if (k < 1) {
        throw RangeError("k must be at least 1");
    }
    if (m_min < 1 || m_max < m_min) {
        throw RangeError("need 1 <= m_min <= m_max");
    }
    if (n_max < 1) {
        throw RangeError("n_max must be at least 1");
    }
    if (threads < 1) {
        throw RangeError("threads must be at least 1");
    }
}

bool SearchReport::minimality_run() const {
    return space.k < 31 && space.n_max < (1 << (space.k + 1)) - 1;
}

bool SearchReport::consistent_with_bound() const {
    if (space.k >= 31) {
        return true;
    }
    size_t bound = (size_t{1} << (space.k + 1)) - 1;
    for (const auto &box : boxes) {
        for (const auto &size : box.sizes) {
            if (size.k_orthogonal && static_cast<size_t>(size.n) < bound) {
                return false;
            }
        }
    }
    return true;
}

SearchReport minimality_search(const SearchSpace &space) {
    space.validate();
    SearchReport report;
    report.space = space;
    auto start = Clock::now();
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    bool complete = true;

    for (int m = space.m_min; m <= space.m_max; m++) {
        SearchBox box;
        box.m = m;
        if (m <= space.k) {
            // Row operations can make any column the unique all-ones column,
            // and then the AND of all m rows has weight one.
            box.skip_reason = "m <= k: no non-degenerate code with m rows is m-orthogonal";
            box.skip_is_sound = true;
        } else if (m > space.n_max) {
            box.skip_reason = "m > n_max: full rank is impossible";
            box.skip_is_sound = true;
        } else if (m > kMaxSearchRows) {
            box.skip_reason = "m > " + std::to_string(kMaxSearchRows) + ": beyond the search kernel";
        } else if (stop.load()) {
            box.status = BoxStatus::kIncomplete;
            box.skip_reason = "budget exhausted before this box";
        }
        if (!box.skip_reason.empty()) {
            complete = complete && box.skip_is_sound;
            report.boxes.push_back(std::move(box));
            continue;
        }

        BoxContext ctx;
        ctx.m = m;
        ctx.k = space.k;
        ctx.n_max = std::min(space.n_max, (1 << m) - 1);
        ctx.global_nodes = &nodes;
        ctx.stop = &stop;
        ctx.node_budget = space.node_budget;
        if (space.budget_seconds > 0) {
            ctx.has_deadline = true;
            ctx.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(space.budget_seconds));
        }
        for (uint32_t c = 1; c < (1u << m); c++) {
            bool unit = std::has_single_bit(c);
            if (space.prune == Prune::kOrbit && unit) {
                ctx.anchors.push_back(c);
            } else {
                ctx.free_columns.push_back(c);
            }
        }

        WorkerResult merged;
        bool finished = false;
        switch (subset_words(m, space.k)) {
            case 1:
                finished = run_box<1>(ctx, space.threads, merged);
                break;
            case 2:
                finished = run_box<2>(ctx, space.threads, merged);
                break;
            default:
                finished = run_box<4>(ctx, space.threads, merged);
                break;
        }
        box.status = finished ? BoxStatus::kComplete : BoxStatus::kIncomplete;
        box.nodes = merged.nodes;
        for (int n = m; n <= space.n_max; n++) {
            SizeCount sc;
            sc.n = n;
            if (n <= ctx.n_max) {
                sc.full_rank = merged.full_rank[n];
                sc.k_orthogonal = merged.k_orthogonal[n];
            }
            box.sizes.push_back(sc);
        }
        report.witness_count += merged.witness_count;
        for (auto &w : merged.witnesses) {
            report.witnesses.push_back(std::move(w));
        }
        complete = complete && finished;
        report.boxes.push_back(std::move(box));
    }

    std::sort(report.witnesses.begin(), report.witnesses.end(), witness_less);
    if (report.witnesses.size() > space.max_witnesses) {
        report.witnesses.resize(space.max_witnesses);
    }
    for (auto &w : report.witnesses) {
        w.rechecked = recheck(w, space.k);
    }
    report.complete = complete;
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

CandidateEnumerator::CandidateEnumerator(int m, int n) : m_(m), n_(n) {
    if (m < 1 || m > 31 || n < 0) {
        throw RangeError("enumerate_candidates needs 1 <= m <= 31 and n >= 0");
    }
    top_ = static_cast<uint32_t>((uint64_t{1} << m) - 1);
    if (m > n || static_cast<uint64_t>(n) > top_) {
        done_ = true;
    }
}

bool CandidateEnumerator::advance() {
    if (!started_) {
        started_ = true;
        cols_.resize(n_);
        for (int i = 0; i < n_; i++) {
            cols_[i] = static_cast<uint32_t>(i + 1);
        }
        return true;
    }
    int pos = n_;
    while (pos > 0 && cols_[pos - 1] == top_ - static_cast<uint32_t>(n_ - pos)) {
        pos--;
    }
    if (pos == 0) {
        return false;
    }
    cols_[pos - 1]++;
    for (int i = pos; i < n_; i++) {
        cols_[i] = cols_[i - 1] + 1;
    }
    return true;
}

std::optional<BitMat> CandidateEnumerator::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        BitMat mat = matrix_from_columns(m_, cols_);
        if (rank(mat) == static_cast<size_t>(m_)) {
            return mat;
        }
    }
    return std::nullopt;
}

BitMat matrix_from_columns(int m, const std::vector<uint32_t> &columns) {
    BitMat out(static_cast<size_t>(m), columns.size());
    for (size_t j = 0; j < columns.size(); j++) {
        for (int i = 0; i < m; i++) {
            if ((columns[j] >> i) & 1) {
                out.set(static_cast<size_t>(i), j);
            }
        }
    }
    return out;
}

}  // namespace korth
