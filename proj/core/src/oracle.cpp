// Copyright 2026 The arhub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arhub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "arhub/error.hpp"
#include "stopwatch.hpp"

namespace arhub {

namespace {

// Incremental per-inhabitant counting with epoch stamps, so a fresh subset
// needs no full reset.
struct NeighbourCounter {
    explicit NeighbourCounter(const Instance& inst)
        : inst_(inst), cnt_(inst.topology.vertex_count(), 0),
          stamp_(inst.topology.vertex_count(), 0) {}

    // True when placing exactly `chosen` respects every bound.
    bool respects(const std::vector<Vertex>& chosen) {
        ++epoch_;
        for (Vertex v : chosen)
            for (Vertex h : inst_.topology.neighbors(v)) {
                if (!inst_.is_occupied(h)) continue;
                if (stamp_[h] != epoch_) {
                    stamp_[h] = epoch_;
                    cnt_[h] = 0;
                }
                if (++cnt_[h] > inst_.ub(h)) return false;
            }
        return true;
    }

    // Total excess of placing exactly `chosen`.
    long long total_excess(const std::vector<Vertex>& chosen) {
        ++epoch_;
        for (Vertex v : chosen)
            for (Vertex h : inst_.topology.neighbors(v)) {
                if (!inst_.is_occupied(h)) continue;
                if (stamp_[h] != epoch_) {
                    stamp_[h] = epoch_;
                    cnt_[h] = 0;
                }
                ++cnt_[h];
            }
        long long total = 0;
        for (Vertex v : chosen)
            for (Vertex h : inst_.topology.neighbors(v)) {
                if (!inst_.is_occupied(h) || stamp_[h] != epoch_) continue;
                total += std::max(0, cnt_[h] - inst_.ub(h));
                stamp_[h] = 0;  // count each inhabitant once
            }
        return total;
    }

private:
    const Instance& inst_;
    std::vector<int> cnt_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

// Lexicographically next k-combination of {0..m-1}; false when exhausted.
bool next_combination(std::vector<int>& idx, int m) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<Vertex> pick(const std::vector<Vertex>& pool, const std::vector<int>& idx) {
    std::vector<Vertex> out(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) out[i] = pool[idx[i]];
    return out;
}

SolveReport no_report(const char* name, Stopwatch sw, std::uint64_t enumerated) {
    SolveReport r;
    r.yes = false;
    r.solver_name = name;
    r.stats["subsets_enumerated"] = static_cast<double>(enumerated);
    r.elapsed = sw.lap();
    return r;
}

SolveReport yes_report(const char* name, Stopwatch sw, std::uint64_t enumerated,
                       std::vector<Vertex> placed) {
    SolveReport r;
    r.yes = true;
    r.witness = Housing{std::move(placed)};
    r.solver_name = name;
    r.stats["subsets_enumerated"] = static_cast<double>(enumerated);
    r.elapsed = sw.lap();
    return r;
}

}  // namespace

SolveReport solve_by_r_subsets(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const auto& pool = inst.empty;
    const int m = static_cast<int>(pool.size());
    const int r = inst.refugees;
    if (r > m) return no_report("r-subsets", sw, 0);
    if (r == 0) return yes_report("r-subsets", sw, 1, {});

    NeighbourCounter counter(inst);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::uint64_t enumerated = 0;
    do {
        if (++enumerated > opts.subset_cap)
            fail(Errc::budget_exceeded, "r-subset enumeration cap hit");
        auto chosen = pick(pool, idx);
        if (counter.respects(chosen))
            return yes_report("r-subsets", sw, enumerated, std::move(chosen));
    } while (next_combination(idx, m));
    return no_report("r-subsets", sw, enumerated);
}

SolveReport solve_by_empty_subsets(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const auto& pool = inst.empty;
    const int m = static_cast<int>(pool.size());
    const int r = inst.refugees;
    if (r > m) return no_report("empty-subsets", sw, 0);
    if (m >= 63 || (1ull << m) > opts.empty_subset_cap)
        fail(Errc::budget_exceeded, "power set of empty vertices exceeds cap");

    NeighbourCounter counter(inst);
    std::vector<Vertex> chosen;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        if (std::popcount(mask) != r) continue;
        chosen.clear();
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) chosen.push_back(pool[i]);
        if (counter.respects(chosen))
            return yes_report("empty-subsets", sw, mask + 1, std::move(chosen));
    }
    return no_report("empty-subsets", sw, 1ull << m);
}

SolveReport solve_by_extra_houses(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const auto& pool = inst.empty;
    const int m = static_cast<int>(pool.size());
    const int xi = m - inst.refugees;
    if (xi < 0) return no_report("extra-houses", sw, 0);

    NeighbourCounter counter(inst);
    std::vector<int> idx(xi);
    for (int i = 0; i < xi; ++i) idx[i] = i;
    std::uint64_t enumerated = 0;
    std::vector<Vertex> chosen;
    do {
        if (++enumerated > opts.subset_cap)
            fail(Errc::budget_exceeded, "extra-house enumeration cap hit");
        chosen.clear();
        size_t skip = 0;
        for (int i = 0; i < m; ++i) {
            if (skip < idx.size() && idx[skip] == i)
                ++skip;
            else
                chosen.push_back(pool[i]);
        }
        if (counter.respects(chosen))
            return yes_report("extra-houses", sw, enumerated, std::move(chosen));
    } while (next_combination(idx, m));
    return no_report("extra-houses", sw, enumerated);
}

SolveReport solve_relaxed_brute(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const auto& pool = inst.empty;
    const int m = static_cast<int>(pool.size());
    const int r = inst.refugees;
    const long long budget = inst.relax_budget.value_or(0);
    if (r > m) return no_report("relaxed-brute", sw, 0);
    if (r == 0) return yes_report("relaxed-brute", sw, 1, {});

    NeighbourCounter counter(inst);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::uint64_t enumerated = 0;
    long long best = std::numeric_limits<long long>::max();
    do {
        if (++enumerated > opts.subset_cap)
            fail(Errc::budget_exceeded, "relaxed enumeration cap hit");
        auto chosen = pick(pool, idx);
        long long exc = counter.total_excess(chosen);
        if (exc <= budget) {
            auto rep = yes_report("relaxed-brute", sw, enumerated, std::move(chosen));
            rep.stats["excess"] = static_cast<double>(exc);
            return rep;
        }
        best = std::min(best, exc);
    } while (next_combination(idx, m));
    auto rep = no_report("relaxed-brute", sw, enumerated);
    rep.stats["min_excess"] = static_cast<double>(best);
    return rep;
}

}  // namespace arhub
