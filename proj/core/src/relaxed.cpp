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

#include "arhub/relaxed.hpp"

#include <algorithm>
#include <numeric>

#include "arhub/error.hpp"
#include "arhub/preprocess.hpp"
#include "arhub/structured.hpp"
#include "stopwatch.hpp"

namespace arhub {

long long guaranteed_bound(const Instance& inst) {
    return static_cast<long long>(inst.inhabitant_count()) * inst.refugees;
}

namespace {

SolveReport below_no(Stopwatch sw, std::uint64_t guesses, std::uint64_t rejections) {
    SolveReport rep;
    rep.yes = false;
    rep.solver_name = "below-guarantee";
    rep.stats["guesses"] = static_cast<double>(guesses);
    rep.stats["verify_rejections"] = static_cast<double>(rejections);
    rep.elapsed = sw.lap();
    return rep;
}

}  // namespace

SolveReport solve_below_guarantee(const Instance& inst, int q, const SolveOptions& opts) {
    Stopwatch sw;
    if (q < 1) fail(Errc::invalid_params, "q must be at least 1");
    const int r = inst.refugees;
    const long long t = guaranteed_bound(inst) - q;
    if (t < 0 || r > static_cast<int>(inst.empty.size())) return below_no(sw, 0, 0);

    const Instance base = bipartize(inst);
    const auto& members = base.occupied;  // inhabitants, ascending vertex id
    const int ni = static_cast<int>(members.size());

    // Per-inhabitant admissible eff range. eff(s) is the neighbour count
    // the solution lets s tolerate; values beyond deg(s) - ub(s) change
    // nothing, so the range is clipped there.
    std::vector<int> lo(ni), hi(ni);
    for (int i = 0; i < ni; ++i) {
        const int room = base.topology.degree(members[i]) - base.ub(members[i]);
        lo[i] = std::max(0, std::min(r - q, room));
        hi[i] = std::min(r - 1, room);
    }

    std::uint64_t guesses = 0, rejections = 0;
    std::vector<int> idx, eff;
    const int max_size = std::min(q, ni);
    for (int size = 1; size <= max_size; ++size) {
        idx.resize(size);
        std::iota(idx.begin(), idx.end(), 0);
        bool more_sets = ni >= size;
        while (more_sets) {
            bool feasible_set = true;
            for (int i : idx)
                if (hi[i] < lo[i]) feasible_set = false;
            if (feasible_set) {
                eff.resize(size);
                for (int j = 0; j < size; ++j) eff[j] = lo[idx[j]];
                bool more_effs = true;
                while (more_effs) {
                    if (++guesses > opts.guess_cap)
                        fail(Errc::budget_exceeded, "below-guarantee guess cap hit");
                    // Members of S must jointly save at least q against the
                    // guarantee, else this guess cannot beat it.
                    long long savings = 0;
                    for (int j = 0; j < size; ++j) savings += r - eff[j];
                    if (savings >= q) {
                        Instance residue = base;
                        ReductionTrace trace = ReductionTrace::identity(
                            base.topology.vertex_count());
                        std::vector<Vertex> doomed;
                        for (int i = 0; i < ni; ++i)
                            if (!std::binary_search(idx.begin(), idx.end(), i))
                                doomed.push_back(members[i]);
                        for (int j = 0; j < size; ++j) {
                            const Vertex s = members[idx[j]];
                            residue.bound[s] = std::min(base.ub(s) + eff[j],
                                                        base.topology.degree(s));
                        }
                        residue.relax_budget.reset();
                        if (!doomed.empty())
                            detail::remove_vertices_in_place(residue, trace,
                                                             "below-guarantee-guess",
                                                             std::move(doomed));
                        SolveReport sub = solve_few_inhabitants(residue, opts);
                        if (sub.yes) {
                            Housing lifted = lift_solution(trace, *sub.witness);
                            long long exc = excess(inst, lifted).total;
                            if (exc <= t) {
                                SolveReport rep;
                                rep.yes = true;
                                rep.solver_name = "below-guarantee";
                                rep.witness = std::move(lifted);
                                rep.stats["guesses"] = static_cast<double>(guesses);
                                rep.stats["verify_rejections"] =
                                    static_cast<double>(rejections);
                                rep.stats["excess"] = static_cast<double>(exc);
                                rep.elapsed = sw.lap();
                                return rep;
                            }
                            ++rejections;
                        }
                    }
                    // odometer over eff vectors
                    more_effs = false;
                    for (int j = size - 1; j >= 0; --j) {
                        if (eff[j] < hi[idx[j]]) {
                            ++eff[j];
                            for (int k = j + 1; k < size; ++k) eff[k] = lo[idx[k]];
                            more_effs = true;
                            break;
                        }
                    }
                }
            }
            // next |S|-subset of the inhabitants
            more_sets = false;
            for (int j = size - 1; j >= 0; --j) {
                if (idx[j] < ni - size + j) {
                    ++idx[j];
                    for (int k = j + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
                    more_sets = true;
                    break;
                }
            }
        }
    }
    return below_no(sw, guesses, rejections);
}

long long min_excess(const Instance& inst, const SolveOptions& opts) {
    if (inst.refugees > static_cast<int>(inst.empty.size()))
        fail(Errc::invalid_params, "more refugees than empty vertices");
    if (inst.refugees == 0) return 0;
    // An unsatisfiable budget forces the brute scan to visit every housing
    // and report the minimum excess it saw.
    Instance probe = inst;
    probe.relax_budget = -1;
    SolveReport rep = solve_relaxed_brute(probe, opts);
    return static_cast<long long>(rep.stats.at("min_excess"));
}

}  // namespace arhub
