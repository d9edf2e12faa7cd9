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

#include "arhub/structured.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "arhub/error.hpp"
#include "arhub/preprocess.hpp"
#include "stopwatch.hpp"

namespace arhub {

namespace {

constexpr long long kInfeasible = -1;

struct ForestResult {
    long long max_housable = 0;
    std::vector<Vertex> witness;  // sorted, size == max_housable
};

// Two-state dynamic program over a bipartized forest.
//   empty v:    dp[i] = best in the subtree given v itself is housed (i=1)
//   occupied v: dp[i] = best given the parent empty vertex is housed (i=1)
// kInfeasible marks states ruled out by bound-0 inhabitants.
ForestResult forest_max(const Instance& inst) {
    const Graph& g = inst.topology;
    const int n = g.vertex_count();
    std::vector<Vertex> parent(n, -2), order;
    std::vector<Vertex> roots;
    order.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        roots.push_back(s);
        size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            Vertex v = order[head++];
            for (Vertex w : g.neighbors(v))
                if (parent[w] == -2) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
    }
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v : order)
        if (parent[v] >= 0) children[parent[v]].push_back(v);

    std::vector<long long> dp0(n, 0), dp1(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (!inst.is_occupied(v)) {
            long long s0 = 0, s1 = 1;
            bool ok1 = true;
            for (Vertex c : children[v]) {
                s0 += dp0[c];
                if (dp1[c] == kInfeasible)
                    ok1 = false;
                else
                    s1 += dp1[c];
            }
            dp0[v] = s0;
            dp1[v] = ok1 ? s1 : kInfeasible;
        } else {
            long long base = 0;
            std::vector<long long> gains;
            for (Vertex c : children[v]) {
                base += dp0[c];
                if (dp1[c] != kInfeasible && dp1[c] > dp0[c]) gains.push_back(dp1[c] - dp0[c]);
            }
            std::sort(gains.begin(), gains.end(), std::greater<>());
            auto value = [&](int budget) {
                if (budget < 0) return kInfeasible;
                long long s = base;
                int take = std::min<int>(budget, static_cast<int>(gains.size()));
                for (int i = 0; i < take; ++i) s += gains[i];
                return s;
            };
            dp0[v] = value(inst.ub(v));
            dp1[v] = value(inst.ub(v) - 1);
        }
    }

    ForestResult res;
    std::vector<std::pair<Vertex, int>> stack;
    for (Vertex r : roots) {
        if (inst.is_occupied(r)) {
            res.max_housable += dp0[r];
            stack.emplace_back(r, 0);
        } else if (dp1[r] != kInfeasible && dp1[r] > dp0[r]) {
            res.max_housable += dp1[r];
            stack.emplace_back(r, 1);
        } else {
            res.max_housable += dp0[r];
            stack.emplace_back(r, 0);
        }
    }
    std::unordered_set<Vertex> chosen;
    while (!stack.empty()) {
        auto [v, i] = stack.back();
        stack.pop_back();
        if (!inst.is_occupied(v)) {
            if (i) res.witness.push_back(v);
            for (Vertex c : children[v]) stack.emplace_back(c, i);
        } else {
            // Re-derive which children supplied the taken gains; ordering by
            // (gain desc, vertex asc) reproduces the dp value exactly.
            int budget = inst.ub(v) - i;
            std::vector<std::pair<long long, Vertex>> options;
            for (Vertex c : children[v])
                if (dp1[c] != kInfeasible && dp1[c] > dp0[c])
                    options.emplace_back(dp0[c] - dp1[c], c);
            std::sort(options.begin(), options.end());
            int take = std::min<int>(std::max(0, budget), static_cast<int>(options.size()));
            chosen.clear();
            for (int j = 0; j < take; ++j) chosen.insert(options[j].second);
            for (Vertex c : children[v]) stack.emplace_back(c, chosen.count(c) ? 1 : 0);
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

// Sub-instance induced on `keep` (sorted). Bounds are clamped to the new
// degree; refugees are zeroed, callers account for them separately.
std::pair<Instance, std::vector<Vertex>> induced_sub(const Instance& base,
                                                     const std::vector<Vertex>& keep) {
    const int n = base.topology.vertex_count();
    std::vector<Vertex> new_id(n, -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> adj(keep.size());
    std::vector<int> bound(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : base.topology.neighbors(keep[i]))
            if (new_id[w] != -1) adj[i].push_back(new_id[w]);
        bound[i] = base.bound[keep[i]];
    }
    Instance sub;
    sub.topology = Graph::from_adjacency(std::move(adj));
    sub.bound = std::move(bound);
    for (size_t i = 0; i < keep.size(); ++i)
        if (sub.bound[i] > sub.topology.degree(static_cast<Vertex>(i)))
            sub.bound[i] = sub.topology.degree(static_cast<Vertex>(i));
    sub.refugees = 0;
    sub.rebuild_cache();
    return {std::move(sub), keep};
}

SolveReport base_report(const char* name, bool yes) {
    SolveReport r;
    r.solver_name = name;
    r.yes = yes;
    return r;
}

}  // namespace

SolveReport solve_forest(const Instance& inst, const SolveOptions&) {
    Stopwatch sw;
    Instance b = bipartize(inst);
    if (!b.topology.is_forest())
        fail(Errc::not_a_forest, "bipartized topology contains a cycle");
    ForestResult fr = forest_max(b);
    SolveReport rep = base_report("forest", fr.max_housable >= inst.refugees);
    rep.stats["max_housable"] = static_cast<double>(fr.max_housable);
    if (rep.yes)
        rep.witness = Housing{std::vector<Vertex>(fr.witness.begin(),
                                                  fr.witness.begin() + inst.refugees)};
    rep.elapsed = sw.lap();
    return rep;
}

namespace {

struct CycleOutcome {
    long long max_housable = 0;
    std::vector<Vertex> witness;  // coordinates of the instance handed in
};

// One even, occupancy-alternating cycle with all bounds in {1, 2}.
CycleOutcome handle_cycle(const Instance& b, const std::vector<Vertex>& comp) {
    bool all_two = true;
    Vertex pick = -1;
    for (Vertex v : comp)
        if (b.is_occupied(v) && b.ub(v) < 2) {
            all_two = false;
            if (pick == -1) pick = v;
        }
    CycleOutcome out;
    if (all_two) {
        for (Vertex v : comp)
            if (!b.is_occupied(v)) out.witness.push_back(v);
        out.max_housable = static_cast<long long>(out.witness.size());
        return out;
    }

    auto nb = b.topology.neighbors(pick);
    Vertex u = nb[0], w = nb[1];
    std::vector<Vertex> keep;
    for (Vertex v : comp)
        if (v != pick && v != u && v != w) keep.push_back(v);
    std::sort(keep.begin(), keep.end());

    auto path_case = [&](Vertex housed_end) -> CycleOutcome {
        auto [sub, map_back] = induced_sub(b, keep);
        CycleOutcome c;
        if (housed_end != -1) {
            // The other neighbour of the housed endpoint loses one unit.
            // Decrement the unclamped bound first, then clamp to the path
            // degree; clamping first would undercount.
            Vertex other = -1;
            for (Vertex t : b.topology.neighbors(housed_end))
                if (t != pick) other = t;
            if (other != -1) {
                Vertex pos = static_cast<Vertex>(
                    std::lower_bound(keep.begin(), keep.end(), other) - keep.begin());
                if (b.ub(other) == 0) return c;  // case impossible, keep the empty candidate
                sub.bound[pos] = std::min(b.ub(other) - 1, sub.topology.degree(pos));
            }
            c.witness.push_back(housed_end);
            c.max_housable = 1;
        }
        Reduced red = remove_intolerant(sub);
        ForestResult fr = forest_max(red.instance);
        c.max_housable += fr.max_housable;
        for (Vertex v : fr.witness) c.witness.push_back(map_back[red.trace.to_original[v]]);
        return c;
    };

    CycleOutcome best = path_case(-1);
    for (Vertex end : {u, w}) {
        CycleOutcome c = path_case(end);
        if (c.max_housable > best.max_housable) best = std::move(c);
    }
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

}  // namespace

SolveReport solve_maxdeg2(const Instance& inst, const SolveOptions&) {
    Stopwatch sw;
    Instance b = inst;
    ReductionTrace trace = ReductionTrace::identity(inst.topology.vertex_count());
    detail::bipartize_in_place(b, trace);
    if (b.topology.max_degree() > 2)
        fail(Errc::degree_too_high, "bipartized maximum degree exceeds two");
    bool infeasible = false;
    detail::remove_intolerant_in_place(b, trace, infeasible);

    const int n = b.topology.vertex_count();
    auto labels = b.topology.component_labels();
    int comps = n == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Vertex>> comp(comps);
    for (Vertex v = 0; v < n; ++v) comp[labels[v]].push_back(v);

    long long total = 0;
    int cycles = 0;
    std::vector<Vertex> witness_b;
    std::vector<Vertex> forest_part;
    for (const auto& c : comp) {
        bool is_cycle = c.size() >= 3;
        for (Vertex v : c)
            if (b.topology.degree(v) != 2) is_cycle = false;
        if (!is_cycle) {
            forest_part.insert(forest_part.end(), c.begin(), c.end());
            continue;
        }
        ++cycles;
        CycleOutcome out = handle_cycle(b, c);
        total += out.max_housable;
        witness_b.insert(witness_b.end(), out.witness.begin(), out.witness.end());
    }
    if (!forest_part.empty()) {
        std::sort(forest_part.begin(), forest_part.end());
        auto [sub, map_back] = induced_sub(b, forest_part);
        ForestResult fr = forest_max(sub);
        total += fr.max_housable;
        for (Vertex v : fr.witness) witness_b.push_back(map_back[v]);
    }

    SolveReport rep = base_report("maxdeg2", total >= inst.refugees);
    rep.stats["max_housable"] = static_cast<double>(total);
    rep.stats["cycles"] = cycles;
    if (rep.yes) {
        std::vector<Vertex> lifted;
        lifted.reserve(witness_b.size());
        for (Vertex v : witness_b) lifted.push_back(trace.to_original[v]);
        std::sort(lifted.begin(), lifted.end());
        lifted.resize(inst.refugees);
        rep.witness = Housing{std::move(lifted)};
    }
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport solve_complete_bipartite(const Instance& inst, const SolveOptions&) {
    Stopwatch sw;
    if (!degree_stats(inst).complete_bipartite_between_parts)
        fail(Errc::not_complete_bipartite, "an inhabitant misses an empty vertex");
    const int r = inst.refugees;
    SolveReport rep = base_report("complete-bipartite", false);
    if (static_cast<int>(inst.empty.size()) >= r) {
        int min_bound = INT_MAX;
        for (Vertex h : inst.occupied) min_bound = std::min(min_bound, inst.ub(h));
        if (!inst.occupied.empty()) rep.stats["min_bound"] = min_bound;
        if (inst.occupied.empty() || min_bound >= r) {
            rep.yes = true;
            rep.witness = Housing{std::vector<Vertex>(inst.empty.begin(), inst.empty.begin() + r)};
        }
    }
    rep.elapsed = sw.lap();
    return rep;
}

std::vector<NeighbourhoodType> neighbourhood_types(const Instance& inst, int limit) {
    const int k = inst.inhabitant_count();
    if (k > limit || k > 63)
        fail(Errc::too_many_inhabitants,
             std::to_string(k) + " inhabitants, limit " + std::to_string(limit));
    std::unordered_map<std::uint64_t, int> cap;
    for (Vertex v : inst.empty) {
        std::uint64_t mask = 0;
        for (Vertex h : inst.topology.neighbors(v)) {
            if (!inst.is_occupied(h)) continue;
            auto it = std::lower_bound(inst.occupied.begin(), inst.occupied.end(), h);
            mask |= 1ull << (it - inst.occupied.begin());
        }
        ++cap[mask];
    }
    std::vector<NeighbourhoodType> types;
    types.reserve(cap.size());
    for (auto [mask, c] : cap) types.push_back({mask, c});
    std::sort(types.begin(), types.end(),
              [](const NeighbourhoodType& a, const NeighbourhoodType& b) { return a.mask < b.mask; });
    return types;
}

SolveReport solve_few_inhabitants(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const int k = inst.inhabitant_count();
    if (k > opts.few_inhabitants_limit || k > 63)
        fail(Errc::too_many_inhabitants,
             std::to_string(k) + " inhabitants, limit " + std::to_string(opts.few_inhabitants_limit));
    const int r = inst.refugees;

    // Group empty vertices by their adjacent-inhabitant mask.
    std::unordered_map<std::uint64_t, std::vector<Vertex>> groups;
    for (Vertex v : inst.empty) {
        std::uint64_t mask = 0;
        for (Vertex h : inst.topology.neighbors(v)) {
            if (!inst.is_occupied(h)) continue;
            auto it = std::lower_bound(inst.occupied.begin(), inst.occupied.end(), h);
            mask |= 1ull << (it - inst.occupied.begin());
        }
        groups[mask].push_back(v);
    }
    std::vector<std::uint64_t> mask_of;
    std::vector<const std::vector<Vertex>*> members;
    {
        std::vector<std::uint64_t> keys;
        for (auto& [m, vs] : groups) keys.push_back(m);
        std::sort(keys.begin(), keys.end());
        for (auto m : keys) {
            mask_of.push_back(m);
            members.push_back(&groups[m]);
        }
    }
    const int types = static_cast<int>(mask_of.size());
    std::vector<long long> suffix(types + 1, 0);
    for (int i = types - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + static_cast<long long>(members[i]->size());

    std::vector<int> slack(k);
    for (int i = 0; i < k; ++i) slack[i] = inst.ub(inst.occupied[i]);

    SolveReport rep = base_report("few-inhabitants", false);
    rep.stats["types"] = types;

    int need = r;
    std::uint64_t nodes = 0;
    struct Frame {
        int type;
        int x;
    };
    std::vector<Frame> st;
    auto apply = [&](int t, int x) {
        for (std::uint64_t m = mask_of[t]; m; m &= m - 1) slack[std::countr_zero(m)] -= x;
        need -= x;
    };
    auto undo = [&](int t, int x) {
        for (std::uint64_t m = mask_of[t]; m; m &= m - 1) slack[std::countr_zero(m)] += x;
        need += x;
    };
    int i = 0;
    bool found = false;
    for (;;) {
        if (need == 0) {
            found = true;
            break;
        }
        if (i < types && suffix[i] >= need) {
            int xm = std::min(static_cast<int>(members[i]->size()), need);
            for (std::uint64_t m = mask_of[i]; m; m &= m - 1)
                xm = std::min(xm, slack[std::countr_zero(m)]);
            if (xm < 0) xm = 0;
            if (++nodes > opts.guess_cap) fail(Errc::budget_exceeded, "type search cap hit");
            apply(i, xm);
            st.push_back({i, xm});
            ++i;
            continue;
        }
        // Dead end: step back to the last frame that can still shrink.
        bool exhausted = false;
        for (;;) {
            if (st.empty()) {
                exhausted = true;
                break;
            }
            Frame f = st.back();
            st.pop_back();
            undo(f.type, f.x);
            if (f.x > 0) {
                if (++nodes > opts.guess_cap) fail(Errc::budget_exceeded, "type search cap hit");
                apply(f.type, f.x - 1);
                st.push_back({f.type, f.x - 1});
                i = f.type + 1;
                break;
            }
            i = f.type;
        }
        if (exhausted) break;
    }
    rep.stats["nodes"] = static_cast<double>(nodes);
    if (found) {
        std::vector<Vertex> placed;
        placed.reserve(r);
        for (const Frame& f : st)
            placed.insert(placed.end(), members[f.type]->begin(),
                          members[f.type]->begin() + f.x);
        std::sort(placed.begin(), placed.end());
        rep.yes = true;
        rep.witness = Housing{std::move(placed)};
    }
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport solve_nearly_complete_bipartite(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    Instance b = inst;
    ReductionTrace trace = ReductionTrace::identity(inst.topology.vertex_count());
    detail::bipartize_in_place(b, trace);
    const long long n_i = b.inhabitant_count();
    const long long n_u = static_cast<long long>(b.empty.size());
    const long long p = n_i * n_u - b.topology.edge_count();
    const int r = inst.refugees;

    SolveReport rep = base_report("nearly-complete", false);
    rep.stats["missing_edges"] = static_cast<double>(p);
    if (r == 0) {
        rep.yes = true;
        rep.witness = Housing{{}};
        rep.elapsed = sw.lap();
        return rep;
    }
    if (p >= n_i) {
        SolveReport inner = solve_few_inhabitants(b, opts);
        rep.yes = inner.yes;
        rep.witness = inner.witness;  // b shares the caller's vertex ids
        rep.stats.insert(inner.stats.begin(), inner.stats.end());
        rep.elapsed = sw.lap();
        return rep;
    }

    // Inhabitants adjacent to every empty vertex see all r placements.
    std::vector<Vertex> core;
    int core_min = INT_MAX;
    for (Vertex h : b.occupied)
        if (b.topology.degree(h) == n_u) {
            core.push_back(h);
            core_min = std::min(core_min, b.ub(h));
        }
    rep.stats["core"] = static_cast<double>(core.size());
    if (core_min < r) {
        rep.elapsed = sw.lap();
        return rep;  // definitive no
    }
    detail::remove_vertices_in_place(b, trace, "core-saturated", core);
    SolveReport inner = solve_few_inhabitants(b, opts);
    rep.yes = inner.yes;
    rep.stats.insert(inner.stats.begin(), inner.stats.end());
    if (inner.yes) rep.witness = lift_solution(trace, *inner.witness);
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport solve_modulator(const Instance& inst, const std::vector<Vertex>& modulator,
                            const SolveOptions& opts) {
    Stopwatch sw;
    const int n = inst.topology.vertex_count();
    std::vector<char> in_m(n, 0);
    for (Vertex v : modulator) {
        if (v < 0 || v >= n) fail(Errc::invalid_modulator, "vertex out of range");
        in_m[v] = 1;
    }
    Instance b = bipartize(inst);

    std::vector<Vertex> m_i, m_u, out_i, out_u;
    for (Vertex v = 0; v < n; ++v) {
        if (b.is_occupied(v))
            (in_m[v] ? m_i : out_i).push_back(v);
        else
            (in_m[v] ? m_u : out_u).push_back(v);
    }
    for (Vertex h : out_i) {
        int seen = 0;
        for (Vertex w : b.topology.neighbors(h))
            if (!b.is_occupied(w) && !in_m[w]) ++seen;
        if (seen != static_cast<int>(out_u.size()))
            fail(Errc::invalid_modulator,
                 "vertex " + std::to_string(h) + " misses an outside empty vertex");
    }
    if (m_u.size() > 63) fail(Errc::budget_exceeded, "modulator empty side too large");

    // Residue skeleton: modulator inhabitants, outside empties, and one
    // aggregate inhabitant standing in for every outside inhabitant.
    const int res_mi = static_cast<int>(m_i.size());
    const int res_u = static_cast<int>(out_u.size());
    const bool with_agg = !out_i.empty();
    const int res_n = res_mi + res_u + (with_agg ? 1 : 0);
    std::vector<std::vector<Vertex>> adj(res_n);
    std::vector<Vertex> u_pos(n, -1);
    for (int j = 0; j < res_u; ++j) u_pos[out_u[j]] = res_mi + j;
    for (int i = 0; i < res_mi; ++i)
        for (Vertex w : b.topology.neighbors(m_i[i]))
            if (u_pos[w] != -1) {
                adj[i].push_back(u_pos[w]);
                adj[u_pos[w]].push_back(i);
            }
    if (with_agg)
        for (int j = 0; j < res_u; ++j) {
            adj[res_n - 1].push_back(res_mi + j);
            adj[res_mi + j].push_back(res_n - 1);
        }
    Graph res_graph = Graph::from_adjacency(std::move(adj));

    const int r = inst.refugees;
    SolveReport rep = base_report("modulator", false);
    std::uint64_t guesses = 0;
    std::vector<int> dec(n, 0);
    std::vector<Vertex> touched;
    for (std::uint64_t mask = 0; mask < (1ull << m_u.size()); ++mask) {
        if (std::popcount(mask) > r) continue;
        if (++guesses > opts.guess_cap) fail(Errc::budget_exceeded, "modulator guess cap hit");

        std::vector<Vertex> s;
        for (size_t i = 0; i < m_u.size(); ++i)
            if (mask >> i & 1) s.push_back(m_u[i]);
        bool ok = true;
        for (Vertex v : s)
            for (Vertex h : b.topology.neighbors(v))
                if (b.is_occupied(h)) {
                    if (dec[h]++ == 0) touched.push_back(h);
                    if (dec[h] > b.ub(h)) ok = false;
                }
        if (ok) {
            Instance res;
            res.topology = res_graph;
            res.bound.assign(res_n, Instance::kEmptyVertex);
            for (int i = 0; i < res_mi; ++i)
                res.bound[i] =
                    std::min(b.ub(m_i[i]) - dec[m_i[i]], res_graph.degree(i));
            if (with_agg) {
                int agg = INT_MAX;
                for (Vertex h : out_i) agg = std::min(agg, b.ub(h) - dec[h]);
                res.bound[res_n - 1] = std::min(agg, res_u);
            }
            res.refugees = r - std::popcount(mask);
            res.rebuild_cache();
            SolveReport inner = solve_few_inhabitants(res, opts);
            if (inner.yes) {
                std::vector<Vertex> placed = std::move(s);
                for (Vertex v : inner.witness->placed) placed.push_back(out_u[v - res_mi]);
                rep.yes = true;
                rep.witness = Housing::of(std::move(placed));
                rep.stats["guesses"] = static_cast<double>(guesses);
                rep.elapsed = sw.lap();
                for (Vertex h : touched) dec[h] = 0;
                return rep;
            }
        }
        for (Vertex h : touched) dec[h] = 0;
        touched.clear();
    }
    rep.stats["guesses"] = static_cast<double>(guesses);
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport solve_fes(const Instance& inst, const SolveOptions& opts) {
    Stopwatch sw;
    const int n = inst.topology.vertex_count();
    Instance b0 = bipartize(inst);

    // Breadth-first spanning forest from the lowest-index vertex of each
    // component; the leftovers form the feedback edge set.
    std::vector<Vertex> parent(n, -2);
    for (Vertex s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<Vertex> queue{s};
        size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            for (Vertex w : b0.topology.neighbors(v))
                if (parent[w] == -2) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
    }
    std::vector<std::pair<Vertex, Vertex>> feedback;
    for (auto [u, v] : b0.topology.edges())
        if (parent[u] != v && parent[v] != u) feedback.emplace_back(u, v);
    std::vector<Vertex> f_u;
    for (auto [u, v] : feedback) f_u.push_back(b0.is_occupied(u) ? v : u);
    std::sort(f_u.begin(), f_u.end());
    f_u.erase(std::unique(f_u.begin(), f_u.end()), f_u.end());
    if (f_u.size() > 63) fail(Errc::budget_exceeded, "feedback edge set too large");

    const int r = inst.refugees;
    SolveReport rep = base_report("fes", false);
    rep.stats["fes"] = static_cast<double>(feedback.size());
    std::uint64_t guesses = 0;
    std::vector<int> dec(n, 0);
    for (std::uint64_t mask = 0; mask < (1ull << f_u.size()); ++mask) {
        if (std::popcount(mask) > r) continue;
        if (++guesses > opts.guess_cap) fail(Errc::budget_exceeded, "fes guess cap hit");

        std::vector<Vertex> s;
        for (size_t i = 0; i < f_u.size(); ++i)
            if (mask >> i & 1) s.push_back(f_u[i]);

        Instance c = inst;
        ReductionTrace trace = ReductionTrace::identity(n);
        detail::bipartize_in_place(c, trace);
        ReductionStep step;
        step.rule = "fes-guess";
        bool ok = true;
        std::vector<Vertex> touched;
        for (Vertex v : s)
            for (Vertex h : c.topology.neighbors(v)) {
                if (dec[h]++ == 0) touched.push_back(h);
            }
        for (Vertex h : touched) {
            if (c.bound[h] < dec[h]) {
                ok = false;
                break;
            }
            c.bound[h] -= dec[h];
            step.bound_changes.emplace_back(h, c.bound[h]);
        }
        for (Vertex h : touched) dec[h] = 0;
        if (!ok) continue;

        trace.steps.push_back(std::move(step));
        trace.forced_placements = s;
        trace.refugee_delta = std::popcount(mask);
        c.refugees = r - trace.refugee_delta;
        detail::remove_vertices_in_place(c, trace, "fes-remove", f_u);
        bool infeasible = false;
        detail::remove_intolerant_in_place(c, trace, infeasible);
        if (infeasible) continue;

        ForestResult fr = forest_max(c);
        if (fr.max_housable >= c.refugees) {
            std::vector<Vertex> reduced(fr.witness.begin(), fr.witness.begin() + c.refugees);
            rep.yes = true;
            rep.witness = lift_solution(trace, Housing{std::move(reduced)});
            break;
        }
    }
    rep.stats["guesses"] = static_cast<double>(guesses);
    rep.elapsed = sw.lap();
    return rep;
}

}  // namespace arhub
