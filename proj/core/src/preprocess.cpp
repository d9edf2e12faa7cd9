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

#include "arhub/preprocess.hpp"

#include <algorithm>

#include "arhub/error.hpp"

namespace arhub {

ReductionTrace ReductionTrace::identity(int n) {
    ReductionTrace t;
    t.to_original.resize(n);
    for (int i = 0; i < n; ++i) t.to_original[i] = i;
    return t;
}

Housing lift_solution(const ReductionTrace& trace, const Housing& reduced) {
    std::vector<Vertex> placed;
    placed.reserve(reduced.placed.size() + trace.forced_placements.size());
    for (Vertex v : reduced.placed) placed.push_back(trace.to_original[v]);
    placed.insert(placed.end(), trace.forced_placements.begin(), trace.forced_placements.end());
    Housing lifted = Housing::of(std::move(placed));
    if (lifted.size() != reduced.size() + static_cast<int>(trace.forced_placements.size()))
        fail(Errc::invalid_params, "forced placements overlap the lifted housing");
    return lifted;
}

namespace detail {

namespace {

// Clamps bounds that now exceed the vertex degree, recording the new values
// in `step` under original coordinates.
void clamp_bounds(Instance& inst, const ReductionTrace& trace, ReductionStep& step) {
    for (Vertex v = 0; v < inst.topology.vertex_count(); ++v) {
        if (!inst.is_occupied(v)) continue;
        int deg = inst.topology.degree(v);
        if (inst.bound[v] > deg) {
            inst.bound[v] = deg;
            step.bound_changes.emplace_back(trace.to_original[v], deg);
        }
    }
}

}  // namespace

void remove_vertices_in_place(Instance& inst, ReductionTrace& trace, std::string rule,
                              std::vector<Vertex> doomed) {
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());

    ReductionStep step;
    step.rule = std::move(rule);
    for (Vertex v : doomed) {
        step.removed_vertices.push_back(trace.to_original[v]);
        if (inst.is_occupied(v)) step.removed_inhabitants.push_back(trace.to_original[v]);
    }

    const int n = inst.topology.vertex_count();
    std::vector<Vertex> new_id(n, -1);
    std::vector<Vertex> survivors;
    survivors.reserve(n - doomed.size());
    for (Vertex v = 0, d = 0; v < n; ++v) {
        if (d < static_cast<int>(doomed.size()) && doomed[d] == v) {
            ++d;
            continue;
        }
        new_id[v] = static_cast<Vertex>(survivors.size());
        survivors.push_back(v);
    }

    std::vector<std::vector<Vertex>> adj(survivors.size());
    std::vector<int> bound(survivors.size());
    std::vector<Vertex> to_original(survivors.size());
    for (size_t i = 0; i < survivors.size(); ++i) {
        Vertex old = survivors[i];
        for (Vertex w : inst.topology.neighbors(old))
            if (new_id[w] != -1) adj[i].push_back(new_id[w]);
        bound[i] = inst.bound[old];
        to_original[i] = trace.to_original[old];
    }

    inst.topology = Graph::from_adjacency(std::move(adj));
    inst.bound = std::move(bound);
    inst.rebuild_cache();
    trace.to_original = std::move(to_original);

    clamp_bounds(inst, trace, step);
    trace.steps.push_back(std::move(step));
}

void bipartize_in_place(Instance& inst, ReductionTrace& trace) {
    ReductionStep step;
    step.rule = "bipartize";
    const int n = inst.topology.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : inst.topology.neighbors(u)) {
            if (inst.is_occupied(u) == inst.is_occupied(v)) {
                if (u < v)
                    step.removed_edges.emplace_back(trace.to_original[u], trace.to_original[v]);
            } else {
                adj[u].push_back(v);
            }
        }
    }
    if (step.removed_edges.empty()) return;
    inst.topology = Graph::from_adjacency(std::move(adj));
    clamp_bounds(inst, trace, step);
    trace.steps.push_back(std::move(step));
}

bool remove_intolerant_in_place(Instance& inst, ReductionTrace& trace, bool& infeasible) {
    bool changed = false;
    // All current zero-bound inhabitants go in one batch per round. Later
    // rounds only see inhabitants whose bound was clamped to zero, and a
    // clamp reaches zero only once the vertex has no neighbours left, so
    // the loop settles after very few rounds regardless of instance size.
    for (;;) {
        std::vector<Vertex> doomed;
        for (Vertex h : inst.occupied)
            if (inst.ub(h) == 0) {
                doomed.push_back(h);
                for (Vertex w : inst.topology.neighbors(h))
                    if (!inst.is_occupied(w)) doomed.push_back(w);
            }
        if (doomed.empty()) break;
        remove_vertices_in_place(inst, trace, "remove-intolerant", std::move(doomed));
        changed = true;
    }
    infeasible = static_cast<int>(inst.empty.size()) < inst.refugees;
    return changed;
}

bool remove_saturated_in_place(Instance& inst, ReductionTrace& trace) {
    bool changed = false;
    // Bounds never grow and the refugee count is fixed, so no new saturated
    // inhabitants appear after the first batch; the loop is a safety net.
    for (;;) {
        std::vector<Vertex> doomed;
        for (Vertex h : inst.occupied)
            if (inst.ub(h) >= inst.refugees) doomed.push_back(h);
        if (doomed.empty()) break;
        remove_vertices_in_place(inst, trace, "remove-saturated", std::move(doomed));
        changed = true;
    }
    return changed;
}

}  // namespace detail

Instance bipartize(const Instance& inst) {
    Instance out = inst;
    ReductionTrace trace = ReductionTrace::identity(inst.topology.vertex_count());
    detail::bipartize_in_place(out, trace);
    return out;
}

Reduced remove_intolerant(const Instance& inst) {
    Reduced r{inst, ReductionTrace::identity(inst.topology.vertex_count()), false};
    detail::remove_intolerant_in_place(r.instance, r.trace, r.infeasible);
    return r;
}

Reduced remove_saturated(const Instance& inst) {
    Reduced r{inst, ReductionTrace::identity(inst.topology.vertex_count()), false};
    detail::remove_saturated_in_place(r.instance, r.trace);
    return r;
}

std::optional<Housing> trivial_yes_check(const Instance& inst) {
    if (static_cast<int>(inst.empty.size()) < inst.refugees) return std::nullopt;
    for (Vertex h : inst.occupied)
        if (inst.ub(h) < inst.refugees) return std::nullopt;
    std::vector<Vertex> placed(inst.empty.begin(), inst.empty.begin() + inst.refugees);
    return Housing{std::move(placed)};
}

PipelineResult preprocess_pipeline(const Instance& inst) {
    PipelineResult res;
    res.instance = inst;
    res.trace = ReductionTrace::identity(inst.topology.vertex_count());
    const bool exact = !inst.relax_budget || *inst.relax_budget == 0;

    detail::bipartize_in_place(res.instance, res.trace);
    bool infeasible = false;
    for (;;) {
        bool changed = detail::remove_saturated_in_place(res.instance, res.trace);
        if (exact)
            changed |= detail::remove_intolerant_in_place(res.instance, res.trace, infeasible);
        if (!changed) break;
    }
    if (static_cast<int>(res.instance.empty.size()) < res.instance.refugees) {
        res.decided = false;
        return res;
    }
    if (auto trivially = trivial_yes_check(res.instance)) {
        res.decided = true;
        res.witness = lift_solution(res.trace, *trivially);
    }
    return res;
}

}  // namespace arhub
