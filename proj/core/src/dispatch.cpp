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

#include "arhub/dispatch.hpp"

#include <algorithm>
#include <cmath>

#include "arhub/error.hpp"
#include "arhub/preprocess.hpp"
#include "arhub/relaxed.hpp"
#include "arhub/structured.hpp"
#include "stopwatch.hpp"

namespace arhub {

double estimate_treewidth_cells(const Instance& inst, const NiceTreeDecomposition& ntd) {
    const double r = inst.refugees;
    double total = 0;
    for (const NiceNode& node : ntd.nodes) {
        double cells = r + 1;
        for (Vertex v : node.bag) {
            if (inst.is_occupied(v))
                cells *= std::min<double>(inst.ub(v), r) + 1;
            else
                cells *= 2;
        }
        total += cells;
    }
    if (inst.relax_budget) total *= *inst.relax_budget + 1;
    return total;
}

namespace {

SolveReport finish(SolveReport rep, const PipelineResult& pipe, Stopwatch sw) {
    if (rep.witness) rep.witness = lift_solution(pipe.trace, *rep.witness);
    rep.stats["reduced_vertices"] = pipe.instance.topology.vertex_count();
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport pipeline_verdict(const PipelineResult& pipe, Stopwatch sw) {
    SolveReport rep;
    rep.solver_name = "preprocess";
    rep.yes = *pipe.decided;
    if (pipe.witness) rep.witness = pipe.witness;  // already lifted
    rep.stats["reduced_vertices"] = pipe.instance.topology.vertex_count();
    rep.elapsed = sw.lap();
    return rep;
}

SolveReport auto_relaxed(const Instance& inst, const PipelineResult& pipe,
                         const DispatchPolicy& policy, const SolveOptions& opts,
                         Stopwatch sw) {
    const Instance& b = pipe.instance;
    const long long t = *inst.relax_budget;
    // Any R empties do once the budget covers the worst case.
    if (t >= guaranteed_bound(b)) {
        SolveReport rep;
        rep.solver_name = "guaranteed-bound";
        rep.yes = true;
        std::vector<Vertex> first(b.empty.begin(), b.empty.begin() + b.refugees);
        rep.witness = Housing::of(std::move(first));
        return finish(std::move(rep), pipe, sw);
    }
    if (b.topology.vertex_count() <= policy.tw_max_vertices) {
        NiceTreeDecomposition ntd =
            make_nice(decompose(b.topology, DecomposeMode::heuristic), b);
        if (estimate_treewidth_cells(b, ntd) <= policy.tw_cell_estimate_cap)
            return finish(solve_treewidth_relaxed(b, ntd, opts), pipe, sw);
    }
    return finish(solve_relaxed_brute(b, opts), pipe, sw);
}

}  // namespace

SolveReport solve_auto(const Instance& inst, const DispatchPolicy& policy,
                       const SolveOptions& opts) {
    Stopwatch sw;
    PipelineResult pipe = preprocess_pipeline(inst);
    if (pipe.decided) return pipeline_verdict(pipe, sw);
    const Instance& b = pipe.instance;

    if (inst.relax_budget.value_or(0) > 0) return auto_relaxed(inst, pipe, policy, opts, sw);

    const DegreeStats stats = degree_stats(b);
    if (stats.complete_bipartite_between_parts)
        return finish(solve_complete_bipartite(b, opts), pipe, sw);
    if (stats.is_forest) return finish(solve_forest(b, opts), pipe, sw);
    if (stats.max_degree <= 2) return finish(solve_maxdeg2(b, opts), pipe, sw);
    if (b.inhabitant_count() <= policy.few_inhabitants_max)
        return finish(solve_few_inhabitants(b, opts), pipe, sw);
    const int fes = b.topology.edge_count() -
                    (b.topology.vertex_count() - b.topology.component_count());
    if (fes <= policy.fes_max) return finish(solve_fes(b, opts), pipe, sw);
    if (b.topology.vertex_count() <= policy.tw_max_vertices) {
        NiceTreeDecomposition ntd =
            make_nice(decompose(b.topology, DecomposeMode::heuristic), b);
        if (estimate_treewidth_cells(b, ntd) <= policy.tw_cell_estimate_cap)
            return finish(solve_treewidth(b, ntd, opts), pipe, sw);
    }
    return finish(solve_by_r_subsets(b, opts), pipe, sw);
}

std::vector<std::string> solver_names() {
    return {"auto",          "r-subsets",        "empty-subsets",     "extra-houses",
            "relaxed-brute", "forest",           "maxdeg2",           "complete-bipartite",
            "nearly-complete", "modulator",      "fes",               "few-inhabitants",
            "treewidth",     "treewidth-relaxed", "below-guarantee"};
}

SolveReport solve_named(const Instance& inst, std::string_view name, const SolverContext& ctx,
                        const SolveOptions& opts, const DispatchPolicy& policy) {
    const bool budgeted = inst.relax_budget.value_or(0) > 0;
    const bool budget_aware = name == "auto" || name == "relaxed-brute" ||
                              name == "treewidth-relaxed" || name == "below-guarantee";
    if (budgeted && !budget_aware)
        fail(Errc::invalid_params,
             std::string(name) + " ignores the relax budget; use relaxed-brute, "
                                 "treewidth-relaxed, below-guarantee, or auto");

    auto nice = [&]() {
        if (ctx.decomposition) return make_nice(*ctx.decomposition, inst);
        Instance b = bipartize(inst);
        return make_nice(decompose(b.topology, DecomposeMode::heuristic), inst);
    };

    if (name == "auto") return solve_auto(inst, policy, opts);
    if (name == "r-subsets") return solve_by_r_subsets(inst, opts);
    if (name == "empty-subsets") return solve_by_empty_subsets(inst, opts);
    if (name == "extra-houses") return solve_by_extra_houses(inst, opts);
    if (name == "relaxed-brute") return solve_relaxed_brute(inst, opts);
    if (name == "forest") return solve_forest(inst, opts);
    if (name == "maxdeg2") return solve_maxdeg2(inst, opts);
    if (name == "complete-bipartite") return solve_complete_bipartite(inst, opts);
    if (name == "nearly-complete") return solve_nearly_complete_bipartite(inst, opts);
    if (name == "modulator") return solve_modulator(inst, ctx.modulator, opts);
    if (name == "fes") return solve_fes(inst, opts);
    if (name == "few-inhabitants") return solve_few_inhabitants(inst, opts);
    if (name == "treewidth") return solve_treewidth(inst, nice(), opts);
    if (name == "treewidth-relaxed") return solve_treewidth_relaxed(inst, nice(), opts);
    if (name == "below-guarantee") {
        if (!ctx.q) fail(Errc::invalid_params, "below-guarantee needs q");
        return solve_below_guarantee(inst, *ctx.q, opts);
    }
    fail(Errc::invalid_params, "unknown solver \"" + std::string(name) + '"');
}

}  // namespace arhub
