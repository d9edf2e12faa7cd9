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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arhub/instance.hpp"
#include "arhub/oracle.hpp"
#include "arhub/treewidth.hpp"

namespace arhub {

// Cutoffs steering the automatic solver choice. The underlying algorithms
// are exact at any size; these only pick which one runs.
struct DispatchPolicy {
    int few_inhabitants_max = 12;
    int fes_max = 12;
    // Skip the dynamic program when the dense-table estimate exceeds this.
    double tw_cell_estimate_cap = 1e7;
    // Skip building a decomposition altogether beyond this many vertices.
    int tw_max_vertices = 2000;
};

// Optional side inputs for explicitly requested solvers.
struct SolverContext {
    std::optional<TreeDecomposition> decomposition;
    std::vector<Vertex> modulator;
    std::optional<int> q;  // below-guarantee distance
};

// Preprocesses, then picks the cheapest applicable solver: trivial verdicts
// from preprocessing, the structural solvers in increasing generality,
// the tree-decomposition program when its table estimate is affordable,
// and subset enumeration as the last resort. Budgeted instances route to
// the budget-aware solvers instead.
SolveReport solve_auto(const Instance& inst, const DispatchPolicy& policy = {},
                       const SolveOptions& opts = {});

// Runs one named solver directly on the instance, no preprocessing.
// Names: auto, r-subsets, empty-subsets, extra-houses, relaxed-brute,
// forest, maxdeg2, complete-bipartite, nearly-complete, modulator, fes,
// few-inhabitants, treewidth, treewidth-relaxed, below-guarantee.
// Budget-blind solvers refuse instances with a positive relax budget.
SolveReport solve_named(const Instance& inst, std::string_view name,
                        const SolverContext& ctx = {}, const SolveOptions& opts = {},
                        const DispatchPolicy& policy = {});

std::vector<std::string> solver_names();

// Product-form upper bound on the dynamic-programming table size:
// per node 2^(empty bag vertices) * prod(min(ub,R)+1) * (R+1), times
// (t+1) when the instance carries a relax budget.
double estimate_treewidth_cells(const Instance& inst, const NiceTreeDecomposition& ntd);

}  // namespace arhub
