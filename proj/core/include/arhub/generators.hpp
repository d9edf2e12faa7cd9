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

#include <cstdint>
#include <optional>
#include <vector>

#include "arhub/instance.hpp"

namespace arhub {

// Hard-instance factory from Independent Set: the vertices of `h` stay
// empty, every edge gains a guard inhabitant with ub = 1 adjacent to its
// endpoints, and R = k. The result is feasible iff `h` has an independent
// set of size k.
Instance reduce_independent_set(const Graph& h, int k);

// Hard-instance factory from Equitable 3-Colouring. Three subdivided copies
// of `h`, one size guard per copy (ub = |V|/3), and one guard per original
// vertex linking its three copies (ub = 1); R = |V|. Feasible iff `h` has an
// equitable proper 3-colouring. Requires |V| divisible by 3.
//
// Copy layout, with n = |V(h)| and m = |E(h)| (edges in lexicographic
// order): copy vertex j of copy i sits at i*n + j; the guard of edge e in
// copy i sits at 3n + i*m + e; size guard i at 3n + 3m + i; the guard of
// vertex j at 3n + 3m + 3 + j.
Instance reduce_equitable_3col(const Graph& h);

// Budgeted variant of the Independent Set factory: each edge gains t+1
// parallel guards, plus t pendant gadgets (an empty vertex whose only
// neighbour is a ub = 0 inhabitant); R = k + t and relax_budget = t.
// Feasible iff `h` has an independent set of size k: the pendants soak up
// the budget, so no edge may ever join two housed endpoints.
Instance reduce_relaxed_hardness(const Graph& h, int k, int t);

enum class RandomFamily {
    tree,
    cycle,
    maxdeg2,
    bipartite,          // random occupied/empty bipartite graph
    nearly_complete,    // complete bipartite minus `missing_edges` pairs
    planted_modulator,  // complete bipartite outside a planted modulator
};

struct RandomParams {
    int n = 16;
    double occupied_fraction = 0.35;
    // Probability that an inhabitant gets ub = 0 instead of a uniform
    // draw from [0, deg].
    double zero_bound_prob = 0.1;
    double edge_prob = 0.5;
    int missing_edges = 2;   // nearly_complete only
    int modulator_size = 3;  // planted_modulator only
    // Defaults to a uniform draw from [0, |V_U|].
    std::optional<int> refugees;
};

struct GeneratedInstance {
    Instance instance;
    // Planted modulator vertices; empty for other families.
    std::vector<Vertex> modulator;
};

// Deterministic function of (family, params, seed).
GeneratedInstance generate_random(RandomFamily family, const RandomParams& params,
                                  std::uint64_t seed);

}  // namespace arhub
