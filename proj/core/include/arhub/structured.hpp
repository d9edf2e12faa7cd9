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
#include <vector>

#include "arhub/instance.hpp"
#include "arhub/oracle.hpp"

namespace arhub {

// Exact solvers for restricted instance classes. Each one bipartizes
// internally, so callers may pass raw instances; witnesses always refer to
// the caller's vertex ids. All of them solve the exact (budget-free)
// problem.

// Trees and forests. Reports the maximum housable refugee count in
// stats["max_housable"]. Throws not_a_forest when the bipartized topology
// still contains a cycle.
SolveReport solve_forest(const Instance& inst, const SolveOptions& opts = {});

// Paths and cycles: maximum degree two after bipartization (otherwise
// degree_too_high). Cycle components get a three-way case split on one
// bound-1 inhabitant; everything else is forest dynamic programming.
SolveReport solve_maxdeg2(const Instance& inst, const SolveOptions& opts = {});

// Every inhabitant adjacent to every empty vertex (otherwise
// not_complete_bipartite): feasible iff the smallest bound covers all
// refugees.
SolveReport solve_complete_bipartite(const Instance& inst, const SolveOptions& opts = {});

// Complete bipartite minus a few edges. Inhabitants adjacent to all empty
// vertices gate the answer; the rest reduces to few-inhabitants search.
SolveReport solve_nearly_complete_bipartite(const Instance& inst, const SolveOptions& opts = {});

// Caller-supplied modulator M such that removing M leaves a complete
// bipartite gap structure (otherwise invalid_modulator). Guesses the
// placement inside M and collapses the outside.
SolveReport solve_modulator(const Instance& inst, const std::vector<Vertex>& modulator,
                            const SolveOptions& opts = {});

// Feedback-edge-set solver: guesses the housed set among empty endpoints of
// non-tree edges, then runs forest dynamic programming on the remainder.
SolveReport solve_fes(const Instance& inst, const SolveOptions& opts = {});

// Branch and bound over neighbourhood types when few inhabitants exist
// (too_many_inhabitants above opts.few_inhabitants_limit).
SolveReport solve_few_inhabitants(const Instance& inst, const SolveOptions& opts = {});

// A neighbourhood type groups empty vertices with an identical set of
// adjacent inhabitants. Bit i of `mask` refers to the i-th smallest
// occupied vertex; `capacity` counts the empty vertices of that type.
struct NeighbourhoodType {
    std::uint64_t mask = 0;
    int capacity = 0;
    bool operator==(const NeighbourhoodType&) const = default;
};

// Types of the bipartized instance, sorted by mask.
std::vector<NeighbourhoodType> neighbourhood_types(const Instance& inst, int limit = 20);

}  // namespace arhub
