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
#include <utility>
#include <vector>

#include "arhub/instance.hpp"

namespace arhub {

// One rule application. All vertex ids are in the coordinates of the
// original instance the trace was started on, so a trace can be replayed.
// bound_changes store the new value after the step (including clamping of
// bounds that exceeded a shrunken degree).
struct ReductionStep {
    std::string rule;
    std::vector<Vertex> removed_vertices;
    std::vector<Vertex> removed_inhabitants;
    std::vector<std::pair<Vertex, Vertex>> removed_edges;
    std::vector<std::pair<Vertex, int>> bound_changes;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    // Maps a vertex of the reduced instance back to the original instance.
    std::vector<Vertex> to_original;
    // Vertices of the original instance that any reduced-instance housing
    // must additionally contain.
    std::vector<Vertex> forced_placements;
    // How many refugees the forced placements already account for.
    int refugee_delta = 0;

    static ReductionTrace identity(int n);
};

// Translates a housing of the reduced instance back to the original one.
Housing lift_solution(const ReductionTrace& trace, const Housing& reduced);

// Drops every edge joining two occupied or two empty vertices. Bounds above
// the shrunken degree are clamped.
Instance bipartize(const Instance& inst);

struct Reduced {
    Instance instance;
    ReductionTrace trace;
    // Set when the rule proved the instance has no solution.
    bool infeasible = false;
};

// Deletes every inhabitant with bound 0 together with its empty neighbours,
// to a fixpoint. Infeasible when fewer empty vertices than refugees remain.
Reduced remove_intolerant(const Instance& inst);

// Deletes every inhabitant whose bound is at least the refugee count.
Reduced remove_saturated(const Instance& inst);

// First `refugees` empty vertices when no inhabitant can ever be violated
// (no inhabitants, or minimum bound >= refugees).
std::optional<Housing> trivial_yes_check(const Instance& inst);

struct PipelineResult {
    Instance instance;
    ReductionTrace trace;
    // Set when preprocessing alone settles the instance.
    std::optional<bool> decided;
    // Original-coordinate witness when decided yes.
    std::optional<Housing> witness;
};

// bipartize, then saturated/intolerant elimination to a fixpoint, then the
// trivial-yes check. For instances with a positive relaxation budget the
// intolerant rule is skipped: paying excess at a bound-0 inhabitant can be
// optimal there, so that rule is only sound for the exact problem.
PipelineResult preprocess_pipeline(const Instance& inst);

namespace detail {
// Removes `doomed` (current coordinates, any order) from the instance,
// renumbering densely and clamping bounds; appends a step to the trace.
void remove_vertices_in_place(Instance& inst, ReductionTrace& trace, std::string rule,
                              std::vector<Vertex> doomed);
void bipartize_in_place(Instance& inst, ReductionTrace& trace);
// Returns true when it removed anything; sets infeasible as documented.
bool remove_intolerant_in_place(Instance& inst, ReductionTrace& trace, bool& infeasible);
bool remove_saturated_in_place(Instance& inst, ReductionTrace& trace);
}  // namespace detail

}  // namespace arhub
