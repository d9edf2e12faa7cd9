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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arhub/graph.hpp"

namespace arhub {

// A housing is the set of vertices that receive a refugee.
// `placed` is always sorted ascending and duplicate free.
struct Housing {
    std::vector<Vertex> placed;

    static Housing of(std::vector<Vertex> vs);
    int size() const { return static_cast<int>(placed.size()); }
    bool contains(Vertex v) const;
    bool operator==(const Housing&) const = default;
};

// Housing problem instance. Inhabitants are identified by the vertex they
// occupy: bound[v] >= 0 means v hosts an inhabitant with that upper bound,
// bound[v] == kEmptyVertex means v is available for a refugee.
struct Instance {
    static constexpr int kEmptyVertex = -1;

    Graph topology;
    std::vector<int> bound;
    int refugees = 0;
    std::optional<int> relax_budget;

    // Cached sorted vertex lists, maintained by make()/rebuild_cache().
    std::vector<Vertex> occupied;
    std::vector<Vertex> empty;

    // Validating factory. `clamp_bounds` permits bounds above the vertex
    // degree and clamps them instead of rejecting.
    static Instance make(Graph g, const std::vector<std::pair<Vertex, int>>& inhabitants,
                         int refugees, std::optional<int> relax_budget = std::nullopt,
                         bool clamp_bounds = false);

    bool is_occupied(Vertex v) const { return bound[v] >= 0; }
    int ub(Vertex v) const { return bound[v]; }
    int inhabitant_count() const { return static_cast<int>(occupied.size()); }
    void rebuild_cache();

    bool operator==(const Instance&) const = default;
};

// Re-checks every instance invariant; throws on violation.
void validate_instance(const Instance& inst);

struct DegreeStats {
    int max_degree = 0;
    bool is_forest = false;
    // True when every occupied vertex is adjacent to every empty vertex.
    bool complete_bipartite_between_parts = false;
};

DegreeStats degree_stats(const Instance& inst);

// Throws placed_on_occupied / malformed_graph when the housing mentions an
// occupied or unknown vertex.
bool is_inhabitants_respecting(const Instance& inst, const Housing& housing);

struct ExcessReport {
    // One entry per inhabitant (by vertex, ascending): amount the housing
    // overshoots that inhabitant's bound.
    std::vector<std::pair<Vertex, int>> per_inhabitant;
    long long total = 0;
};

ExcessReport excess(const Instance& inst, const Housing& housing);

struct SolveReport {
    bool yes = false;
    std::optional<Housing> witness;
    std::string solver_name;
    std::chrono::duration<double, std::milli> elapsed{0};
    std::map<std::string, double> stats;
};

}  // namespace arhub
