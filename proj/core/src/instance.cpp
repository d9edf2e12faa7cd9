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

#include "arhub/instance.hpp"

#include <algorithm>
#include <string>

#include "arhub/error.hpp"

namespace arhub {

Housing Housing::of(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Housing{std::move(vs)};
}

bool Housing::contains(Vertex v) const {
    return std::binary_search(placed.begin(), placed.end(), v);
}

Instance Instance::make(Graph g, const std::vector<std::pair<Vertex, int>>& inhabitants,
                        int refugees, std::optional<int> relax_budget, bool clamp_bounds) {
    const int n = g.vertex_count();
    if (refugees < 0) fail(Errc::invalid_params, "negative refugee count");
    if (relax_budget && *relax_budget < 0) fail(Errc::invalid_params, "negative relaxation budget");

    Instance inst;
    inst.bound.assign(n, kEmptyVertex);
    for (auto [v, b] : inhabitants) {
        if (v < 0 || v >= n)
            fail(Errc::malformed_graph, "inhabitant vertex out of range: " + std::to_string(v));
        if (inst.bound[v] != kEmptyVertex)
            fail(Errc::duplicate_occupancy, "two inhabitants on vertex " + std::to_string(v));
        if (b < 0) fail(Errc::invalid_params, "negative upper bound at vertex " + std::to_string(v));
        int deg = g.degree(v);
        if (b > deg) {
            if (!clamp_bounds)
                fail(Errc::upper_bound_exceeds_degree,
                     "ub " + std::to_string(b) + " > deg " + std::to_string(deg) + " at vertex " +
                         std::to_string(v));
            b = deg;
        }
        inst.bound[v] = b;
    }
    inst.topology = std::move(g);
    inst.refugees = refugees;
    inst.relax_budget = relax_budget;
    inst.rebuild_cache();
    if (n < inst.inhabitant_count() + refugees)
        fail(Errc::too_few_vertices, "need " + std::to_string(inst.inhabitant_count() + refugees) +
                                         " vertices, have " + std::to_string(n));
    return inst;
}

void Instance::rebuild_cache() {
    occupied.clear();
    empty.clear();
    for (Vertex v = 0; v < static_cast<int>(bound.size()); ++v)
        (is_occupied(v) ? occupied : empty).push_back(v);
}

void validate_instance(const Instance& inst) {
    const int n = inst.topology.vertex_count();
    if (static_cast<int>(inst.bound.size()) != n)
        fail(Errc::malformed_graph, "bound array size does not match vertex count");
    if (inst.refugees < 0) fail(Errc::invalid_params, "negative refugee count");
    if (inst.relax_budget && *inst.relax_budget < 0)
        fail(Errc::invalid_params, "negative relaxation budget");
    for (Vertex v = 0; v < n; ++v) {
        if (inst.bound[v] < Instance::kEmptyVertex)
            fail(Errc::invalid_params, "negative upper bound at vertex " + std::to_string(v));
        if (inst.bound[v] > inst.topology.degree(v))
            fail(Errc::upper_bound_exceeds_degree, "at vertex " + std::to_string(v));
    }
    if (n < inst.inhabitant_count() + inst.refugees)
        fail(Errc::too_few_vertices, "fewer vertices than inhabitants plus refugees");
    Instance copy = inst;
    copy.rebuild_cache();
    if (copy.occupied != inst.occupied || copy.empty != inst.empty)
        fail(Errc::invalid_params, "stale occupied/empty cache");
}

DegreeStats degree_stats(const Instance& inst) {
    DegreeStats s;
    s.max_degree = inst.topology.max_degree();
    s.is_forest = inst.topology.is_forest();
    s.complete_bipartite_between_parts = true;
    for (Vertex h : inst.occupied) {
        int empties_seen = 0;
        for (Vertex w : inst.topology.neighbors(h))
            if (!inst.is_occupied(w)) ++empties_seen;
        if (empties_seen != static_cast<int>(inst.empty.size())) {
            s.complete_bipartite_between_parts = false;
            break;
        }
    }
    return s;
}

namespace {

void check_housing_vertices(const Instance& inst, const Housing& housing) {
    for (Vertex v : housing.placed) {
        if (v < 0 || v >= inst.topology.vertex_count())
            fail(Errc::malformed_graph, "housing mentions unknown vertex " + std::to_string(v));
        if (inst.is_occupied(v))
            fail(Errc::placed_on_occupied, "vertex " + std::to_string(v) + " is occupied");
    }
}

}  // namespace

bool is_inhabitants_respecting(const Instance& inst, const Housing& housing) {
    check_housing_vertices(inst, housing);
    for (Vertex h : inst.occupied) {
        int count = 0;
        for (Vertex w : inst.topology.neighbors(h))
            if (housing.contains(w)) ++count;
        if (count > inst.ub(h)) return false;
    }
    return true;
}

ExcessReport excess(const Instance& inst, const Housing& housing) {
    check_housing_vertices(inst, housing);
    ExcessReport report;
    report.per_inhabitant.reserve(inst.occupied.size());
    for (Vertex h : inst.occupied) {
        int count = 0;
        for (Vertex w : inst.topology.neighbors(h))
            if (housing.contains(w)) ++count;
        int over = std::max(0, count - inst.ub(h));
        report.per_inhabitant.emplace_back(h, over);
        report.total += over;
    }
    return report;
}

}  // namespace arhub
