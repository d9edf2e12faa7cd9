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

#include <doctest.h>

#include <vector>

#include "arhub/generators.hpp"
#include "arhub/oracle.hpp"
#include "test_support.hpp"

using namespace arhub;
using namespace arhub_test;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("independent-set instances have the promised shape") {
    Graph h = triangle();
    Instance inst = reduce_independent_set(h, 1);
    CHECK(inst.topology.vertex_count() == 6);  // 3 originals + 3 edge guards
    CHECK(inst.inhabitant_count() == 3);
    CHECK(inst.refugees == 1);
    for (Vertex g : inst.occupied) {
        CHECK(inst.ub(g) == 1);
        CHECK(inst.topology.degree(g) == 2);
    }
    CHECK(solve_by_r_subsets(inst).yes);          // a single vertex is independent
    CHECK(!solve_by_r_subsets(reduce_independent_set(h, 2)).yes);
}

TEST_CASE("independent-set round-trip across all small graphs") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& edges : connected_graph_classes(n)) {
            Graph h = Graph::from_edges(n, edges);
            for (int k = 0; k <= n; ++k) {
                Instance inst = reduce_independent_set(h, k);
                CHECK(solve_by_r_subsets(inst).yes == has_independent_set(h, k));
            }
        }
    }
}

TEST_CASE("independent-set witnesses decode to independent sets") {
    Graph h = cycle_graph(5);
    Instance inst = reduce_independent_set(h, 2);
    SolveReport rep = solve_by_r_subsets(inst);
    REQUIRE(rep.yes);
    // housed vertices live in the original id range and are pairwise
    // non-adjacent in h
    for (Vertex v : rep.witness->placed) CHECK(v < 5);
    for (Vertex u : rep.witness->placed)
        for (Vertex v : rep.witness->placed)
            if (u != v) CHECK(!h.has_edge(u, v));
}

TEST_CASE("equitable colouring instances have the promised shape") {
    Graph h = cycle_graph(6);
    Instance inst = reduce_equitable_3col(h);
    CHECK(inst.topology.vertex_count() == 45);  // 18 copies + 18 + 3 + 6 guards
    CHECK(inst.inhabitant_count() == 27);
    CHECK(inst.empty.size() == 18);
    CHECK(inst.refugees == 6);
    // size guards allow one third of the vertices each
    for (int i = 0; i < 3; ++i) CHECK(inst.ub(36 + i) == 2);
    // vertex guards force a unique colour per original vertex
    for (int j = 0; j < 6; ++j) CHECK(inst.ub(39 + j) == 1);

    CHECK(throws_with(Errc::not_divisible_by_3,
                      [&] { reduce_equitable_3col(cycle_graph(4)); }));
}

TEST_CASE("equitable colouring witnesses decode to valid colourings") {
    Graph h = cycle_graph(6);
    Instance inst = reduce_equitable_3col(h);
    SolveReport rep = solve_by_r_subsets(inst);
    REQUIRE(rep.yes);
    std::vector<int> colour(6, -1);
    std::vector<int> class_size(3, 0);
    for (Vertex v : rep.witness->placed) {
        REQUIRE(v < 18);  // only copy vertices are empty
        int copy = v / 6, original = v % 6;
        CHECK(colour[original] == -1);
        colour[original] = copy;
        ++class_size[copy];
    }
    CHECK(class_size == std::vector<int>{2, 2, 2});
    for (auto [u, v] : h.edges()) CHECK(colour[u] != colour[v]);
}

TEST_CASE("equitable colouring round-trip on all graphs with three and six vertices") {
    for (int n : {3, 6}) {
        for (const auto& edges : connected_graph_classes(n)) {
            Graph h = Graph::from_edges(n, edges);
            Instance inst = reduce_equitable_3col(h);
            CHECK(solve_by_r_subsets(inst).yes == has_equitable_3col(h));
        }
    }
}

TEST_CASE("relaxed hardness instances collapse to the exact reduction at t = 0") {
    Graph h = triangle();
    Instance exact = reduce_independent_set(h, 2);
    Instance relaxed = reduce_relaxed_hardness(h, 2, 0);
    CHECK(relaxed.topology == exact.topology);
    CHECK(relaxed.bound == exact.bound);
    CHECK(relaxed.refugees == exact.refugees);
    CHECK(relaxed.relax_budget == 0);
    CHECK(!exact.relax_budget.has_value());
}

TEST_CASE("relaxed hardness uses pendants to soak the budget") {
    Graph h = triangle();
    // k=1 with t=1: 3 originals, 3*2 edge guards, one pendant pair.
    Instance inst = reduce_relaxed_hardness(h, 1, 1);
    CHECK(inst.topology.vertex_count() == 3 + 6 + 2);
    CHECK(inst.refugees == 2);
    CHECK(inst.relax_budget == 1);
    SolveReport rep = solve_relaxed_brute(inst);
    CHECK(rep.yes);
    CHECK(excess(inst, *rep.witness).total == 1);

    // k=2 stays infeasible: the triangle has no independent pair, and the
    // budget is locked into the pendant.
    CHECK(!solve_relaxed_brute(reduce_relaxed_hardness(h, 2, 1)).yes);
}

TEST_CASE("relaxed hardness round-trip across budgets") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& edges : connected_graph_classes(n)) {
            Graph h = Graph::from_edges(n, edges);
            for (int k = 1; k <= n; ++k)
                for (int t = 0; t <= 2; ++t) {
                    Instance inst = reduce_relaxed_hardness(h, k, t);
                    CHECK(solve_relaxed_brute(inst).yes == has_independent_set(h, k));
                }
        }
    }
}

TEST_CASE("random generation is a pure function of its inputs") {
    RandomParams params;
    params.n = 14;
    for (RandomFamily family :
         {RandomFamily::tree, RandomFamily::cycle, RandomFamily::maxdeg2,
          RandomFamily::bipartite, RandomFamily::nearly_complete,
          RandomFamily::planted_modulator}) {
        GeneratedInstance a = generate_random(family, params, 77);
        GeneratedInstance b = generate_random(family, params, 77);
        CHECK(a.instance == b.instance);
        CHECK(a.modulator == b.modulator);
        GeneratedInstance c = generate_random(family, params, 78);
        CHECK(a.instance != c.instance);
    }
}

TEST_CASE("random families keep their structural promises") {
    Rng rng(401);
    for (int round = 0; round < 60; ++round) {
        RandomParams params;
        params.n = rng.in(4, 24);
        std::uint64_t seed = rng.gen();

        Instance tree = generate_random(RandomFamily::tree, params, seed).instance;
        validate_instance(tree);
        CHECK(tree.topology.is_forest());
        CHECK(tree.topology.component_count() == 1);

        Instance cyc = generate_random(RandomFamily::cycle, params, seed).instance;
        validate_instance(cyc);
        for (Vertex v = 0; v < cyc.topology.vertex_count(); ++v)
            CHECK(cyc.topology.degree(v) == 2);

        Instance deg2 = generate_random(RandomFamily::maxdeg2, params, seed).instance;
        validate_instance(deg2);
        CHECK(deg2.topology.max_degree() <= 2);

        Instance bip = generate_random(RandomFamily::bipartite, params, seed).instance;
        validate_instance(bip);
        for (auto [u, v] : bip.topology.edges())
            CHECK(bip.is_occupied(u) != bip.is_occupied(v));

        params.missing_edges = rng.in(0, 2);
        Instance nc = generate_random(RandomFamily::nearly_complete, params, seed).instance;
        validate_instance(nc);
        long long cross_possible =
            static_cast<long long>(nc.inhabitant_count()) * nc.empty.size();
        CHECK(nc.topology.edge_count() == cross_possible - params.missing_edges);

        params.modulator_size = rng.in(1, 3);
        GeneratedInstance pm = generate_random(RandomFamily::planted_modulator, params, seed);
        validate_instance(pm.instance);
        REQUIRE(pm.modulator.size() == static_cast<size_t>(params.modulator_size));
        for (int i = 0; i < params.modulator_size; ++i) CHECK(pm.modulator[i] == i);
        // outside the modulator, occupied vertices see every outside empty
        const Instance& inst = pm.instance;
        std::vector<Vertex> out_u;
        for (Vertex v = params.modulator_size; v < inst.topology.vertex_count(); ++v)
            if (!inst.is_occupied(v)) out_u.push_back(v);
        for (Vertex v = params.modulator_size; v < inst.topology.vertex_count(); ++v) {
            if (!inst.is_occupied(v)) continue;
            for (Vertex w : out_u) CHECK(inst.topology.has_edge(v, w));
        }
    }
}

TEST_CASE("random generation honours an explicit refugee count") {
    RandomParams params;
    params.n = 10;
    params.refugees = 3;
    Instance inst = generate_random(RandomFamily::tree, params, 5).instance;
    CHECK(inst.refugees == 3);

    params.refugees = 100;  // more than any 10-vertex draw can hold
    CHECK(throws_with(Errc::invalid_params, [&] {
        generate_random(RandomFamily::tree, params, 5);
    }));
}

TEST_CASE("random generation validates its parameters") {
    RandomParams params;
    params.n = 0;
    CHECK(throws_with(Errc::invalid_params, [&] {
        generate_random(RandomFamily::tree, params, 1);
    }));
    params.n = 2;
    CHECK(throws_with(Errc::invalid_params, [&] {
        generate_random(RandomFamily::cycle, params, 1);
    }));
    params.n = 6;
    params.missing_edges = 100;
    CHECK(throws_with(Errc::invalid_params, [&] {
        generate_random(RandomFamily::nearly_complete, params, 1);
    }));
    params.missing_edges = 0;
    params.modulator_size = 7;
    CHECK(throws_with(Errc::invalid_params, [&] {
        generate_random(RandomFamily::planted_modulator, params, 1);
    }));
}

}  // TEST_SUITE
