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

#include <functional>

#include "arhub/error.hpp"
#include "arhub/instance.hpp"
#include "test_support.hpp"

using namespace arhub;
using arhub_test::fig1_instance;
using arhub_test::fig2_instance;
using arhub_test::throws_with;

TEST_SUITE("instance") {

TEST_CASE("graph construction validates input") {
    CHECK(throws_with(Errc::malformed_graph,
                      [] { Graph::from_edges(3, {{0, 3}}); }));
    CHECK(throws_with(Errc::malformed_graph,
                      [] { Graph::from_edges(3, {{1, 1}}); }));
    CHECK(throws_with(Errc::malformed_graph,
                      [] { Graph::from_edges(3, {{0, 1}, {1, 0}}); }));

    Graph g = Graph::from_edges(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.is_forest());
    CHECK(g.component_count() == 1);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("component labels are numbered by lowest vertex") {
    Graph g = Graph::from_edges(5, {{1, 3}, {2, 4}});
    const auto labels = g.component_labels();
    CHECK(labels == std::vector<int>{0, 1, 2, 1, 2});
    CHECK(g.component_count() == 3);
}

TEST_CASE("instance factory enforces the model invariants") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(throws_with(Errc::duplicate_occupancy, [&] {
        Instance::make(g, {{0, 1}, {0, 0}}, 1);
    }));
    CHECK(throws_with(Errc::upper_bound_exceeds_degree, [&] {
        Instance::make(g, {{0, 2}}, 1);
    }));
    CHECK(throws_with(Errc::too_few_vertices, [&] {
        Instance::make(g, {{0, 1}, {1, 2}}, 2);
    }));
    CHECK(throws_with(Errc::invalid_params, [&] { Instance::make(g, {}, -1); }));
    CHECK(throws_with(Errc::invalid_params, [&] { Instance::make(g, {{0, 1}}, 1, -2); }));
    CHECK(throws_with(Errc::malformed_graph, [&] { Instance::make(g, {{7, 0}}, 0); }));

    // clamping mode tolerates oversized bounds
    Instance clamped = Instance::make(g, {{0, 5}}, 1, std::nullopt, true);
    CHECK(clamped.ub(0) == 1);
}

TEST_CASE("occupied and empty caches partition the vertices") {
    Instance inst = fig1_instance();
    CHECK(inst.occupied == std::vector<Vertex>{0, 1, 2});
    CHECK(inst.empty == std::vector<Vertex>{3, 4, 5});
    CHECK(inst.inhabitant_count() == 3);
    CHECK(inst.is_occupied(1));
    CHECK(!inst.is_occupied(4));
    CHECK(inst.ub(1) == 2);

    validate_instance(inst);
    Instance broken = inst;
    broken.empty.pop_back();
    CHECK(throws_with(Errc::invalid_params, [&] { validate_instance(broken); }));
}

TEST_CASE("degree stats describe the running example") {
    Instance inst = fig1_instance();
    DegreeStats s = degree_stats(inst);
    // Inhabitant 1 and empty vertex 4 both have three neighbours, and no
    // vertex has more.
    CHECK(s.max_degree == 3);
    CHECK(!s.is_forest);
    CHECK(!s.complete_bipartite_between_parts);

    Instance cb = arhub_test::complete_bipartite_instance(2, 3, 1, 2);
    CHECK(degree_stats(cb).complete_bipartite_between_parts);
}

TEST_CASE("respecting check and excess on the running examples") {
    Instance f1 = fig1_instance();
    CHECK(is_inhabitants_respecting(f1, Housing::of({3, 5})));
    CHECK(!is_inhabitants_respecting(f1, Housing::of({3, 4})));
    CHECK(!is_inhabitants_respecting(f1, Housing::of({4, 5})));

    Instance f2 = fig2_instance();
    ExcessReport bad = excess(f2, Housing::of({3, 4, 5}));
    CHECK(bad.total == 4);
    CHECK(bad.per_inhabitant ==
          std::vector<std::pair<Vertex, int>>{{0, 1}, {1, 2}, {2, 1}});
    ExcessReport good = excess(f2, Housing::of({3, 5, 6}));
    CHECK(good.total == 2);

    CHECK(throws_with(Errc::placed_on_occupied,
                      [&] { is_inhabitants_respecting(f1, Housing::of({0, 3})); }));
    CHECK(throws_with(Errc::malformed_graph,
                      [&] { excess(f1, Housing::of({3, 9})); }));
}

TEST_CASE("housing helper sorts and deduplicates") {
    Housing h = Housing::of({5, 3, 5, 1});
    CHECK(h.placed == std::vector<Vertex>{1, 3, 5});
    CHECK(h.size() == 3);
    CHECK(h.contains(3));
    CHECK(!h.contains(4));
}

TEST_CASE("excess is zero exactly when respecting") {
    arhub_test::Rng rng(99);
    for (int round = 0; round < 100; ++round) {
        Graph g = arhub_test::random_graph(7, 0.4, rng);
        Instance inst = arhub_test::random_instance(g, rng);
        // any subset of empties, not just R-sized ones
        std::vector<Vertex> chosen;
        for (Vertex v : inst.empty)
            if (rng.flip(0.5)) chosen.push_back(v);
        Housing h = Housing::of(chosen);
        CHECK(is_inhabitants_respecting(inst, h) == (excess(inst, h).total == 0));
    }
}

}  // TEST_SUITE
