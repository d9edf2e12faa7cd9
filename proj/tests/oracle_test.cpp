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

#include "arhub/oracle.hpp"
#include "test_support.hpp"

using namespace arhub;
using namespace arhub_test;

namespace {

using OracleFn = SolveReport (*)(const Instance&, const SolveOptions&);

constexpr OracleFn kPlainOracles[] = {solve_by_r_subsets, solve_by_empty_subsets,
                                      solve_by_extra_houses};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("running example is solvable by every route") {
    Instance f1 = fig1_instance();
    for (OracleFn solve : kPlainOracles) {
        SolveReport rep = solve(f1, {});
        CHECK(rep.yes);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->size() == 2);
        CHECK(is_inhabitants_respecting(f1, *rep.witness));
    }
    // lexicographic order: {x, y} violates h1, {x, z} is the first hit
    SolveReport rep = solve_by_r_subsets(f1, {});
    CHECK(rep.witness == Housing::of({3, 5}));
    CHECK(rep.stats.at("subsets_enumerated") == 2);
}

TEST_CASE("known infeasible instances are refused by every route") {
    for (Instance inst : {star_instance(4), complete_bipartite_instance(2, 3, 1, 2)}) {
        for (OracleFn solve : kPlainOracles) {
            SolveReport rep = solve(inst, {});
            CHECK(!rep.yes);
            CHECK(!rep.witness.has_value());
        }
        CHECK(!solve_relaxed_brute(inst, {}).yes);
    }
}

TEST_CASE("relaxed oracle on the budgeted example") {
    Instance f2 = fig2_instance();
    SolveReport rep = solve_relaxed_brute(f2, {});
    CHECK(rep.yes);
    CHECK(rep.witness == Housing::of({3, 5, 6}));
    CHECK(rep.stats.at("excess") == 2);
    CHECK(excess(f2, *rep.witness).total == 2);

    // Tighter budget flips the verdict and reports how close it got.
    Instance tight = f2;
    tight.relax_budget = 1;
    SolveReport no = solve_relaxed_brute(tight, {});
    CHECK(!no.yes);
    CHECK(no.stats.at("min_excess") == 2);
    CHECK(min_excess_brute(tight) == 2);
}

TEST_CASE("relaxed oracle without a budget solves the exact problem") {
    Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        Graph g = random_graph(rng.in(1, 7), 0.5, rng);
        Instance inst = random_instance(g, rng);
        CHECK(solve_relaxed_brute(inst, {}).yes == exists_housing_brute(inst));
    }
}

TEST_CASE("all oracle routes agree with the reference scan") {
    Rng rng(42);
    for (int round = 0; round < 300; ++round) {
        Graph g = random_graph(rng.in(1, 8), 0.45, rng);
        Instance inst = random_instance(g, rng);
        bool expected = exists_housing_brute(inst);
        for (OracleFn solve : kPlainOracles) {
            SolveReport rep = solve(inst, {});
            CHECK(rep.yes == expected);
            if (rep.yes) {
                REQUIRE(rep.witness.has_value());
                CHECK(rep.witness->size() == inst.refugees);
                CHECK(is_inhabitants_respecting(inst, *rep.witness));
            }
        }
    }
}

TEST_CASE("relaxed oracle minimum excess matches the reference scan") {
    Rng rng(43);
    int no_cases = 0;
    for (int round = 0; round < 200; ++round) {
        Graph g = random_graph(rng.in(2, 7), 0.5, rng);
        Instance inst = random_instance(g, rng);
        if (inst.refugees == 0) continue;
        inst.relax_budget = rng.in(0, 2);
        SolveReport rep = solve_relaxed_brute(inst, {});
        long long best = min_excess_brute(inst);
        if (rep.yes) {
            CHECK(best <= *inst.relax_budget);
            CHECK(excess(inst, *rep.witness).total <= *inst.relax_budget);
        } else {
            ++no_cases;
            if (best == -1)
                CHECK(rep.stats.count("min_excess") == 0);
            else
                CHECK(rep.stats.at("min_excess") == static_cast<double>(best));
        }
    }
    CHECK(no_cases > 20);
}

TEST_CASE("zero refugees is always satisfiable") {
    Instance inst = star_instance(3);
    inst.refugees = 0;
    for (OracleFn solve : kPlainOracles) {
        SolveReport rep = solve(inst, {});
        CHECK(rep.yes);
        CHECK(rep.witness == Housing{});
    }
    CHECK(solve_by_r_subsets(inst, {}).stats.at("subsets_enumerated") == 1);
    CHECK(solve_relaxed_brute(inst, {}).yes);
}

TEST_CASE("work caps abort instead of lying") {
    Instance big = complete_bipartite_instance(2, 20, 1, 10);
    SolveOptions tiny;
    tiny.subset_cap = 10;
    tiny.empty_subset_cap = 10;
    CHECK(throws_with(Errc::budget_exceeded, [&] { solve_by_r_subsets(big, tiny); }));
    CHECK(throws_with(Errc::budget_exceeded, [&] { solve_by_empty_subsets(big, tiny); }));
    CHECK(throws_with(Errc::budget_exceeded, [&] { solve_by_extra_houses(big, tiny); }));
    CHECK(throws_with(Errc::budget_exceeded, [&] { solve_relaxed_brute(big, tiny); }));
}

TEST_CASE("reports carry solver names and timings") {
    SolveReport rep = solve_by_r_subsets(fig1_instance(), {});
    CHECK(rep.solver_name == "r-subsets");
    CHECK(rep.elapsed.count() >= 0.0);
    CHECK(solve_by_empty_subsets(fig1_instance(), {}).solver_name == "empty-subsets");
    CHECK(solve_by_extra_houses(fig1_instance(), {}).solver_name == "extra-houses");
    CHECK(solve_relaxed_brute(fig2_instance(), {}).solver_name == "relaxed-brute");
}

}  // TEST_SUITE
