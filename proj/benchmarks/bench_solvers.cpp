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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "arhub/dispatch.hpp"
#include "arhub/generators.hpp"
#include "arhub/oracle.hpp"
#include "arhub/preprocess.hpp"
#include "arhub/structured.hpp"
#include "arhub/treewidth.hpp"

namespace {

using namespace arhub;

Instance tree_instance(int n, std::uint64_t seed) {
    RandomParams params;
    params.n = n;
    return generate_random(RandomFamily::tree, params, seed).instance;
}

void bm_forest(benchmark::State& state) {
    const Instance inst = tree_instance(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(solve_forest(inst).yes);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_forest)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void bm_preprocess(benchmark::State& state) {
    const Instance inst = tree_instance(static_cast<int>(state.range(0)), 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(preprocess_pipeline(inst).instance.topology.vertex_count());
}
BENCHMARK(bm_preprocess)->RangeMultiplier(10)->Range(1000, 100000);

// Same instance for both contenders; refugees pinned low enough that the
// subset oracle finishes (its cost is C(empties, refugees)).
Instance contrast_instance() {
    RandomParams params;
    params.n = 64;
    params.refugees = 4;
    return generate_random(RandomFamily::tree, params, 13).instance;
}

void bm_oracle_vs_forest_oracle(benchmark::State& state) {
    const Instance inst = contrast_instance();
    for (auto _ : state) benchmark::DoNotOptimize(solve_by_r_subsets(inst).yes);
}
BENCHMARK(bm_oracle_vs_forest_oracle);

void bm_oracle_vs_forest_forest(benchmark::State& state) {
    const Instance inst = contrast_instance();
    for (auto _ : state) benchmark::DoNotOptimize(solve_forest(inst).yes);
}
BENCHMARK(bm_oracle_vs_forest_forest);

void bm_treewidth_fill(benchmark::State& state) {
    RandomParams params;
    params.n = static_cast<int>(state.range(0));
    const Instance inst =
        generate_random(RandomFamily::maxdeg2, params, 14).instance;
    const Instance b = bipartize(inst);
    const NiceTreeDecomposition ntd =
        make_nice(decompose(b.topology, DecomposeMode::heuristic), inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            TreewidthTables::fill(inst, ntd, 0).cell_count());
}
BENCHMARK(bm_treewidth_fill)->Range(16, 256);

void bm_auto_dispatch(benchmark::State& state) {
    RandomParams params;
    params.n = 48;
    const Instance inst =
        generate_random(RandomFamily::nearly_complete, params, 15).instance;
    for (auto _ : state) benchmark::DoNotOptimize(solve_auto(inst).yes);
}
BENCHMARK(bm_auto_dispatch);

}  // namespace

BENCHMARK_MAIN();
