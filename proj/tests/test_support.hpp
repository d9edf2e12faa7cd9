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

// Shared fixtures and independent reference implementations for the test
// suites. Everything here is deliberately naive: these are the ground
// truths the optimized code is measured against.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arhub/error.hpp"
#include "arhub/instance.hpp"

namespace arhub_test {

using arhub::Graph;
using arhub::Housing;
using arhub::Instance;
using arhub::Vertex;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t k) { return gen() % k; }
    int in(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    bool flip(double p) { return unit() < p; }
};

// The running example: three inhabitants (bounds 1, 2, 1) sharing three
// empty vertices x=3, y=4, z=5; R=2. Feasible, e.g. by {x, z}.
Instance fig1_instance();

// fig1 with all bounds lowered to 1, a fourth empty vertex w=6 adjacent to
// inhabitant 1, R=3, relax budget 2. Minimum excess is 2.
Instance fig2_instance();

// Star: occupied centre with bound 0, `leaves` empty leaves, R=1. No.
Instance star_instance(int leaves);

// Complete bipartite occupied x empty with unit bounds; R=2 on 2x3 is a no.
Instance complete_bipartite_instance(int occupied, int empty, int ub, int refugees);

// Uniform random instance over an arbitrary graph: each vertex occupied
// with probability `occ`, ub uniform in [0, deg] (unless forced 0), R
// uniform in [0, |V_U|].
Instance random_instance(const Graph& g, Rng& rng, double occ = 0.4,
                         double zero_prob = 0.15);

// Random tree/forest/sparse graph topologies.
Graph random_tree(int n, Rng& rng);
Graph random_graph(int n, double edge_prob, Rng& rng);

// Reference implementations (independent of the library's solvers).
// Scans all 2^|V_U| subsets; requires |V_U| <= 24.
int max_housable_brute(const Instance& inst);
bool exists_housing_brute(const Instance& inst);
long long min_excess_brute(const Instance& inst);  // -1 when R > |V_U|

bool has_independent_set(const Graph& g, int k);
bool has_equitable_3col(const Graph& g);

// One representative per isomorphism class of connected graphs on exactly
// n vertices (n <= 7), as edge lists.
std::vector<std::vector<std::pair<Vertex, Vertex>>> connected_graph_classes(int n);

// Runs a command line, captures stdout(+stderr), returns the exit code.
struct RunResult {
    int exit_code = -1;
    std::string output;
};
RunResult run_command(const std::string& command);

// True iff `fn` throws arhub::Error with exactly this code.
inline bool throws_with(arhub::Errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const arhub::Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace arhub_test
