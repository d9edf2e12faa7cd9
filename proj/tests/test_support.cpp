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

#include "test_support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace arhub_test {

Instance fig1_instance() {
    Graph g = Graph::from_edges(
        6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}});
    return Instance::make(std::move(g), {{0, 1}, {1, 2}, {2, 1}}, 2);
}

Instance fig2_instance() {
    Graph g = Graph::from_edges(
        7, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {1, 6}});
    return Instance::make(std::move(g), {{0, 1}, {1, 1}, {2, 1}}, 3, 2);
}

Instance star_instance(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Instance::make(Graph::from_edges(leaves + 1, edges), {{0, 0}}, 1);
}

Instance complete_bipartite_instance(int occupied, int empty, int ub, int refugees) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < occupied; ++i)
        for (int j = 0; j < empty; ++j) edges.emplace_back(i, occupied + j);
    std::vector<std::pair<Vertex, int>> inhabitants;
    for (int i = 0; i < occupied; ++i) inhabitants.emplace_back(i, ub);
    return Instance::make(Graph::from_edges(occupied + empty, edges), inhabitants, refugees);
}

Instance random_instance(const Graph& g, Rng& rng, double occ, double zero_prob) {
    const int n = g.vertex_count();
    std::vector<std::pair<Vertex, int>> inhabitants;
    int empties = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!rng.flip(occ)) {
            ++empties;
            continue;
        }
        int ub = rng.flip(zero_prob) ? 0 : rng.in(0, g.degree(v));
        inhabitants.emplace_back(v, ub);
    }
    Graph copy = g;
    return Instance::make(std::move(copy), inhabitants, rng.in(0, empties));
}

Graph random_tree(int n, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
    return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.flip(edge_prob)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

// Iterates subsets of the empty vertices; reports the best respecting size
// and whether some R-subset respects all bounds.
template <typename Visit>
void scan_empty_subsets(const Instance& inst, Visit&& visit) {
    const auto& pool = inst.empty;
    const int m = static_cast<int>(pool.size());
    if (m > 24) throw std::runtime_error("brute scan limited to 24 empty vertices");
    const int n = inst.topology.vertex_count();
    std::vector<int> count(n);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::fill(count.begin(), count.end(), 0);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1)
                for (Vertex h : inst.topology.neighbors(pool[i])) ++count[h];
        long long excess = 0;
        for (Vertex h : inst.occupied) excess += std::max(0, count[h] - inst.ub(h));
        visit(std::popcount(mask), excess);
    }
}

}  // namespace

int max_housable_brute(const Instance& inst) {
    int best = 0;
    scan_empty_subsets(inst, [&](int size, long long excess) {
        if (excess == 0) best = std::max(best, size);
    });
    return best;
}

bool exists_housing_brute(const Instance& inst) {
    if (inst.refugees > static_cast<int>(inst.empty.size())) return false;
    bool found = false;
    scan_empty_subsets(inst, [&](int size, long long excess) {
        if (size == inst.refugees && excess == 0) found = true;
    });
    return found;
}

long long min_excess_brute(const Instance& inst) {
    if (inst.refugees > static_cast<int>(inst.empty.size())) return -1;
    long long best = -1;
    scan_empty_subsets(inst, [&](int size, long long excess) {
        if (size == inst.refugees && (best == -1 || excess < best)) best = excess;
    });
    return best;
}

bool has_independent_set(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (k > n) return false;
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((mask >> v & 1) && (adj[v] & mask)) independent = false;
        if (independent) return true;
    }
    return false;
}

bool has_equitable_3col(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 3 != 0) return false;
    std::vector<int> colour(n, 0);
    const long long total = static_cast<long long>(std::pow(3.0, n) + 0.5);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::array<int, 3> sizes{0, 0, 0};
        for (int v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(c % 3);
            c /= 3;
            ++sizes[colour[v]];
        }
        if (sizes[0] != n / 3 || sizes[1] != n / 3 || sizes[2] != n / 3) continue;
        bool proper = true;
        for (Vertex v = 0; v < n && proper; ++v)
            for (Vertex w : g.neighbors(v))
                if (w > v && colour[v] == colour[w]) {
                    proper = false;
                    break;
                }
        if (proper) return true;
    }
    return false;
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> connected_graph_classes(int n) {
    if (n < 1 || n > 7) throw std::runtime_error("graph enumeration limited to 1..7");
    // pair (i, j), i < j, mapped to a bit position
    std::vector<std::array<int, 2>> pairs;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[i][j] = static_cast<int>(pairs.size());
            pairs.push_back({i, j});
        }
    const int bits = static_cast<int>(pairs.size());

    std::vector<std::array<int, 7>> perms;
    {
        std::array<int, 7> p{};
        std::iota(p.begin(), p.begin() + n, 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.begin() + n));
    }

    auto connected = [&](std::uint32_t mask) {
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (int w = 0; w < n; ++w) {
                if (w == v || (seen >> w & 1)) continue;
                const int bit = pair_index[std::min(v, w)][std::max(v, w)];
                if (mask >> bit & 1) {
                    seen |= 1u << w;
                    frontier |= 1u << w;
                }
            }
        }
        return std::popcount(seen) == n;
    };

    std::vector<char> visited(1u << bits, 0);
    std::vector<std::vector<std::pair<Vertex, Vertex>>> classes;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (visited[mask]) continue;
        // first unseen member is its class representative; mark the orbit
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1) {
                    const int u = p[pairs[b][0]], v = p[pairs[b][1]];
                    image |= 1u << pair_index[std::min(u, v)][std::max(u, v)];
                }
            visited[image] = 1;
        }
        if (!connected(mask)) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) edges.emplace_back(pairs[b][0], pairs[b][1]);
        classes.push_back(std::move(edges));
    }
    return classes;
}

RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace arhub_test
