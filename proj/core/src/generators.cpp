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

#include "arhub/generators.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "arhub/error.hpp"

namespace arhub {

namespace {

std::vector<std::pair<Vertex, Vertex>> sorted_edges(const Graph& h) {
    auto edges = h.edges();
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

Instance reduce_independent_set(const Graph& h, int k) {
    if (k < 0) fail(Errc::invalid_params, "negative independent-set size");
    const int n = h.vertex_count();
    const auto edges = sorted_edges(h);
    const int m = static_cast<int>(edges.size());

    std::vector<std::pair<Vertex, Vertex>> out_edges;
    std::vector<std::pair<Vertex, int>> inhabitants;
    for (int e = 0; e < m; ++e) {
        const Vertex guard = n + e;
        out_edges.emplace_back(edges[e].first, guard);
        out_edges.emplace_back(edges[e].second, guard);
        inhabitants.emplace_back(guard, 1);
    }
    return Instance::make(Graph::from_edges(n + m, out_edges), inhabitants, k);
}

Instance reduce_equitable_3col(const Graph& h) {
    const int n = h.vertex_count();
    if (n % 3 != 0) fail(Errc::not_divisible_by_3, "vertex count must be divisible by 3");
    const auto edges = sorted_edges(h);
    const int m = static_cast<int>(edges.size());

    std::vector<std::pair<Vertex, Vertex>> out_edges;
    std::vector<std::pair<Vertex, int>> inhabitants;
    auto copy_vertex = [n](int copy, Vertex j) { return copy * n + j; };
    for (int copy = 0; copy < 3; ++copy) {
        for (int e = 0; e < m; ++e) {
            const Vertex guard = 3 * n + copy * m + e;
            out_edges.emplace_back(copy_vertex(copy, edges[e].first), guard);
            out_edges.emplace_back(copy_vertex(copy, edges[e].second), guard);
            inhabitants.emplace_back(guard, 1);
        }
        const Vertex size_guard = 3 * n + 3 * m + copy;
        for (Vertex j = 0; j < n; ++j)
            out_edges.emplace_back(copy_vertex(copy, j), size_guard);
        inhabitants.emplace_back(size_guard, n / 3);
    }
    for (Vertex j = 0; j < n; ++j) {
        const Vertex vertex_guard = 3 * n + 3 * m + 3 + j;
        for (int copy = 0; copy < 3; ++copy)
            out_edges.emplace_back(copy_vertex(copy, j), vertex_guard);
        inhabitants.emplace_back(vertex_guard, 1);
    }
    const int total = 4 * n + 3 * m + 3;
    return Instance::make(Graph::from_edges(total, out_edges), inhabitants, n);
}

Instance reduce_relaxed_hardness(const Graph& h, int k, int t) {
    if (k < 0 || t < 0) fail(Errc::invalid_params, "negative parameter");
    const int n = h.vertex_count();
    const auto edges = sorted_edges(h);
    const int m = static_cast<int>(edges.size());

    std::vector<std::pair<Vertex, Vertex>> out_edges;
    std::vector<std::pair<Vertex, int>> inhabitants;
    for (int e = 0; e < m; ++e)
        for (int c = 0; c <= t; ++c) {
            const Vertex guard = n + e * (t + 1) + c;
            out_edges.emplace_back(edges[e].first, guard);
            out_edges.emplace_back(edges[e].second, guard);
            inhabitants.emplace_back(guard, 1);
        }
    for (int j = 0; j < t; ++j) {
        const Vertex pendant = n + m * (t + 1) + 2 * j;
        const Vertex blocker = pendant + 1;
        out_edges.emplace_back(pendant, blocker);
        inhabitants.emplace_back(blocker, 0);
    }
    const int total = n + m * (t + 1) + 2 * t;
    return Instance::make(Graph::from_edges(total, out_edges), inhabitants, k + t, t);
}

namespace {

// Thin deterministic wrapper; std::mt19937_64 output is pinned by the
// standard, the distribution classes are not.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    // uniform over [0, k)
    std::uint64_t below(std::uint64_t k) { return gen() % k; }
    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    bool flip(double p) { return unit() < p; }
};

GeneratedInstance assemble(Graph g, const std::vector<char>& occupied,
                           const RandomParams& params, Rng& rng,
                           std::vector<Vertex> modulator) {
    const int n = g.vertex_count();
    std::vector<std::pair<Vertex, int>> inhabitants;
    int empties = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!occupied[v]) {
            ++empties;
            continue;
        }
        int ub = 0;
        if (!rng.flip(params.zero_bound_prob))
            ub = static_cast<int>(rng.below(g.degree(v) + 1u));
        inhabitants.emplace_back(v, ub);
    }
    int refugees;
    if (params.refugees) {
        if (*params.refugees < 0 || *params.refugees > empties)
            fail(Errc::invalid_params, "refugee count out of range for this draw");
        refugees = *params.refugees;
    } else {
        refugees = static_cast<int>(rng.below(empties + 1u));
    }
    GeneratedInstance out{Instance::make(std::move(g), inhabitants, refugees),
                          std::move(modulator)};
    return out;
}

std::vector<char> sample_occupancy(int n, const RandomParams& params, Rng& rng) {
    std::vector<char> occupied(n, 0);
    for (Vertex v = 0; v < n; ++v) occupied[v] = rng.flip(params.occupied_fraction);
    return occupied;
}

// Occupied side 0..o-1, empty side o..n-1, with o clamped to [1, n-1].
int split_point(int n, const RandomParams& params) {
    const int o = static_cast<int>(params.occupied_fraction * n + 0.5);
    return std::clamp(o, 1, n - 1);
}

}  // namespace

GeneratedInstance generate_random(RandomFamily family, const RandomParams& params,
                                  std::uint64_t seed) {
    if (params.n < 1) fail(Errc::invalid_params, "need at least one vertex");
    const int n = params.n;
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;

    switch (family) {
        case RandomFamily::tree: {
            for (Vertex v = 1; v < n; ++v)
                edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), sample_occupancy(n, params, rng), params, rng, {});
        }
        case RandomFamily::cycle: {
            if (n < 3) fail(Errc::invalid_params, "a cycle needs at least 3 vertices");
            for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), sample_occupancy(n, params, rng), params, rng, {});
        }
        case RandomFamily::maxdeg2: {
            // consecutive runs, each a path or (when long enough) a cycle
            Vertex start = 0;
            while (start < n) {
                const int len = 1 + static_cast<int>(rng.below(
                                        std::min<std::uint64_t>(n - start, 6)));
                for (Vertex v = start; v + 1 < start + len; ++v)
                    edges.emplace_back(v, v + 1);
                if (len >= 3 && rng.flip(0.5))
                    edges.emplace_back(start, start + len - 1);
                start += len;
            }
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), sample_occupancy(n, params, rng), params, rng, {});
        }
        case RandomFamily::bipartite: {
            if (n < 2) fail(Errc::invalid_params, "bipartite families need 2 vertices");
            const int o = split_point(n, params);
            std::vector<char> occupied(n, 0);
            std::fill(occupied.begin(), occupied.begin() + o, 1);
            for (Vertex u = 0; u < o; ++u)
                for (Vertex v = o; v < n; ++v)
                    if (rng.flip(params.edge_prob)) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), occupied, params, rng, {});
        }
        case RandomFamily::nearly_complete: {
            if (n < 2) fail(Errc::invalid_params, "bipartite families need 2 vertices");
            const int o = split_point(n, params);
            const long long pairs = static_cast<long long>(o) * (n - o);
            if (params.missing_edges < 0 || params.missing_edges > pairs)
                fail(Errc::invalid_params, "cannot drop more pairs than exist");
            std::vector<char> occupied(n, 0);
            std::fill(occupied.begin(), occupied.begin() + o, 1);
            std::vector<char> dropped(pairs, 0);
            for (int d = 0; d < params.missing_edges; ++d) {
                std::uint64_t pick;
                do pick = rng.below(pairs);
                while (dropped[pick]);
                dropped[pick] = 1;
            }
            for (Vertex u = 0; u < o; ++u)
                for (Vertex v = o; v < n; ++v)
                    if (!dropped[static_cast<long long>(u) * (n - o) + (v - o)])
                        edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), occupied, params, rng, {});
        }
        case RandomFamily::planted_modulator: {
            const int d = params.modulator_size;
            if (d < 0 || d > n) fail(Errc::invalid_params, "modulator size out of range");
            std::vector<char> occupied(n, 0);
            for (Vertex v = 0; v < d; ++v) occupied[v] = rng.flip(params.occupied_fraction);
            int o = 0;
            if (n - d >= 2) {
                o = split_point(n - d, params);
                std::fill(occupied.begin() + d, occupied.begin() + d + o, 1);
            }
            // complete bipartite outside the modulator
            for (Vertex u = d; u < d + o; ++u)
                for (Vertex v = d + o; v < n; ++v) edges.emplace_back(u, v);
            // modulator vertices connect anywhere
            for (Vertex u = 0; u < d; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.flip(params.edge_prob)) edges.emplace_back(u, v);
            std::vector<Vertex> modulator(d);
            for (Vertex v = 0; v < d; ++v) modulator[v] = v;
            Graph g = Graph::from_edges(n, edges);
            return assemble(std::move(g), occupied, params, rng, std::move(modulator));
        }
    }
    fail(Errc::invalid_params, "unknown family");
}

}  // namespace arhub
