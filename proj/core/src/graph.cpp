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

#include "arhub/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arhub/error.hpp"

namespace arhub {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) fail(Errc::malformed_graph, "negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::malformed_graph,
                 "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) fail(Errc::malformed_graph, "self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            fail(Errc::malformed_graph, "duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& a : adj_) twice += static_cast<long long>(a.size());
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_forest() const {
    return edge_count() == vertex_count() - component_count();
}

std::vector<int> Graph::component_labels() const {
    const int n = vertex_count();
    std::vector<int> label(n, -1);
    std::vector<Vertex> stack;
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v]) {
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    auto label = component_labels();
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

}  // namespace arhub
