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

#include <span>
#include <utility>
#include <vector>

namespace arhub {

using Vertex = int;

// Simple undirected graph over dense vertex indices 0..n-1.
// Adjacency lists are kept sorted; self-loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    // Validating constructor for external input.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    // Trusted constructor for internally derived graphs; lists are sorted here.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const;
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    bool is_forest() const;

    // Component label per vertex, numbered in order of lowest contained vertex.
    std::vector<int> component_labels() const;
    int component_count() const;

    // Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
};

}  // namespace arhub
