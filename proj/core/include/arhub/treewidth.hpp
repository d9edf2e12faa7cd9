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

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arhub/instance.hpp"
#include "arhub/oracle.hpp"

namespace arhub {

// Rooted tree decomposition: node 0..k-1, each with a sorted bag.
struct TreeDecomposition {
    std::vector<std::vector<int>> children;
    std::vector<std::vector<Vertex>> bags;
    int root = 0;

    int node_count() const { return static_cast<int>(bags.size()); }
    // Largest bag size minus one; -1 for an all-empty decomposition.
    int width() const;
};

enum class DecomposeMode { heuristic, exact_small };

// heuristic: min-fill elimination. exact_small: optimal width by iterative
// deepening over elimination orders (vertex count at most 20).
TreeDecomposition decompose(const Graph& g, DecomposeMode mode);

// PACE-style format: "s td <bags> <width+1> <vertices>", "b <id> <v...>",
// and bag-edge lines, all 1-based; "c" lines are comments. The result is
// validated against `g`.
TreeDecomposition parse_tree_decomposition(std::istream& in, const Graph& g);
std::string format_tree_decomposition(const TreeDecomposition& td);

// Checks the three decomposition axioms plus tree shape; throws
// invalid_decomposition.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class NiceNodeType {
    leaf,
    introduce_empty,
    introduce_occupied,
    forget_empty,
    forget_occupied,
    join,
};

struct NiceNode {
    NiceNodeType type = NiceNodeType::leaf;
    Vertex vertex = -1;  // subject of introduce/forget nodes
    int left = -1, right = -1;
    std::vector<Vertex> bag;  // sorted
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int width() const;
};

// Rebuilds the decomposition as a chain/join structure with one-vertex
// steps, typed by occupancy, with an empty root bag. Width is preserved.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Instance& inst);

// Structural nice-shape checks plus the decomposition axioms with respect
// to the bipartized topology; throws invalid_decomposition.
void validate_nice(const Instance& inst, const NiceTreeDecomposition& ntd);

// Filled dynamic-programming tables over a nice decomposition.
//
// A table cell (A, P, rho) at node x records that some housing of rho
// refugees inside x's subtree places exactly A within the bag and has
// already committed P(w) housed neighbours beside each bag inhabitant w.
// The textbook signature carries a fourth component F promising future
// neighbours; it holds exactly when the (A, P, rho) core is realizable and
// P(w) + F(w) + |A cap N(w)| stays within w's bound, so F is never stored.
class TreewidthTables {
public:
    static TreewidthTables fill(const Instance& inst, const NiceTreeDecomposition& ntd,
                                int relax_budget, const SolveOptions& opts = {});
    ~TreewidthTables();
    TreewidthTables(TreewidthTables&&) noexcept;
    TreewidthTables& operator=(TreewidthTables&&) noexcept;

    // Membership of a stored cell. `housed_in_bag` and `past` use vertex
    // ids; spent is the excess already charged (0 in the exact problem).
    bool has_cell(int node, std::span<const Vertex> housed_in_bag,
                  std::span<const std::pair<Vertex, int>> past, int rho, int spent = 0) const;

    // Full four-component signature semantics for the exact problem.
    bool signature(int node, std::span<const Vertex> housed_in_bag,
                   std::span<const std::pair<Vertex, int>> past,
                   std::span<const std::pair<Vertex, int>> future, int rho) const;

    // Vertices introduced anywhere in the subtree of `node`.
    std::vector<Vertex> subtree_vertices(int node) const;

    std::uint64_t cell_count() const;
    bool feasible() const;
    // Smallest charged excess among full-count root cells; requires feasible().
    int best_spent() const;
    Housing extract_witness() const;

private:
    TreewidthTables();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Exact solver over a nice decomposition of the (bipartized) topology. The
// one-argument overloads build a heuristic decomposition internally.
SolveReport solve_treewidth(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& opts = {});
SolveReport solve_treewidth(const Instance& inst, const SolveOptions& opts = {});

// Budgeted variant: feasible when total excess stays within relax_budget.
SolveReport solve_treewidth_relaxed(const Instance& inst, const NiceTreeDecomposition& ntd,
                                    const SolveOptions& opts = {});
SolveReport solve_treewidth_relaxed(const Instance& inst, const SolveOptions& opts = {});

}  // namespace arhub
