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

#include "arhub/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "arhub/error.hpp"
#include "arhub/preprocess.hpp"
#include "stopwatch.hpp"

namespace arhub {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
    return w;
}

namespace {

// Turns an elimination order into a decomposition: the bag of v is v plus
// its neighbourhood in the fill graph at elimination time, and v's node
// hangs below the bag of its earliest-eliminated fill neighbour.
TreeDecomposition build_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.children.resize(1);
        td.bags.resize(1);
        td.root = 0;
        return td;
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::unordered_set<Vertex>> nb(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nb[v].insert(w);

    td.children.resize(n);
    td.bags.resize(n);
    td.root = n - 1;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> rest(nb[v].begin(), nb[v].end());
        std::sort(rest.begin(), rest.end());
        td.bags[i] = rest;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        int parent;
        if (!rest.empty()) {
            Vertex first = rest[0];
            for (Vertex w : rest)
                if (pos[w] < pos[first]) first = w;
            parent = pos[first];
        } else {
            parent = i + 1 < n ? i + 1 : -1;
        }
        if (parent != -1) td.children[parent].push_back(i);
        // eliminate v: clique up its neighbourhood
        for (Vertex a : rest) nb[a].erase(v);
        for (size_t x = 0; x < rest.size(); ++x)
            for (size_t y = x + 1; y < rest.size(); ++y) {
                nb[rest[x]].insert(rest[y]);
                nb[rest[y]].insert(rest[x]);
            }
    }
    return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::unordered_set<Vertex>> nb(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nb[v].insert(w);
    std::vector<char> alive(n, 1);

    auto fill_of = [&](Vertex v) {
        long long missing = 0;
        std::vector<Vertex> ns(nb[v].begin(), nb[v].end());
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j)
                if (!nb[ns[i]].count(ns[j])) ++missing;
        return missing;
    };

    using Entry = std::pair<long long, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v) pq.push({fill_of(v), v});

    std::vector<Vertex> order;
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        auto [f, v] = pq.top();
        pq.pop();
        if (!alive[v]) continue;
        long long now = fill_of(v);
        if (now != f) {
            pq.push({now, v});
            continue;
        }
        alive[v] = 0;
        order.push_back(v);
        std::vector<Vertex> ns(nb[v].begin(), nb[v].end());
        for (Vertex a : ns) nb[a].erase(v);
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j) {
                nb[ns[i]].insert(ns[j]);
                nb[ns[j]].insert(ns[i]);
            }
        for (Vertex a : ns) pq.push({fill_of(a), a});
    }
    return order;
}

// Optimal elimination order by iterative deepening; feasible for n <= 20.
std::vector<Vertex> exact_small_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) fail(Errc::invalid_params, "exact decomposition limited to 20 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    auto reach = [&](Vertex v, std::uint32_t eliminated) {
        std::uint32_t seen = 1u << v, res = 0;
        std::uint32_t stack = adj[v];
        while (stack) {
            int x = std::countr_zero(stack);
            stack &= stack - 1;
            if (seen >> x & 1) continue;
            seen |= 1u << x;
            if (eliminated >> x & 1)
                stack |= adj[x] & ~seen;
            else
                res |= 1u << x;
        }
        return res;
    };

    for (int k = 0; k < std::max(1, n); ++k) {
        std::unordered_set<std::uint32_t> failed;
        std::vector<Vertex> order;
        std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t mask) {
            if (mask == full) return true;
            if (failed.count(mask)) return false;
            for (Vertex v = 0; v < n; ++v) {
                if (mask >> v & 1) continue;
                if (std::popcount(reach(v, mask)) <= k) {
                    order.push_back(v);
                    if (dfs(mask | (1u << v))) return true;
                    order.pop_back();
                }
            }
            failed.insert(mask);
            return false;
        };
        if (dfs(0)) return order;
    }
    fail(Errc::invalid_params, "no elimination order found");
}

}  // namespace

TreeDecomposition decompose(const Graph& g, DecomposeMode mode) {
    switch (mode) {
        case DecomposeMode::heuristic:
            return build_from_elimination(g, min_fill_order(g));
        case DecomposeMode::exact_small:
            return build_from_elimination(g, exact_small_order(g));
    }
    fail(Errc::invalid_params, "unknown decomposition mode");
}

TreeDecomposition parse_tree_decomposition(std::istream& in, const Graph& g) {
    std::string line;
    int bags = -1, max_bag = 0, verts = 0;
    std::vector<std::vector<Vertex>> bag_of;
    std::vector<char> seen_bag;
    std::vector<std::pair<int, int>> tree_edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "s") {
            std::string td;
            if (bags != -1 || !(ls >> td >> bags >> max_bag >> verts) || td != "td" || bags < 0)
                fail(Errc::parse_error, "bad solution line");
            bag_of.resize(bags);
            seen_bag.assign(bags, 0);
            continue;
        }
        if (bags == -1) fail(Errc::parse_error, "content before the solution line");
        if (tok == "b") {
            int id;
            if (!(ls >> id) || id < 1 || id > bags) fail(Errc::parse_error, "bad bag id");
            if (seen_bag[id - 1]) fail(Errc::parse_error, "duplicate bag " + std::to_string(id));
            seen_bag[id - 1] = 1;
            int v;
            while (ls >> v) {
                if (v < 1 || v > verts) fail(Errc::parse_error, "bag vertex out of range");
                bag_of[id - 1].push_back(v - 1);
            }
            continue;
        }
        int a = 0, b = 0;
        std::istringstream es(line);
        if (!(es >> a >> b) || a < 1 || a > bags || b < 1 || b > bags)
            fail(Errc::parse_error, "bad decomposition edge");
        tree_edges.emplace_back(a - 1, b - 1);
    }
    if (bags == -1) fail(Errc::parse_error, "missing solution line");
    if (verts != g.vertex_count())
        fail(Errc::invalid_decomposition, "vertex count does not match the graph");
    for (int i = 0; i < bags; ++i) {
        if (!seen_bag[i]) fail(Errc::parse_error, "bag " + std::to_string(i + 1) + " missing");
        std::sort(bag_of[i].begin(), bag_of[i].end());
        bag_of[i].erase(std::unique(bag_of[i].begin(), bag_of[i].end()), bag_of[i].end());
        if (static_cast<int>(bag_of[i].size()) > max_bag)
            fail(Errc::invalid_decomposition, "bag larger than declared width");
    }

    TreeDecomposition td;
    if (bags == 0) {
        td.children.resize(1);
        td.bags.resize(1);
        td.root = 0;
    } else {
        td.bags = std::move(bag_of);
        td.children.resize(bags);
        std::vector<std::vector<int>> adj(bags);
        for (auto [a, b] : tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> vis(bags, 0);
        std::vector<int> queue{0};
        vis[0] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : adj[x])
                if (!vis[y]) {
                    vis[y] = 1;
                    td.children[x].push_back(y);
                    queue.push_back(y);
                }
        }
        if (static_cast<int>(queue.size()) != bags)
            fail(Errc::invalid_decomposition, "decomposition tree is disconnected");
        td.root = 0;
    }
    validate_decomposition(g, td);
    return td;
}

std::string format_tree_decomposition(const TreeDecomposition& td) {
    std::ostringstream out;
    int max_bag = 0, verts = 0;
    for (const auto& b : td.bags) {
        max_bag = std::max(max_bag, static_cast<int>(b.size()));
        for (Vertex v : b) verts = std::max(verts, v + 1);
    }
    out << "s td " << td.node_count() << ' ' << max_bag << ' ' << verts << '\n';
    for (int i = 0; i < td.node_count(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (int x = 0; x < td.node_count(); ++x)
        for (int y : td.children[x]) out << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int k = td.node_count();
    if (k == 0 || static_cast<int>(td.children.size()) != k)
        fail(Errc::invalid_decomposition, "malformed node arrays");
    if (td.root < 0 || td.root >= k) fail(Errc::invalid_decomposition, "bad root");
    std::vector<int> parent(k, -1);
    std::vector<int> queue{td.root};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : td.children[x]) {
            if (y < 0 || y >= k || y == td.root || parent[y] != -1)
                fail(Errc::invalid_decomposition, "children do not form a tree");
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (static_cast<int>(queue.size()) != k)
        fail(Errc::invalid_decomposition, "unreachable decomposition nodes");

    const int n = g.vertex_count();
    std::vector<std::vector<int>> occurs(n);
    for (int i = 0; i < k; ++i) {
        const auto& bag = td.bags[i];
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            fail(Errc::invalid_decomposition, "bag not sorted or has duplicates");
        for (Vertex v : bag) {
            if (v < 0 || v >= n) fail(Errc::invalid_decomposition, "bag vertex out of range");
            occurs[v].push_back(i);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (occurs[v].empty())
            fail(Errc::invalid_decomposition, "vertex " + std::to_string(v) + " in no bag");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : occurs[u])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                covered = true;
                break;
            }
        if (!covered)
            fail(Errc::invalid_decomposition,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") uncovered");
    }
    // Occurrence connectivity: walking up from every occurrence node must
    // stay inside the occurrence set until a common top node.
    std::vector<char> in_set(k, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (int i : occurs[v]) in_set[i] = 1;
        int reached = 0;
        std::vector<int> stack{occurs[v][0]};
        std::vector<char> vis(occurs[v].size(), 0);
        std::unordered_set<int> seen{occurs[v][0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            if (parent[x] != -1 && in_set[parent[x]] && !seen.count(parent[x])) {
                seen.insert(parent[x]);
                stack.push_back(parent[x]);
            }
            for (int y : td.children[x])
                if (in_set[y] && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        if (reached != static_cast<int>(occurs[v].size()))
            fail(Errc::invalid_decomposition,
                 "occurrences of vertex " + std::to_string(v) + " are disconnected");
        for (int i : occurs[v]) in_set[i] = 0;
    }
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Instance& inst) {
    NiceTreeDecomposition out;
    auto add = [&](NiceNode node) {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    };
    auto introduce = [&](int below, Vertex v) {
        NiceNode node;
        node.type = inst.is_occupied(v) ? NiceNodeType::introduce_occupied
                                        : NiceNodeType::introduce_empty;
        node.vertex = v;
        node.left = below;
        node.bag = out.nodes[below].bag;
        node.bag.insert(std::lower_bound(node.bag.begin(), node.bag.end(), v), v);
        return add(std::move(node));
    };
    auto forget = [&](int below, Vertex v) {
        NiceNode node;
        node.type =
            inst.is_occupied(v) ? NiceNodeType::forget_occupied : NiceNodeType::forget_empty;
        node.vertex = v;
        node.left = below;
        node.bag = out.nodes[below].bag;
        node.bag.erase(std::lower_bound(node.bag.begin(), node.bag.end(), v));
        return add(std::move(node));
    };

    // Children-before-parent order over the rooted decomposition.
    std::vector<int> order;
    {
        std::vector<int> queue{td.root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : td.children[x]) queue.push_back(y);
        }
        order.assign(queue.rbegin(), queue.rend());
    }

    std::vector<int> built(td.node_count(), -1);
    for (int x : order) {
        const auto& bag = td.bags[x];
        std::vector<int> branches;
        for (int c : td.children[x]) {
            int t = built[c];
            for (Vertex v : td.bags[c])
                if (!std::binary_search(bag.begin(), bag.end(), v)) t = forget(t, v);
            for (Vertex v : bag)
                if (!std::binary_search(td.bags[c].begin(), td.bags[c].end(), v))
                    t = introduce(t, v);
            branches.push_back(t);
        }
        int cur;
        if (branches.empty()) {
            cur = add(NiceNode{});
            for (Vertex v : bag) cur = introduce(cur, v);
        } else {
            cur = branches[0];
            for (size_t i = 1; i < branches.size(); ++i) {
                NiceNode node;
                node.type = NiceNodeType::join;
                node.left = cur;
                node.right = branches[i];
                node.bag = bag;
                cur = add(std::move(node));
            }
        }
        built[x] = cur;
    }
    int top = built[td.root];
    for (Vertex v : td.bags[td.root]) top = forget(top, v);
    out.root = top;
    return out;
}

void validate_nice(const Instance& inst, const NiceTreeDecomposition& ntd) {
    const int k = ntd.node_count();
    if (k == 0) fail(Errc::invalid_decomposition, "empty decomposition");
    if (ntd.root < 0 || ntd.root >= k) fail(Errc::invalid_decomposition, "bad root");
    if (!ntd.nodes[ntd.root].bag.empty())
        fail(Errc::invalid_decomposition, "root bag must be empty");

    std::vector<int> parent(k, -1);
    std::vector<int> queue{ntd.root};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        const NiceNode& node = ntd.nodes[x];
        for (int y : {node.left, node.right}) {
            if (y == -1) continue;
            if (y < 0 || y >= k || y == ntd.root || parent[y] != -1)
                fail(Errc::invalid_decomposition, "child links do not form a tree");
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (static_cast<int>(queue.size()) != k)
        fail(Errc::invalid_decomposition, "unreachable nice nodes");

    auto diff_one = [](const std::vector<Vertex>& big, const std::vector<Vertex>& small,
                       Vertex v) {
        if (big.size() != small.size() + 1) return false;
        if (!std::binary_search(big.begin(), big.end(), v)) return false;
        if (std::binary_search(small.begin(), small.end(), v)) return false;
        size_t j = 0;
        for (Vertex x : big) {
            if (x == v) continue;
            if (j >= small.size() || small[j] != x) return false;
            ++j;
        }
        return true;
    };

    for (int x = 0; x < k; ++x) {
        const NiceNode& node = ntd.nodes[x];
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            fail(Errc::invalid_decomposition, "bag not sorted");
        switch (node.type) {
            case NiceNodeType::leaf:
                if (node.left != -1 || node.right != -1 || !node.bag.empty())
                    fail(Errc::invalid_decomposition, "malformed leaf");
                break;
            case NiceNodeType::introduce_empty:
            case NiceNodeType::introduce_occupied: {
                if (node.left == -1 || node.right != -1)
                    fail(Errc::invalid_decomposition, "introduce needs one child");
                bool occ = node.type == NiceNodeType::introduce_occupied;
                if (inst.is_occupied(node.vertex) != occ)
                    fail(Errc::invalid_decomposition, "introduce type mismatches occupancy");
                if (!diff_one(node.bag, ntd.nodes[node.left].bag, node.vertex))
                    fail(Errc::invalid_decomposition, "introduce bag mismatch");
                break;
            }
            case NiceNodeType::forget_empty:
            case NiceNodeType::forget_occupied: {
                if (node.left == -1 || node.right != -1)
                    fail(Errc::invalid_decomposition, "forget needs one child");
                bool occ = node.type == NiceNodeType::forget_occupied;
                if (inst.is_occupied(node.vertex) != occ)
                    fail(Errc::invalid_decomposition, "forget type mismatches occupancy");
                if (!diff_one(ntd.nodes[node.left].bag, node.bag, node.vertex))
                    fail(Errc::invalid_decomposition, "forget bag mismatch");
                break;
            }
            case NiceNodeType::join:
                if (node.left == -1 || node.right == -1)
                    fail(Errc::invalid_decomposition, "join needs two children");
                if (ntd.nodes[node.left].bag != node.bag ||
                    ntd.nodes[node.right].bag != node.bag)
                    fail(Errc::invalid_decomposition, "join bags differ");
                break;
        }
    }

    // Decomposition axioms against the bipartized topology.
    Instance b = bipartize(inst);
    TreeDecomposition flat;
    flat.children.resize(k);
    flat.bags.resize(k);
    for (int x = 0; x < k; ++x) {
        flat.bags[x] = ntd.nodes[x].bag;
        if (ntd.nodes[x].left != -1) flat.children[x].push_back(ntd.nodes[x].left);
        if (ntd.nodes[x].right != -1) flat.children[x].push_back(ntd.nodes[x].right);
    }
    flat.root = ntd.root;
    validate_decomposition(b.topology, flat);
}

// ---------------------------------------------------------------------------
// Dynamic programming engine
// ---------------------------------------------------------------------------

namespace {

struct Cell {
    std::uint64_t amask = 0;
    std::uint32_t rho = 0;
    std::uint32_t spent = 0;
    std::vector<std::uint16_t> past;
    bool operator==(const Cell&) const = default;
};

struct CellHash {
    size_t operator()(const Cell& c) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(c.amask);
        mix(c.rho);
        mix(c.spent);
        for (auto p : c.past) mix(p + 1);
        return static_cast<size_t>(h);
    }
};

using Table = std::unordered_set<Cell, CellHash>;

std::uint64_t insert_bit(std::uint64_t m, int i, std::uint64_t b) {
    std::uint64_t low = m & ((1ull << i) - 1);
    std::uint64_t high = (m >> i) << (i + 1);
    return low | high | (b << i);
}

std::uint64_t remove_bit(std::uint64_t m, int i) {
    std::uint64_t low = m & ((1ull << i) - 1);
    return low | ((m >> (i + 1)) << i);
}

struct NodeCtx {
    std::vector<Vertex> bag_empty, bag_occ;
    std::vector<std::uint64_t> occ_adj;  // per bag_occ position: mask over bag_empty
    std::vector<int> occ_ub;

    int epos(Vertex v) const {
        return static_cast<int>(
            std::lower_bound(bag_empty.begin(), bag_empty.end(), v) - bag_empty.begin());
    }
    int opos(Vertex v) const {
        return static_cast<int>(std::lower_bound(bag_occ.begin(), bag_occ.end(), v) -
                                bag_occ.begin());
    }
};

}  // namespace

struct TreewidthTables::Impl {
    Instance work;  // bipartized
    NiceTreeDecomposition ntd;
    int relax = 0;
    int refugees = 0;
    std::vector<NodeCtx> ctx;
    std::vector<Table> tables;
    std::uint64_t generated = 0;

    void build_ctx() {
        ctx.resize(ntd.node_count());
        for (int x = 0; x < ntd.node_count(); ++x) {
            NodeCtx& c = ctx[x];
            for (Vertex v : ntd.nodes[x].bag)
                (work.is_occupied(v) ? c.bag_occ : c.bag_empty).push_back(v);
            if (c.bag_empty.size() > 63)
                fail(Errc::invalid_params, "more than 63 empty vertices in a bag");
            c.occ_adj.resize(c.bag_occ.size(), 0);
            c.occ_ub.resize(c.bag_occ.size());
            for (size_t i = 0; i < c.bag_occ.size(); ++i) {
                c.occ_ub[i] = work.ub(c.bag_occ[i]);
                for (size_t j = 0; j < c.bag_empty.size(); ++j)
                    if (work.topology.has_edge(c.bag_occ[i], c.bag_empty[j]))
                        c.occ_adj[i] |= 1ull << j;
            }
        }
    }

    // The materialization condition: every bag inhabitant must keep
    //   past(w) + |A cap N(w)|  <=  ub(w) + (relax - spent).
    bool compatible(const NodeCtx& c, const Cell& cell) const {
        const int slack = relax - static_cast<int>(cell.spent);
        for (size_t i = 0; i < c.bag_occ.size(); ++i) {
            int count = cell.past[i] + std::popcount(cell.amask & c.occ_adj[i]);
            if (count > c.occ_ub[i] + slack) return false;
        }
        return true;
    }

    void insert(int node, Cell cell, const SolveOptions& opts) {
        if (++generated > opts.dp_cell_cap)
            fail(Errc::budget_exceeded, "dynamic-programming cell cap hit");
        tables[node].insert(std::move(cell));
    }

    void fill(const SolveOptions& opts) {
        const int k = ntd.node_count();
        tables.resize(k);
        // children before parents
        std::vector<int> order;
        {
            std::vector<int> queue{ntd.root};
            for (size_t head = 0; head < queue.size(); ++head) {
                const NiceNode& node = ntd.nodes[queue[head]];
                if (node.left != -1) queue.push_back(node.left);
                if (node.right != -1) queue.push_back(node.right);
            }
            order.assign(queue.rbegin(), queue.rend());
        }

        for (int x : order) {
            const NiceNode& node = ntd.nodes[x];
            const NodeCtx& cx = ctx[x];
            switch (node.type) {
                case NiceNodeType::leaf:
                    insert(x, Cell{}, opts);
                    break;
                case NiceNodeType::introduce_empty: {
                    const int iv = cx.epos(node.vertex);
                    for (const Cell& c : tables[node.left]) {
                        Cell skip = c;
                        skip.amask = insert_bit(c.amask, iv, 0);
                        insert(x, std::move(skip), opts);
                        if (static_cast<int>(c.rho) + 1 > refugees) continue;
                        Cell put = c;
                        put.amask = insert_bit(c.amask, iv, 1);
                        put.rho = c.rho + 1;
                        if (compatible(cx, put)) insert(x, std::move(put), opts);
                    }
                    break;
                }
                case NiceNodeType::introduce_occupied: {
                    const int iw = cx.opos(node.vertex);
                    for (const Cell& c : tables[node.left]) {
                        Cell put = c;
                        put.past.insert(put.past.begin() + iw, 0);
                        if (compatible(cx, put)) insert(x, std::move(put), opts);
                    }
                    break;
                }
                case NiceNodeType::forget_empty: {
                    const NodeCtx& cy = ctx[node.left];
                    const int iv = cy.epos(node.vertex);
                    for (const Cell& c : tables[node.left]) {
                        Cell out = c;
                        bool housed = c.amask >> iv & 1;
                        out.amask = remove_bit(c.amask, iv);
                        if (housed)
                            for (size_t i = 0; i < cy.bag_occ.size(); ++i)
                                if (cy.occ_adj[i] >> iv & 1) ++out.past[i];
                        insert(x, std::move(out), opts);
                    }
                    break;
                }
                case NiceNodeType::forget_occupied: {
                    const NodeCtx& cy = ctx[node.left];
                    const int iw = cy.opos(node.vertex);
                    for (const Cell& c : tables[node.left]) {
                        int count =
                            c.past[iw] + std::popcount(c.amask & cy.occ_adj[iw]);
                        int charge = std::max(0, count - cy.occ_ub[iw]);
                        if (static_cast<int>(c.spent) + charge > relax) continue;
                        Cell out = c;
                        out.spent = c.spent + charge;
                        out.past.erase(out.past.begin() + iw);
                        if (compatible(cx, out)) insert(x, std::move(out), opts);
                    }
                    break;
                }
                case NiceNodeType::join: {
                    std::unordered_map<std::uint64_t, std::vector<const Cell*>> buckets;
                    for (const Cell& c : tables[node.right]) buckets[c.amask].push_back(&c);
                    for (const Cell& cl : tables[node.left]) {
                        auto it = buckets.find(cl.amask);
                        if (it == buckets.end()) continue;
                        const int housed_in_bag = std::popcount(cl.amask);
                        for (const Cell* cr : it->second) {
                            long long rho = static_cast<long long>(cl.rho) + cr->rho -
                                            housed_in_bag;
                            if (rho > refugees) continue;
                            int spent = static_cast<int>(cl.spent) + static_cast<int>(cr->spent);
                            if (spent > relax) continue;
                            Cell out;
                            out.amask = cl.amask;
                            out.rho = static_cast<std::uint32_t>(rho);
                            out.spent = static_cast<std::uint32_t>(spent);
                            out.past.resize(cl.past.size());
                            for (size_t i = 0; i < cl.past.size(); ++i)
                                out.past[i] =
                                    static_cast<std::uint16_t>(cl.past[i] + cr->past[i]);
                            if (compatible(cx, out)) insert(x, std::move(out), opts);
                        }
                    }
                    break;
                }
            }
        }
    }

    const Cell* best_root_cell() const {
        const Cell* best = nullptr;
        for (const Cell& c : tables[ntd.root])
            if (static_cast<int>(c.rho) == refugees)
                if (!best || c.spent < best->spent) best = &c;
        return best;
    }
};

TreewidthTables::TreewidthTables() : impl_(new Impl) {}
TreewidthTables::~TreewidthTables() = default;
TreewidthTables::TreewidthTables(TreewidthTables&&) noexcept = default;
TreewidthTables& TreewidthTables::operator=(TreewidthTables&&) noexcept = default;

TreewidthTables TreewidthTables::fill(const Instance& inst, const NiceTreeDecomposition& ntd,
                                      int relax_budget, const SolveOptions& opts) {
    if (relax_budget < 0) fail(Errc::invalid_params, "negative relaxation budget");
    validate_nice(inst, ntd);
    TreewidthTables t;
    t.impl_->work = bipartize(inst);
    t.impl_->ntd = ntd;
    t.impl_->relax = relax_budget;
    t.impl_->refugees = inst.refugees;
    t.impl_->build_ctx();
    t.impl_->fill(opts);
    return t;
}

bool TreewidthTables::has_cell(int node, std::span<const Vertex> housed_in_bag,
                               std::span<const std::pair<Vertex, int>> past, int rho,
                               int spent) const {
    const NodeCtx& c = impl_->ctx[node];
    Cell cell;
    cell.rho = static_cast<std::uint32_t>(rho);
    cell.spent = static_cast<std::uint32_t>(spent);
    cell.past.assign(c.bag_occ.size(), 0);
    for (Vertex v : housed_in_bag) {
        int i = c.epos(v);
        if (i >= static_cast<int>(c.bag_empty.size()) || c.bag_empty[i] != v)
            fail(Errc::invalid_params, "vertex not an empty bag member");
        cell.amask |= 1ull << i;
    }
    for (auto [w, cnt] : past) {
        int i = c.opos(w);
        if (i >= static_cast<int>(c.bag_occ.size()) || c.bag_occ[i] != w)
            fail(Errc::invalid_params, "vertex not an occupied bag member");
        cell.past[i] = static_cast<std::uint16_t>(cnt);
    }
    return impl_->tables[node].count(cell) > 0;
}

bool TreewidthTables::signature(int node, std::span<const Vertex> housed_in_bag,
                                std::span<const std::pair<Vertex, int>> past,
                                std::span<const std::pair<Vertex, int>> future, int rho) const {
    if (impl_->relax != 0)
        fail(Errc::invalid_params, "signature queries are defined for the exact tables");
    if (!has_cell(node, housed_in_bag, past, rho, 0)) return false;
    const NodeCtx& c = impl_->ctx[node];
    std::uint64_t amask = 0;
    for (Vertex v : housed_in_bag) amask |= 1ull << c.epos(v);
    std::vector<int> p(c.bag_occ.size(), 0), f(c.bag_occ.size(), 0);
    for (auto [w, cnt] : past) p[c.opos(w)] = cnt;
    for (auto [w, cnt] : future) {
        int i = c.opos(w);
        if (i >= static_cast<int>(c.bag_occ.size()) || c.bag_occ[i] != w)
            fail(Errc::invalid_params, "vertex not an occupied bag member");
        f[i] = cnt;
    }
    for (size_t i = 0; i < c.bag_occ.size(); ++i)
        if (p[i] + f[i] + std::popcount(amask & c.occ_adj[i]) > c.occ_ub[i]) return false;
    return true;
}

std::vector<Vertex> TreewidthTables::subtree_vertices(int node) const {
    std::vector<Vertex> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        const NiceNode& nd = impl_->ntd.nodes[stack.back()];
        stack.pop_back();
        if (nd.type == NiceNodeType::introduce_empty ||
            nd.type == NiceNodeType::introduce_occupied)
            out.push_back(nd.vertex);
        if (nd.left != -1) stack.push_back(nd.left);
        if (nd.right != -1) stack.push_back(nd.right);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t TreewidthTables::cell_count() const {
    std::uint64_t total = 0;
    for (const Table& t : impl_->tables) total += t.size();
    return total;
}

bool TreewidthTables::feasible() const { return impl_->best_root_cell() != nullptr; }

int TreewidthTables::best_spent() const {
    const Cell* c = impl_->best_root_cell();
    if (!c) fail(Errc::invalid_params, "no feasible root cell");
    return static_cast<int>(c->spent);
}

Housing TreewidthTables::extract_witness() const {
    const Impl& im = *impl_;
    const Cell* root = im.best_root_cell();
    if (!root) fail(Errc::invalid_params, "no feasible root cell");

    std::vector<Vertex> placed;
    std::vector<std::pair<int, Cell>> stack;
    stack.emplace_back(im.ntd.root, *root);
    while (!stack.empty()) {
        auto [x, cell] = std::move(stack.back());
        stack.pop_back();
        const NiceNode& node = im.ntd.nodes[x];
        const NodeCtx& cx = im.ctx[x];
        switch (node.type) {
            case NiceNodeType::leaf:
                break;
            case NiceNodeType::introduce_empty: {
                int iv = cx.epos(node.vertex);
                Cell child = cell;
                if (cell.amask >> iv & 1) {
                    placed.push_back(node.vertex);
                    child.rho = cell.rho - 1;
                }
                child.amask = remove_bit(cell.amask, iv);
                stack.emplace_back(node.left, std::move(child));
                break;
            }
            case NiceNodeType::introduce_occupied: {
                int iw = cx.opos(node.vertex);
                Cell child = cell;
                child.past.erase(child.past.begin() + iw);
                stack.emplace_back(node.left, std::move(child));
                break;
            }
            case NiceNodeType::forget_empty: {
                const NodeCtx& cy = im.ctx[node.left];
                int iv = cy.epos(node.vertex);
                Cell unused = cell;
                unused.amask = insert_bit(cell.amask, iv, 0);
                if (im.tables[node.left].count(unused)) {
                    stack.emplace_back(node.left, std::move(unused));
                    break;
                }
                Cell housed = cell;
                housed.amask = insert_bit(cell.amask, iv, 1);
                bool ok = true;
                for (size_t i = 0; i < cy.bag_occ.size(); ++i)
                    if (cy.occ_adj[i] >> iv & 1) {
                        if (housed.past[i] == 0) {
                            ok = false;
                            break;
                        }
                        --housed.past[i];
                    }
                if (!ok || !im.tables[node.left].count(housed))
                    fail(Errc::invalid_params, "witness walk lost the trail");
                stack.emplace_back(node.left, std::move(housed));
                break;
            }
            case NiceNodeType::forget_occupied: {
                const NodeCtx& cy = im.ctx[node.left];
                int iw = cy.opos(node.vertex);
                int a = std::popcount(cell.amask & cy.occ_adj[iw]);
                int limit = std::min(im.work.topology.degree(node.vertex), im.refugees);
                bool found = false;
                for (int i = 0; i <= limit && !found; ++i) {
                    int charge = std::max(0, i + a - cy.occ_ub[iw]);
                    if (charge > static_cast<int>(cell.spent)) continue;
                    Cell child = cell;
                    child.spent = cell.spent - charge;
                    child.past.insert(child.past.begin() + iw,
                                      static_cast<std::uint16_t>(i));
                    if (im.tables[node.left].count(child)) {
                        stack.emplace_back(node.left, std::move(child));
                        found = true;
                    }
                }
                if (!found) fail(Errc::invalid_params, "witness walk lost the trail");
                break;
            }
            case NiceNodeType::join: {
                const int housed_in_bag = std::popcount(cell.amask);
                bool found = false;
                for (const Cell& cl : im.tables[node.left]) {
                    if (cl.amask != cell.amask) continue;
                    if (static_cast<int>(cl.rho) > static_cast<int>(cell.rho) + housed_in_bag)
                        continue;
                    if (cl.spent > cell.spent) continue;
                    Cell cr;
                    cr.amask = cell.amask;
                    cr.rho = cell.rho + housed_in_bag - cl.rho;
                    cr.spent = cell.spent - cl.spent;
                    cr.past.resize(cell.past.size());
                    bool ok = true;
                    for (size_t i = 0; i < cell.past.size(); ++i) {
                        if (cl.past[i] > cell.past[i]) {
                            ok = false;
                            break;
                        }
                        cr.past[i] = static_cast<std::uint16_t>(cell.past[i] - cl.past[i]);
                    }
                    if (!ok || !im.tables[node.right].count(cr)) continue;
                    stack.emplace_back(node.left, cl);
                    stack.emplace_back(node.right, std::move(cr));
                    found = true;
                    break;
                }
                if (!found) fail(Errc::invalid_params, "witness walk lost the trail");
                break;
            }
        }
    }
    Housing h = Housing::of(std::move(placed));
    if (h.size() != im.refugees) fail(Errc::invalid_params, "witness has wrong size");
    return h;
}

namespace {

SolveReport run_treewidth(const Instance& inst, const NiceTreeDecomposition& ntd, int relax,
                          const char* name, const SolveOptions& opts) {
    Stopwatch sw;
    TreewidthTables tables = TreewidthTables::fill(inst, ntd, relax, opts);
    SolveReport rep;
    rep.solver_name = name;
    rep.yes = tables.feasible();
    rep.stats["cells"] = static_cast<double>(tables.cell_count());
    rep.stats["width"] = ntd.width();
    if (rep.yes) {
        if (relax > 0) rep.stats["excess"] = tables.best_spent();
        rep.witness = tables.extract_witness();
    }
    rep.elapsed = sw.lap();
    return rep;
}

NiceTreeDecomposition default_decomposition(const Instance& inst) {
    Instance b = bipartize(inst);
    TreeDecomposition td = decompose(b.topology, DecomposeMode::heuristic);
    return make_nice(td, inst);
}

}  // namespace

SolveReport solve_treewidth(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& opts) {
    return run_treewidth(inst, ntd, 0, "treewidth", opts);
}

SolveReport solve_treewidth(const Instance& inst, const SolveOptions& opts) {
    return solve_treewidth(inst, default_decomposition(inst), opts);
}

SolveReport solve_treewidth_relaxed(const Instance& inst, const NiceTreeDecomposition& ntd,
                                    const SolveOptions& opts) {
    return run_treewidth(inst, ntd, inst.relax_budget.value_or(0), "treewidth-relaxed", opts);
}

SolveReport solve_treewidth_relaxed(const Instance& inst, const SolveOptions& opts) {
    return solve_treewidth_relaxed(inst, default_decomposition(inst), opts);
}

}  // namespace arhub
