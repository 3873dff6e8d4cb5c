#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sptutte/errors.hpp"
#include "sptutte/graph.hpp"

namespace sptutte {

enum class NodeKind { Series, Parallel, Leaf };

// One node of a decomposition tree. Leaves stand for original edges; Series
// and Parallel nodes combine at least two children. Terminals are the two
// vertices the represented subgraph attaches to the rest of the graph by.
struct SpNode {
    NodeKind kind = NodeKind::Leaf;
    int source = -1;
    int sink = -1;
    int edge_id = -1;           // set iff kind == Leaf
    std::vector<int> children;  // indices into SpTree::nodes, empty iff Leaf
};

// Decomposition tree stored as a flat arena so deep trees never recurse
// through destructors or folds. Nodes unreachable from the root may exist
// (intermediate series chains get spliced away); traversals start at root.
struct SpTree {
    std::vector<SpNode> nodes;
    int root = -1;

    const SpNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }

    int leaf_count() const {
        if (root < 0) return 0;
        int count = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const SpNode& n = at(stack.back());
            stack.pop_back();
            if (n.kind == NodeKind::Leaf) {
                ++count;
            } else {
                stack.insert(stack.end(), n.children.begin(), n.children.end());
            }
        }
        return count;
    }
};

namespace detail {

// Rewrites every reachable Series node so its children are the full chain of
// non-Series nodes, in order from its source to its sink. The reduction loop
// produces binary series nodes (constant-time merges); this single pass makes
// them n-ary. Nested series nodes become unreachable. Linear in tree size.
inline void flatten_series_chains(SpTree& t) {
    if (t.root < 0) return;
    std::vector<int> pending{t.root};
    while (!pending.empty()) {
        const int idx = pending.back();
        pending.pop_back();
        SpNode& nd = t.nodes[static_cast<std::size_t>(idx)];
        if (nd.kind == NodeKind::Leaf) continue;
        if (nd.kind == NodeKind::Parallel) {
            pending.insert(pending.end(), nd.children.begin(), nd.children.end());
            continue;
        }

        // expand the maximal series chain hanging off this node
        std::vector<int> flat;
        std::vector<std::pair<int, int>> walk; // node, vertex the chain enters it at
        {
            const std::vector<int>& kids = nd.children;
            for (std::size_t i = kids.size(); i-- > 0;) walk.push_back({kids[i], -1});
            // seed entry vertices left to right
            int cursor = nd.source;
            for (std::size_t i = 0; i < walk.size(); ++i) {
                auto& [child, enter] = walk[walk.size() - 1 - i];
                enter = cursor;
                const SpNode& ch = t.at(child);
                cursor = (ch.source == cursor) ? ch.sink : ch.source;
            }
        }
        while (!walk.empty()) {
            const auto [child, enter] = walk.back();
            walk.pop_back();
            const SpNode& ch = t.at(child);
            if (ch.kind != NodeKind::Series) {
                flat.push_back(child);
                continue;
            }
            // inline the nested chain, oriented to start at `enter`
            const bool forward = (ch.source == enter);
            std::vector<std::pair<int, int>> segment;
            int cursor = enter;
            if (forward) {
                for (const int c : ch.children) {
                    segment.push_back({c, cursor});
                    const SpNode& cc = t.at(c);
                    cursor = (cc.source == cursor) ? cc.sink : cc.source;
                }
            } else {
                for (std::size_t i = ch.children.size(); i-- > 0;) {
                    const int c = ch.children[i];
                    segment.push_back({c, cursor});
                    const SpNode& cc = t.at(c);
                    cursor = (cc.source == cursor) ? cc.sink : cc.source;
                }
            }
            for (std::size_t i = segment.size(); i-- > 0;) walk.push_back(segment[i]);
        }
        nd.children = std::move(flat);
        pending.insert(pending.end(), nd.children.begin(), nd.children.end());
    }
}

} // namespace detail

// Builds the decomposition tree of a connected, loop-free multigraph by
// repeated degree-2 reduction:
//   1. parallel bundles of the input become Parallel nodes over their leaves,
//      leaving a simple working graph;
//   2. each degree-2 vertex merges its two incident edges into a Series node;
//      if that closes a parallel pair the Series node joins (or forms) a
//      Parallel node on the surviving edge;
//   3. after a vertex is processed both neighbours are re-enqueued whenever
//      their degree has become 2.
// Succeeds iff exactly one edge remains, which becomes the root. Trees may be
// n-ary: series chains are flattened and parallel nodes absorb new arrivals.
//
// `worklist_seed` randomizes the order degree-2 vertices are processed in;
// different orders can give different trees, but any tree from the same graph
// evaluates to the same partition function.
inline SpTree build_sp_tree(const WeightedMultigraph& g,
                            std::optional<std::uint64_t> worklist_seed = std::nullopt) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("build_sp_tree: graph needs at least two vertices");
    for (const EdgeRecord& e : g.edges()) {
        if (e.is_loop()) throw std::invalid_argument("build_sp_tree: strip self-loops first");
    }
    {
        detail::UnionFind uf(n);
        int comps = n;
        for (const EdgeRecord& e : g.edges()) {
            if (uf.unite(e.u, e.v) >= 0) --comps;
        }
        if (comps != 1) throw Disconnected("build_sp_tree: graph is not connected");
    }

    SpTree t;
    t.nodes.reserve(2 * g.edge_count() + 2);

    struct Slot {
        int a;
        int b;
        int node;
        bool alive;
    };
    std::vector<Slot> slots;
    std::vector<std::unordered_map<int, int>> adj(static_cast<std::size_t>(n)); // neighbour -> slot

    const auto add_slot = [&](int a, int b, int node_idx) {
        const int s = static_cast<int>(slots.size());
        slots.push_back(Slot{a, b, node_idx, true});
        adj[static_cast<std::size_t>(a)][b] = s;
        adj[static_cast<std::size_t>(b)][a] = s;
    };

    // Group parallel bundles of the input into Parallel nodes up front.
    {
        std::unordered_map<std::uint64_t, std::vector<int>> bundles;
        std::vector<std::uint64_t> order;
        for (const EdgeRecord& e : g.edges()) {
            const int a = std::min(e.u, e.v);
            const int b = std::max(e.u, e.v);
            const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
            auto [it, inserted] = bundles.try_emplace(key);
            if (inserted) order.push_back(key);
            it->second.push_back(e.id);
        }
        for (const std::uint64_t key : order) {
            const std::vector<int>& ids = bundles[key];
            const int a = static_cast<int>(key >> 32);
            const int b = static_cast<int>(key & 0xffffffffu);
            std::vector<int> leaves;
            leaves.reserve(ids.size());
            for (const int id : ids) {
                const EdgeRecord& e = g.edges()[static_cast<std::size_t>(id)];
                t.nodes.push_back(SpNode{NodeKind::Leaf, e.u, e.v, e.id, {}});
                leaves.push_back(static_cast<int>(t.nodes.size()) - 1);
            }
            int node_idx = leaves.front();
            if (leaves.size() > 1) {
                t.nodes.push_back(SpNode{NodeKind::Parallel, a, b, -1, std::move(leaves)});
                node_idx = static_cast<int>(t.nodes.size()) - 1;
            }
            add_slot(a, b, node_idx);
        }
    }

    int live_edges = static_cast<int>(slots.size());

    std::vector<int> worklist;
    for (int v = 0; v < n; ++v) {
        if (adj[static_cast<std::size_t>(v)].size() == 2) worklist.push_back(v);
    }
    std::size_t head = 0;
    std::optional<std::mt19937_64> rng;
    if (worklist_seed) rng.emplace(*worklist_seed);

    while (head < worklist.size()) {
        if (rng) {
            const std::size_t span = worklist.size() - head;
            const std::size_t pick = head + static_cast<std::size_t>((*rng)() % span);
            std::swap(worklist[head], worklist[pick]);
        }
        const int c = worklist[head++];
        auto& nbrs = adj[static_cast<std::size_t>(c)];
        if (nbrs.size() != 2) continue;

        auto it = nbrs.begin();
        int a = it->first;
        int slot_ca = it->second;
        ++it;
        int b = it->first;
        int slot_cb = it->second;
        if (a > b) {
            std::swap(a, b);
            std::swap(slot_ca, slot_cb);
        }

        // Merge the two edges at c into a Series node a -> c -> b. Kept binary
        // here; one flattening pass at the end makes chains n-ary.
        t.nodes.push_back(SpNode{NodeKind::Series, a, b, -1,
                                 {slots[static_cast<std::size_t>(slot_ca)].node,
                                  slots[static_cast<std::size_t>(slot_cb)].node}});
        const int series_idx = static_cast<int>(t.nodes.size()) - 1;

        slots[static_cast<std::size_t>(slot_ca)].alive = false;
        slots[static_cast<std::size_t>(slot_cb)].alive = false;
        adj[static_cast<std::size_t>(a)].erase(c);
        adj[static_cast<std::size_t>(b)].erase(c);
        nbrs.clear();
        live_edges -= 2;

        auto existing = adj[static_cast<std::size_t>(a)].find(b);
        if (existing != adj[static_cast<std::size_t>(a)].end()) {
            Slot& es = slots[static_cast<std::size_t>(existing->second)];
            if (t.at(es.node).kind == NodeKind::Parallel) {
                t.nodes[static_cast<std::size_t>(es.node)].children.push_back(series_idx);
            } else {
                t.nodes.push_back(SpNode{NodeKind::Parallel, a, b, -1, {es.node, series_idx}});
                es.node = static_cast<int>(t.nodes.size()) - 1;
            }
        } else {
            add_slot(a, b, series_idx);
            ++live_edges;
        }

        for (const int x : {a, b}) {
            if (adj[static_cast<std::size_t>(x)].size() == 2) worklist.push_back(x);
        }
    }

    if (live_edges != 1) {
        int touched = 0;
        for (int v = 0; v < n; ++v) {
            if (!adj[static_cast<std::size_t>(v)].empty()) ++touched;
        }
        throw NotSeriesParallel("not series-parallel: " + std::to_string(live_edges) +
                                " edges over " + std::to_string(touched) +
                                " vertices remain after exhausting degree-2 reductions");
    }
    for (const Slot& s : slots) {
        if (s.alive) {
            t.root = s.node;
            break;
        }
    }
    detail::flatten_series_chains(t);
    return t;
}

// True iff the tree is structurally sound for g: distinct terminals
// everywhere, leaves in bijection with g's edge ids and matching their
// endpoints, internal nodes with >= 2 children, parallel children sharing
// the parent's terminals, series children chaining terminal-to-terminal.
inline bool validate_tree(const SpTree& t, const WeightedMultigraph& g) {
    if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) return false;
    std::vector<char> edge_seen(g.edge_count(), 0);
    std::vector<char> visited(t.nodes.size(), 0);
    std::size_t leaves = 0;

    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        const int idx = stack.back();
        stack.pop_back();
        if (idx < 0 || idx >= static_cast<int>(t.nodes.size())) return false;
        if (visited[static_cast<std::size_t>(idx)]) return false; // sharing/cycle
        visited[static_cast<std::size_t>(idx)] = 1;

        const SpNode& nd = t.at(idx);
        if (nd.source == nd.sink || nd.source < 0 || nd.sink < 0 ||
            nd.source >= g.vertex_count() || nd.sink >= g.vertex_count()) {
            return false;
        }

        if (nd.kind == NodeKind::Leaf) {
            if (!nd.children.empty()) return false;
            if (nd.edge_id < 0 || nd.edge_id >= static_cast<int>(g.edge_count())) return false;
            if (edge_seen[static_cast<std::size_t>(nd.edge_id)]) return false;
            edge_seen[static_cast<std::size_t>(nd.edge_id)] = 1;
            ++leaves;
            const EdgeRecord& e = g.edges()[static_cast<std::size_t>(nd.edge_id)];
            const bool forward = (nd.source == e.u && nd.sink == e.v);
            const bool backward = (nd.source == e.v && nd.sink == e.u);
            if (!forward && !backward) return false;
            continue;
        }

        if (nd.edge_id != -1) return false;
        if (nd.children.size() < 2) return false;

        if (nd.kind == NodeKind::Parallel) {
            for (const int c : nd.children) {
                if (c < 0 || c >= static_cast<int>(t.nodes.size())) return false;
                const SpNode& ch = t.at(c);
                const bool same = (ch.source == nd.source && ch.sink == nd.sink) ||
                                  (ch.source == nd.sink && ch.sink == nd.source);
                if (!same) return false;
            }
        } else { // Series: children must chain from source to sink
            int cursor = nd.source;
            for (const int c : nd.children) {
                if (c < 0 || c >= static_cast<int>(t.nodes.size())) return false;
                const SpNode& ch = t.at(c);
                if (ch.source == cursor) {
                    cursor = ch.sink;
                } else if (ch.sink == cursor) {
                    cursor = ch.source;
                } else {
                    return false;
                }
            }
            if (cursor != nd.sink) return false;
        }
        stack.insert(stack.end(), nd.children.begin(), nd.children.end());
    }

    return leaves == g.edge_count();
}

// Text rendering for the CLI: one node per line, two-space indent per depth,
// leaves as Q(edge_id), internal nodes as S(source,sink) / P(source,sink),
// children ordered by the smallest leaf edge id in their subtree.
inline std::string tree_to_text(const SpTree& t) {
    if (t.root < 0) return "";

    std::vector<int> min_leaf(t.nodes.size(), -1);
    {
        std::vector<std::pair<int, bool>> stack{{t.root, false}};
        while (!stack.empty()) {
            auto [idx, expanded] = stack.back();
            stack.pop_back();
            const SpNode& nd = t.at(idx);
            if (nd.kind == NodeKind::Leaf) {
                min_leaf[static_cast<std::size_t>(idx)] = nd.edge_id;
                continue;
            }
            if (!expanded) {
                stack.push_back({idx, true});
                for (const int c : nd.children) stack.push_back({c, false});
            } else {
                int best = -1;
                for (const int c : nd.children) {
                    const int m = min_leaf[static_cast<std::size_t>(c)];
                    if (best < 0 || m < best) best = m;
                }
                min_leaf[static_cast<std::size_t>(idx)] = best;
            }
        }
    }

    std::string out;
    std::vector<std::pair<int, int>> stack{{t.root, 0}}; // node, depth
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        const SpNode& nd = t.at(idx);
        out.append(static_cast<std::size_t>(2 * depth), ' ');
        switch (nd.kind) {
        case NodeKind::Leaf:
            out += "Q(" + std::to_string(nd.edge_id) + ")";
            break;
        case NodeKind::Series:
            out += "S(" + std::to_string(nd.source) + "," + std::to_string(nd.sink) + ")";
            break;
        case NodeKind::Parallel:
            out += "P(" + std::to_string(nd.source) + "," + std::to_string(nd.sink) + ")";
            break;
        }
        out += "\n";
        std::vector<int> kids = nd.children;
        std::sort(kids.begin(), kids.end(), [&](int x, int y) {
            return min_leaf[static_cast<std::size_t>(x)] > min_leaf[static_cast<std::size_t>(y)];
        });
        for (const int c : kids) stack.push_back({c, depth + 1});
    }
    return out;
}

} // namespace sptutte
