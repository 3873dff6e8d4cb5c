#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sptutte/rational.hpp"

namespace sptutte {

struct EdgeRecord {
    int id = -1;
    int u = -1;
    int v = -1;
    Rational weight;

    bool is_loop() const { return u == v; }

    friend bool operator==(const EdgeRecord& a, const EdgeRecord& b) {
        return a.id == b.id && a.u == b.u && a.v == b.v && a.weight == b.weight;
    }
};

// Undirected multigraph with per-edge rational weights. Parallel edges and
// self-loops are allowed. Edge ids are dense, 0-based, in insertion order.
// Instances are treated as immutable once fully constructed.
class WeightedMultigraph {
public:
    explicit WeightedMultigraph(int vertex_count) : vertex_count_(vertex_count) {
        if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
    }

    int add_edge(int u, int v, Rational weight) {
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        const int id = static_cast<int>(edges_.size());
        edges_.push_back(EdgeRecord{id, u, v, std::move(weight)});
        return id;
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Incident edge count per vertex; a self-loop contributes 2.
    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
        for (const EdgeRecord& e : edges_) {
            deg[static_cast<std::size_t>(e.u)] += 1;
            deg[static_cast<std::size_t>(e.v)] += 1;
        }
        return deg;
    }

    friend bool operator==(const WeightedMultigraph& a, const WeightedMultigraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_;
    std::vector<EdgeRecord> edges_;
};

namespace detail {

// Plain union-find, rebuilt per use; no path compression so unions can be
// rolled back by the subset-enumeration oracle.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    // Returns the root that was attached, or -1 if already joined.
    int unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return -1;
        if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<std::size_t>(rb)] = ra;
        size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
        return rb;
    }

    void detach(int attached_root) {
        const int parent = parent_[static_cast<std::size_t>(attached_root)];
        parent_[static_cast<std::size_t>(attached_root)] = attached_root;
        size_[static_cast<std::size_t>(parent)] -= size_[static_cast<std::size_t>(attached_root)];
    }

private:
    std::vector<int> parent_;
    std::vector<long long> size_;
};

} // namespace detail

// Maximal connected vertex sets, each sorted ascending, ordered by smallest
// member. Self-loops do not affect connectivity.
inline std::vector<std::vector<int>> connected_components(const WeightedMultigraph& g) {
    detail::UnionFind uf(g.vertex_count());
    for (const EdgeRecord& e : g.edges()) {
        if (!e.is_loop()) uf.unite(e.u, e.v);
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        by_root[static_cast<std::size_t>(uf.find(v))].push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& group : by_root) {
        if (!group.empty()) out.push_back(std::move(group));
    }
    return out;
}

} // namespace sptutte
