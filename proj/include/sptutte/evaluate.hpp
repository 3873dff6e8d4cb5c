#pragma once

#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "sptutte/errors.hpp"
#include "sptutte/graph.hpp"
#include "sptutte/reduction.hpp"
#include "sptutte/sp_tree.hpp"

namespace sptutte {

// One pointwise evaluation request. q = 0 is answered as 0 without touching
// the reduction algebra: every edge subset keeps at least one component, so
// the partition function vanishes identically there.
struct EvalRequest {
    WeightedMultigraph graph;
    Rational q;
    std::optional<Rational> weight_override; // applied to every edge, e.g. -1
    bool reduce_pendants = false;
};

// Depth-first fold of a decomposition tree into a single equivalent edge.
// Leaves yield (edge weight, 1); parallel nodes combine child weights with
// the parallel rule and multiply child prefactors; series nodes combine with
// the series rule, multiplying its prefactor in. Iterative so arbitrarily
// deep trees are fine.
template <class T>
EffectiveEdge<T> fold_tree(const SpTree& t, std::span<const std::type_identity_t<T>> weights, const T& q) {
    std::vector<EffectiveEdge<T>> results(t.nodes.size(), EffectiveEdge<T>{T(0), T(0)});
    std::vector<std::pair<int, std::size_t>> stack; // node, next child to visit
    stack.push_back({t.root, 0});

    while (!stack.empty()) {
        auto& [idx, next_child] = stack.back();
        const SpNode& nd = t.at(idx);

        if (nd.kind == NodeKind::Leaf) {
            results[static_cast<std::size_t>(idx)] =
                EffectiveEdge<T>{weights[static_cast<std::size_t>(nd.edge_id)], T(1)};
            stack.pop_back();
            continue;
        }
        if (next_child < nd.children.size()) {
            const int child = nd.children[next_child];
            ++next_child;
            stack.push_back({child, 0});
            continue;
        }

        std::vector<T> child_weights;
        child_weights.reserve(nd.children.size());
        T pref(1);
        for (const int c : nd.children) {
            const EffectiveEdge<T>& r = results[static_cast<std::size_t>(c)];
            child_weights.push_back(r.weight);
            pref *= r.prefactor;
        }

        if (nd.kind == NodeKind::Parallel) {
            results[static_cast<std::size_t>(idx)] =
                EffectiveEdge<T>{parallel_weight(child_weights), std::move(pref)};
        } else {
            try {
                EffectiveEdge<T> se = series_weight(child_weights, q);
                se.prefactor *= pref;
                results[static_cast<std::size_t>(idx)] = std::move(se);
            } catch (const SingularPoint& e) {
                throw SingularPoint(e.what(), e.q_text(), nd.source, nd.sink);
            }
        }
        stack.pop_back();
    }
    return results[static_cast<std::size_t>(t.root)];
}

template <class T>
EffectiveEdge<T> fold_tree(const SpTree& t, const std::vector<T>& weights, const T& q) {
    return fold_tree<T>(t, std::span<const T>(weights), q);
}

// Equivalent single-edge weight of a whole decomposition tree, with the
// weights taken from the graph the tree was built from.
inline EffectiveEdge<Rational> effective_weight(const SpTree& t, const WeightedMultigraph& g,
                                                const Rational& q) {
    std::vector<Rational> weights;
    weights.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) weights.push_back(e.weight);
    return fold_tree<Rational>(t, weights, q);
}

// A graph preprocessed for evaluation at many q points: self-loops are pulled
// out as a constant factor prod(1 + v), isolated vertices contribute a factor
// q each, optional degree-1 stripping contributes (q + v) per removed vertex,
// and every remaining connected component carries a prebuilt decomposition
// tree. Building this once and calling at() repeatedly is what the polynomial
// recovery does.
template <class T>
class PreparedEvaluation {
public:
    static PreparedEvaluation prepare(const WeightedMultigraph& g,
                                      std::span<const std::type_identity_t<T>> weights,
                                      bool reduce_pendants) {
        PreparedEvaluation prep;
        const int n = g.vertex_count();

        std::vector<char> edge_alive(g.edge_count(), 1);
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
        for (const EdgeRecord& e : g.edges()) {
            if (e.is_loop()) {
                prep.loop_factor_ *= T(1) + weights[static_cast<std::size_t>(e.id)];
                edge_alive[static_cast<std::size_t>(e.id)] = 0;
                continue;
            }
            incident[static_cast<std::size_t>(e.u)].push_back(e.id);
            incident[static_cast<std::size_t>(e.v)].push_back(e.id);
            degree[static_cast<std::size_t>(e.u)] += 1;
            degree[static_cast<std::size_t>(e.v)] += 1;
        }

        std::vector<char> consumed(static_cast<std::size_t>(n), 0);
        if (reduce_pendants) {
            std::vector<int> queue;
            for (int v = 0; v < n; ++v) {
                if (degree[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
            }
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int v = queue[head];
                if (degree[static_cast<std::size_t>(v)] != 1) continue;
                int live = -1;
                for (const int id : incident[static_cast<std::size_t>(v)]) {
                    if (edge_alive[static_cast<std::size_t>(id)]) {
                        live = id;
                        break;
                    }
                }
                const EdgeRecord& e = g.edges()[static_cast<std::size_t>(live)];
                // the stripped vertex is absorbed into the (q + v) factor
                prep.pendant_weights_.push_back(weights[static_cast<std::size_t>(live)]);
                edge_alive[static_cast<std::size_t>(live)] = 0;
                consumed[static_cast<std::size_t>(v)] = 1;
                const int other = (e.u == v) ? e.v : e.u;
                degree[static_cast<std::size_t>(v)] -= 1;
                degree[static_cast<std::size_t>(other)] -= 1;
                if (degree[static_cast<std::size_t>(other)] == 1) queue.push_back(other);
            }
        }

        for (int v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 0 && !consumed[static_cast<std::size_t>(v)]) {
                prep.isolated_ += 1;
            }
        }

        // Split the surviving edges into connected components and build one
        // decomposition tree per component.
        detail::UnionFind uf(n);
        for (const EdgeRecord& e : g.edges()) {
            if (edge_alive[static_cast<std::size_t>(e.id)]) uf.unite(e.u, e.v);
        }
        std::vector<int> comp_of_root(static_cast<std::size_t>(n), -1);
        struct Builder {
            std::vector<int> edge_ids;
            std::vector<int> vertices;
            std::vector<int> local_of; // aligned with vertices
        };
        std::vector<Builder> builders;
        std::vector<int> local_index(static_cast<std::size_t>(n), -1);
        for (const EdgeRecord& e : g.edges()) {
            if (!edge_alive[static_cast<std::size_t>(e.id)]) continue;
            const int root = uf.find(e.u);
            int& slot = comp_of_root[static_cast<std::size_t>(root)];
            if (slot < 0) {
                slot = static_cast<int>(builders.size());
                builders.emplace_back();
            }
            Builder& bld = builders[static_cast<std::size_t>(slot)];
            bld.edge_ids.push_back(e.id);
            for (const int v : {e.u, e.v}) {
                if (local_index[static_cast<std::size_t>(v)] < 0) {
                    local_index[static_cast<std::size_t>(v)] = static_cast<int>(bld.vertices.size());
                    bld.vertices.push_back(v);
                }
            }
        }

        for (Builder& bld : builders) {
            WeightedMultigraph local(static_cast<int>(bld.vertices.size()));
            Component comp;
            comp.weights.reserve(bld.edge_ids.size());
            for (const int id : bld.edge_ids) {
                const EdgeRecord& e = g.edges()[static_cast<std::size_t>(id)];
                local.add_edge(local_index[static_cast<std::size_t>(e.u)],
                               local_index[static_cast<std::size_t>(e.v)], e.weight);
                comp.weights.push_back(weights[static_cast<std::size_t>(id)]);
            }
            comp.tree = build_sp_tree(local);
            comp.vertex_map = std::move(bld.vertices);
            prep.comps_.push_back(std::move(comp));
        }
        return prep;
    }

    static PreparedEvaluation prepare(const WeightedMultigraph& g, const std::vector<T>& weights,
                                      bool reduce_pendants) {
        return prepare(g, std::span<const T>(weights), reduce_pendants);
    }

    // Exact partition function value at q. Throws SingularPoint (with the
    // offending terminals in original vertex numbering) when a series
    // denominator vanishes at this q.
    T at(const T& q) const {
        if (q == T(0)) return T(0);
        T z = loop_factor_;
        for (long i = 0; i < isolated_; ++i) z *= q;
        for (const T& w : pendant_weights_) z *= q + w;
        for (const Component& comp : comps_) {
            EffectiveEdge<T> eff;
            try {
                eff = fold_tree<T>(comp.tree, std::span<const T>(comp.weights), q);
            } catch (const SingularPoint& e) {
                if (e.has_terminals()) {
                    const int s = comp.vertex_map[static_cast<std::size_t>(e.source())];
                    const int t = comp.vertex_map[static_cast<std::size_t>(e.sink())];
                    throw SingularPoint(std::string(e.what()) + " between vertices " +
                                            std::to_string(s) + " and " + std::to_string(t),
                                        e.q_text(), s, t);
                }
                throw;
            }
            z *= (q * q + q * eff.weight) * eff.prefactor;
        }
        return z;
    }

    std::size_t component_count() const { return comps_.size(); }

private:
    struct Component {
        SpTree tree;
        std::vector<T> weights;
        std::vector<int> vertex_map; // local vertex -> original vertex
    };

    T loop_factor_{1};
    long isolated_ = 0;
    std::vector<T> pendant_weights_;
    std::vector<Component> comps_;
};

namespace detail {

inline std::vector<Rational> request_weights(const WeightedMultigraph& g,
                                             const std::optional<Rational>& override_value) {
    std::vector<Rational> weights;
    weights.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) {
        weights.push_back(override_value ? *override_value : e.weight);
    }
    return weights;
}

} // namespace detail

// Exact Potts partition function of an arbitrary multigraph whose non-trivial
// components are series-parallel. Disconnected inputs multiply per-component
// values. Returns 0 at q = 0 by identity (see EvalRequest).
inline Rational evaluate(const EvalRequest& req) {
    const auto weights = detail::request_weights(req.graph, req.weight_override);
    const auto prep = PreparedEvaluation<Rational>::prepare(req.graph, weights, req.reduce_pendants);
    return prep.at(req.q);
}

} // namespace sptutte
