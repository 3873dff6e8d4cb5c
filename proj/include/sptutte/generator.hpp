#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sptutte/graph.hpp"

namespace sptutte {

// Parameters for the seeded random two-terminal series-parallel generator.
// The same spec always yields the same graph.
struct GeneratorSpec {
    int composition_ops = 0;            // graph ends up with composition_ops + 1 edges
    std::uint64_t seed = 0;
    Rational weight_min{1, 100000};
    Rational weight_max{1, 20};
    Rational series_bias{1, 2};         // probability that a composition is series
};

namespace detail {

inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n) {
    // unbiased modulo via rejection
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

inline Rational rational_in_range(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    constexpr long long kGrid = 1LL << 20;
    const long long k = static_cast<long long>(bounded_uniform(rng, kGrid + 1));
    return lo + (hi - lo) * Rational(k, kGrid);
}

inline bool coin(std::mt19937_64& rng, const Rational& bias) {
    // compare a 53-bit draw against the bias, exactly
    const long long r = static_cast<long long>(rng() >> 11);
    return Rational(r, 1LL << 53) < bias;
}

} // namespace detail

// Builds a random SP graph by composing a pool of single edges: start with
// composition_ops + 1 two-vertex components, then repeatedly merge two random
// components in series or parallel until one remains. Vertices are numbered
// by a final depth-first materialization pass (terminals are 0 and 1), edge
// ids follow that pass, and edge weights are drawn up front in leaf order, so
// the output is a pure function of the spec.
inline WeightedMultigraph random_sp_graph(const GeneratorSpec& spec) {
    if (spec.composition_ops < 0) throw std::invalid_argument("composition_ops must be >= 0");
    if (spec.weight_max < spec.weight_min) throw std::invalid_argument("weight_min must be <= weight_max");
    if (spec.series_bias < Rational(0) || spec.series_bias > Rational(1)) {
        throw std::invalid_argument("series_bias must lie in [0, 1]");
    }

    std::mt19937_64 rng(spec.seed);
    const int leaves = spec.composition_ops + 1;

    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(leaves));
    for (int i = 0; i < leaves; ++i) {
        weights.push_back(detail::rational_in_range(rng, spec.weight_min, spec.weight_max));
    }

    struct Node {
        enum Kind { Leaf, Series, Parallel } kind;
        int left = -1;
        int right = -1;
        int leaf_index = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(2 * leaves));
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(leaves));
    for (int i = 0; i < leaves; ++i) {
        nodes.push_back(Node{Node::Leaf, -1, -1, i});
        pool.push_back(i);
    }

    while (pool.size() > 1) {
        const std::size_t i = static_cast<std::size_t>(detail::bounded_uniform(rng, pool.size()));
        const int a = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        const std::size_t j = static_cast<std::size_t>(detail::bounded_uniform(rng, pool.size()));
        const int b = pool[j];
        pool[j] = pool.back();
        pool.pop_back();

        const bool series = detail::coin(rng, spec.series_bias);
        nodes.push_back(Node{series ? Node::Series : Node::Parallel, a, b, -1});
        pool.push_back(static_cast<int>(nodes.size()) - 1);
    }

    // Materialize: terminals of the whole graph are vertices 0 (source) and
    // 1 (sink); each series node allocates one middle vertex.
    int vertex_counter = 2;
    struct Frame {
        int node;
        int s;
        int t;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{pool.front(), 0, 1});

    std::vector<std::array<int, 3>> emitted; // (u, v, leaf_index)
    emitted.reserve(static_cast<std::size_t>(leaves));
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const Node& nd = nodes[static_cast<std::size_t>(f.node)];
        switch (nd.kind) {
        case Node::Leaf:
            emitted.push_back({f.s, f.t, nd.leaf_index});
            break;
        case Node::Series: {
            const int mid = vertex_counter++;
            stack.push_back(Frame{nd.right, mid, f.t});
            stack.push_back(Frame{nd.left, f.s, mid});
            break;
        }
        case Node::Parallel:
            stack.push_back(Frame{nd.right, f.s, f.t});
            stack.push_back(Frame{nd.left, f.s, f.t});
            break;
        }
    }

    WeightedMultigraph g(vertex_counter);
    for (const auto& e : emitted) {
        g.add_edge(e[0], e[1], weights[static_cast<std::size_t>(e[2])]);
    }
    return g;
}

} // namespace sptutte
