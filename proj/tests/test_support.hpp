#pragma once

// Shared builders and random helpers for the test suites.

#include <random>
#include <vector>

#include <sptutte/sptutte.hpp>

namespace testsupport {

using sptutte::Rational;
using sptutte::WeightedMultigraph;

inline WeightedMultigraph k2(const Rational& w = Rational(1)) {
    WeightedMultigraph g(2);
    g.add_edge(0, 1, w);
    return g;
}

inline WeightedMultigraph path_graph(const std::vector<Rational>& weights) {
    WeightedMultigraph g(static_cast<int>(weights.size()) + 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        g.add_edge(static_cast<int>(i), static_cast<int>(i) + 1, weights[i]);
    }
    return g;
}

inline WeightedMultigraph cycle_graph(int n, const Rational& w) {
    WeightedMultigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, w);
    return g;
}

inline WeightedMultigraph triangle(const Rational& w = Rational(1)) { return cycle_graph(3, w); }

inline WeightedMultigraph complete_graph(int n, const Rational& w = Rational(1)) {
    WeightedMultigraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, w);
    }
    return g;
}

inline WeightedMultigraph petersen(const Rational& w = Rational(1)) {
    WeightedMultigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, w);          // outer cycle
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5, w);                // spokes
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5, w);  // pentagram
    return g;
}

// Two vertices joined by one series path per level; the gadget the necklace
// reduction collapses in one step.
inline WeightedMultigraph necklace_graph(const std::vector<std::vector<Rational>>& levels) {
    int n = 2;
    for (const auto& level : levels) n += static_cast<int>(level.size()) - 1;
    WeightedMultigraph g(n);
    int next = 2;
    for (const auto& level : levels) {
        int prev = 0;
        for (std::size_t j = 0; j < level.size(); ++j) {
            const bool last = (j + 1 == level.size());
            const int to = last ? 1 : next++;
            g.add_edge(prev, to, level[j]);
            prev = to;
        }
    }
    return g;
}

inline WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b) {
    WeightedMultigraph g(a.vertex_count() + b.vertex_count());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v, e.weight);
    for (const auto& e : b.edges()) {
        g.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count(), e.weight);
    }
    return g;
}

// Uniform random rational with numerator in [-span, span] and denominator in
// [1, span]; occasionally exactly zero or a small integer.
inline Rational random_rational(std::mt19937_64& rng, long long span = 50) {
    std::uniform_int_distribution<long long> num(-span, span);
    std::uniform_int_distribution<long long> den(1, span);
    return Rational(num(rng), den(rng));
}

inline Rational random_positive_rational(std::mt19937_64& rng, long long span = 50) {
    std::uniform_int_distribution<long long> num(1, span);
    std::uniform_int_distribution<long long> den(1, span);
    return Rational(num(rng), den(rng));
}

inline WeightedMultigraph with_all_weights(const WeightedMultigraph& g, const Rational& w) {
    WeightedMultigraph out(g.vertex_count());
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v, w);
    return out;
}

} // namespace testsupport
