#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sptutte/errors.hpp"
#include "sptutte/graph.hpp"

namespace sptutte {

// Independent ground truth for the partition function: literal enumeration
// of all 2^|E| edge subsets. Deliberately shares nothing with the reduction
// pipeline. Capped at 24 edges.
inline constexpr int kBruteForceEdgeCap = 24;

// Per-subset weight sums bucketed by component count: entry K holds
// sum over subsets A with K components of prod_{e in A} v_e, for K in
// [1, |V|]. The partition function at any q is then sum_K q^K * sums[K].
//
// The enumeration walks an include/exclude tree over the edges carrying an
// integer product (weights are cleared of denominators up front) and a
// rollback union-find for the component count, so each subset costs O(1)
// arithmetic on top of its parent.
inline std::vector<Rational> subset_weight_sums(const WeightedMultigraph& g) {
    const int m = static_cast<int>(g.edge_count());
    if (m > kBruteForceEdgeCap) {
        throw TooLarge("brute force is capped at " + std::to_string(kBruteForceEdgeCap) +
                       " edges, got " + std::to_string(m));
    }
    const int n = g.vertex_count();

    // Clear denominators: with D = prod_e den(v_e), every subset product of
    // numerator/denominator picks, times the missing denominators, is an
    // integer; divide D back out at the end.
    std::vector<Rational> nums;
    std::vector<Rational> dens;
    Rational den_product(1);
    nums.reserve(static_cast<std::size_t>(m));
    dens.reserve(static_cast<std::size_t>(m));
    for (const EdgeRecord& e : g.edges()) {
        nums.push_back(e.weight.numerator());
        dens.push_back(e.weight.denominator());
        den_product *= dens.back();
    }

    std::vector<Rational> bucket(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<Rational> product(static_cast<std::size_t>(m) + 1, Rational(0));
    product[0] = Rational(1);

    detail::UnionFind uf(n);
    int components = n;

    const auto recurse = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            bucket[static_cast<std::size_t>(components)] += product[static_cast<std::size_t>(depth)];
            return;
        }
        const EdgeRecord& e = g.edges()[static_cast<std::size_t>(depth)];
        // exclude edge `depth`
        product[static_cast<std::size_t>(depth) + 1] =
            product[static_cast<std::size_t>(depth)] * dens[static_cast<std::size_t>(depth)];
        self(self, depth + 1);
        // include edge `depth`
        int attached = -1;
        if (!e.is_loop()) {
            attached = uf.unite(e.u, e.v);
            if (attached >= 0) --components;
        }
        product[static_cast<std::size_t>(depth) + 1] =
            product[static_cast<std::size_t>(depth)] * nums[static_cast<std::size_t>(depth)];
        self(self, depth + 1);
        if (attached >= 0) {
            uf.detach(attached);
            ++components;
        }
    };
    recurse(recurse, 0);

    for (Rational& b : bucket) b /= den_product;
    return bucket;
}

// Z(q) = sum over all edge subsets A of q^{K(A)} prod_{e in A} v_e, where
// K(A) counts connected components of (V, A). Exact; |E| <= 24.
inline Rational brute_force_z(const WeightedMultigraph& g, const Rational& q) {
    const std::vector<Rational> sums = subset_weight_sums(g);
    Rational z(0);
    Rational qk(1);
    for (std::size_t k = 1; k < sums.size(); ++k) {
        qk *= q;
        z += qk * sums[k];
    }
    return z;
}

// Generic-scalar variant of the subset enumeration, used by the benchmark to
// time the direct computation in float mode and as an internal cross-check of
// the integer-product route at small sizes.
template <class T>
T brute_force_with(const WeightedMultigraph& g, std::span<const std::type_identity_t<T>> weights,
                   const T& q) {
    const int m = static_cast<int>(g.edge_count());
    if (m > kBruteForceEdgeCap) {
        throw TooLarge("brute force is capped at " + std::to_string(kBruteForceEdgeCap) +
                       " edges, got " + std::to_string(m));
    }
    const int n = g.vertex_count();

    std::vector<T> bucket(static_cast<std::size_t>(n) + 1, T(0));
    std::vector<T> product(static_cast<std::size_t>(m) + 1, T(0));
    product[0] = T(1);

    detail::UnionFind uf(n);
    int components = n;

    const auto recurse = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            bucket[static_cast<std::size_t>(components)] += product[static_cast<std::size_t>(depth)];
            return;
        }
        const EdgeRecord& e = g.edges()[static_cast<std::size_t>(depth)];
        product[static_cast<std::size_t>(depth) + 1] = product[static_cast<std::size_t>(depth)];
        self(self, depth + 1);
        int attached = -1;
        if (!e.is_loop()) {
            attached = uf.unite(e.u, e.v);
            if (attached >= 0) --components;
        }
        product[static_cast<std::size_t>(depth) + 1] =
            product[static_cast<std::size_t>(depth)] * weights[static_cast<std::size_t>(depth)];
        self(self, depth + 1);
        if (attached >= 0) {
            uf.detach(attached);
            ++components;
        }
    };
    recurse(recurse, 0);

    T z(0);
    T qk(1);
    for (std::size_t k = 1; k < bucket.size(); ++k) {
        qk *= q;
        z += qk * bucket[k];
    }
    return z;
}

template <class T>
T brute_force_with(const WeightedMultigraph& g, const std::vector<T>& weights, const T& q) {
    return brute_force_with<T>(g, std::span<const T>(weights), q);
}

// Exhaustive proper-coloring count. A self-loop makes every coloring
// improper. Backtracks over vertices in index order, checking only edges to
// already-colored vertices, so the work is bounded by the number of proper
// partial colorings (and by q^|V|, which is capped at 10^8).
inline long long count_proper_colorings(const WeightedMultigraph& g, long long q) {
    if (q < 1) throw std::invalid_argument("count_proper_colorings: q must be >= 1");
    for (const EdgeRecord& e : g.edges()) {
        if (e.is_loop()) return 0;
    }
    if (q == 1) return g.edge_count() == 0 ? 1 : 0;

    const int n = g.vertex_count();
    {
        double total = 1.0;
        for (int i = 0; i < n; ++i) {
            total *= static_cast<double>(q);
            if (total > 1e8) {
                throw TooLarge("coloring enumeration is capped at q^|V| <= 1e8");
            }
        }
    }

    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
    for (const EdgeRecord& e : g.edges()) {
        const int lo = std::min(e.u, e.v);
        const int hi = std::max(e.u, e.v);
        earlier[static_cast<std::size_t>(hi)].push_back(lo);
    }

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    long long count = 0;
    const auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (const int u : earlier[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[static_cast<std::size_t>(v)] = c;
                self(self, v + 1);
            }
        }
        color[static_cast<std::size_t>(v)] = -1;
    };
    recurse(recurse, 0);
    return count;
}

} // namespace sptutte
