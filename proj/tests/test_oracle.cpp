#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <sptutte/generator.hpp>
#include <sptutte/oracle.hpp>

#include "test_support.hpp"

using namespace sptutte;
using namespace testsupport;

TEST_CASE("brute force on tiny graphs") {
    CHECK(brute_force_z(k2(Rational(1)), Rational(3)) == Rational(12));
    CHECK(brute_force_z(triangle(Rational(1)), Rational(2)) == Rational(28));
    CHECK(brute_force_z(WeightedMultigraph(3), Rational(5)) == Rational(125));
}

TEST_CASE("brute force handles self-loops and rational q") {
    // a loop of weight v multiplies everything by (1 + v)
    WeightedMultigraph g(2);
    g.add_edge(0, 1, Rational(1, 2));
    const Rational base = brute_force_z(g, Rational(3, 2));
    g.add_edge(1, 1, Rational(7));
    CHECK(brute_force_z(g, Rational(3, 2)) == base * Rational(8));
}

TEST_CASE("edge cap is enforced") {
    WeightedMultigraph g(2);
    for (int i = 0; i < 25; ++i) g.add_edge(0, 1, Rational(1));
    CHECK_THROWS_AS(brute_force_z(g, Rational(2)), TooLarge);
    CHECK_THROWS_AS(subset_weight_sums(g), TooLarge);
}

TEST_CASE("subset sums reproduce the partition function at every q") {
    GeneratorSpec spec;
    spec.composition_ops = 9;
    spec.seed = 4;
    const auto g = random_sp_graph(spec);
    const auto sums = subset_weight_sums(g);
    REQUIRE(sums.size() == static_cast<std::size_t>(g.vertex_count()) + 1);
    for (long long k = 1; k <= 4; ++k) {
        const Rational q(k);
        Rational z(0);
        Rational qs(1);
        for (std::size_t i = 1; i < sums.size(); ++i) {
            qs *= q;
            z += qs * sums[i];
        }
        CHECK(z == brute_force_z(g, q));
    }
}

TEST_CASE("all-zero weights give q^V and all-(-1) counts colorings") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorSpec spec;
        spec.composition_ops = 1 + trial % 8;
        spec.seed = 700 + static_cast<std::uint64_t>(trial);
        const auto g = random_sp_graph(spec);

        const auto zeros = with_all_weights(g, Rational(0));
        const Rational q(2 + trial % 3);
        CHECK(brute_force_z(zeros, q) == q.pow(g.vertex_count()));

        const auto chromatic = with_all_weights(g, Rational(-1));
        for (long long qi = 1; qi <= 3; ++qi) {
            CHECK(brute_force_z(chromatic, Rational(qi)) ==
                  Rational(count_proper_colorings(g, qi)));
        }
    }
}

TEST_CASE("deletion-contraction identity at small sizes") {
    // Z(G) = Z(G - e) + v_e * Z(G / e) for a non-loop edge e
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        GeneratorSpec spec;
        spec.composition_ops = 2 + trial % 8; // at most 10 edges
        spec.seed = 5150 + static_cast<std::uint64_t>(trial);
        const auto g = random_sp_graph(spec);
        std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
        const EdgeRecord target = g.edges()[pick(rng)];

        WeightedMultigraph deleted(g.vertex_count());
        for (const auto& e : g.edges()) {
            if (e.id != target.id) deleted.add_edge(e.u, e.v, e.weight);
        }

        // contract: relabel target.v to target.u, drop the contracted edge
        const int keep = std::min(target.u, target.v);
        const int gone = std::max(target.u, target.v);
        WeightedMultigraph contracted(g.vertex_count() - 1);
        const auto relabel = [&](int v) {
            if (v == gone) return keep;
            return v > gone ? v - 1 : v;
        };
        for (const auto& e : g.edges()) {
            if (e.id == target.id) continue;
            contracted.add_edge(relabel(e.u), relabel(e.v), e.weight);
        }

        const Rational q(3);
        CHECK(brute_force_z(g, q) ==
              brute_force_z(deleted, q) + target.weight * brute_force_z(contracted, q));
    }
}

TEST_CASE("generic-scalar enumeration agrees with the integer-product route") {
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorSpec spec;
        spec.composition_ops = 1 + trial;
        spec.seed = 31 + static_cast<std::uint64_t>(trial);
        const auto g = random_sp_graph(spec);
        std::vector<Rational> weights;
        for (const auto& e : g.edges()) weights.push_back(e.weight);
        const Rational q(5, 2);
        CHECK(brute_force_with<Rational>(g, weights, q) == brute_force_z(g, q));
    }
}

TEST_CASE("coloring counts") {
    CHECK(count_proper_colorings(k2(), 2) == 2);
    CHECK(count_proper_colorings(triangle(), 3) == 6);
    CHECK(count_proper_colorings(triangle(), 2) == 0);
    CHECK(count_proper_colorings(cycle_graph(4, Rational(1)), 3) == 18);
    CHECK(count_proper_colorings(WeightedMultigraph(3), 2) == 8);
    CHECK(count_proper_colorings(complete_graph(4), 3) == 0);
    CHECK(count_proper_colorings(complete_graph(4), 4) == 24);

    WeightedMultigraph loop(1);
    loop.add_edge(0, 0, Rational(1));
    CHECK(count_proper_colorings(loop, 5) == 0);

    CHECK_THROWS_AS(count_proper_colorings(k2(), 0), std::invalid_argument);
    WeightedMultigraph big(40);
    for (int i = 0; i + 1 < 40; ++i) big.add_edge(i, i + 1, Rational(1));
    CHECK_THROWS_AS(count_proper_colorings(big, 3), TooLarge);

    // q = 1: one coloring when there is nothing to violate
    CHECK(count_proper_colorings(WeightedMultigraph(4), 1) == 1);
    CHECK(count_proper_colorings(k2(), 1) == 0);
}
