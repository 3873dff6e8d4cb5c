#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <sptutte/oracle.hpp>
#include <sptutte/reduction.hpp>

#include "test_support.hpp"

using namespace sptutte;
using namespace testsupport;

namespace {

// A reduction replacing a two-terminal gadget by a single edge (w, pref) must
// preserve the partition function: (q^2 + q w) * pref equals the brute-force
// value of the gadget.
void check_preserves_z(const WeightedMultigraph& gadget, const EffectiveEdge<Rational>& eff,
                       const Rational& q) {
    const Rational reduced = (q * q + q * eff.weight) * eff.prefactor;
    CHECK(reduced == brute_force_z(gadget, q));
}

} // namespace

TEST_CASE("parallel weight basics") {
    CHECK(parallel_weight<Rational>({{Rational(7, 3)}}) == Rational(7, 3));
    CHECK(parallel_weight<Rational>({{Rational(0), Rational(5, 2)}}) == Rational(5, 2));
    // double edge with unit weights acts like one edge of weight 3:
    // brute force on the 2-vertex double edge gives q^2 + 3q
    CHECK(parallel_weight<Rational>({{Rational(1), Rational(1)}}) == Rational(3));
    {
        WeightedMultigraph bundle(2);
        bundle.add_edge(0, 1, Rational(1));
        bundle.add_edge(0, 1, Rational(1));
        const Rational q(5);
        CHECK(brute_force_z(bundle, q) == q * q + q * Rational(3));
    }
    CHECK_THROWS_AS(parallel_weight<Rational>(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("series weight basics") {
    const Rational q(2);

    const auto single = series_weight<Rational>({{Rational(9, 4)}}, Rational(7));
    CHECK(single.weight == Rational(9, 4));
    CHECK(single.prefactor == Rational(1));

    const auto two = series_weight<Rational>({{Rational(1), Rational(2)}}, q);
    CHECK(two.weight == Rational(2, 5));
    CHECK(two.prefactor == Rational(5));
    check_preserves_z(path_graph({Rational(1), Rational(2)}), two, q);
    CHECK(brute_force_z(path_graph({Rational(1), Rational(2)}), q) == Rational(24));

    CHECK_THROWS_AS(series_weight<Rational>({{Rational(-1), Rational(-1)}}, q), SingularPoint);
    CHECK_THROWS_AS(series_weight<Rational>({{Rational(1)}}, Rational(0)), InvalidQ);
    CHECK_THROWS_AS(series_weight<Rational>(std::vector<Rational>{}, q), std::invalid_argument);
}

TEST_CASE("necklace weight basics") {
    const Rational q(2);

    // one level degenerates to a plain series reduction
    const std::vector<Rational> level{Rational(1), Rational(2)};
    const auto neck = necklace_weight<Rational>({level}, q);
    const auto ser = series_weight<Rational>(level, q);
    CHECK(neck.weight == ser.weight);
    CHECK(neck.prefactor == ser.prefactor);

    // two single-edge levels are just a parallel pair
    const auto pair = necklace_weight<Rational>({{Rational(1)}, {Rational(1)}}, Rational(7));
    CHECK(pair.weight == Rational(3));
    CHECK(pair.prefactor == Rational(1));

    // [[1,2],[3]] at q=2 equals composing series then parallel
    const auto mixed = necklace_weight<Rational>({{Rational(1), Rational(2)}, {Rational(3)}}, q);
    const auto level0 = series_weight<Rational>({{Rational(1), Rational(2)}}, q);
    CHECK(mixed.weight == parallel_weight<Rational>({{level0.weight, Rational(3)}}));
    CHECK(mixed.prefactor == Rational(5));

    CHECK_THROWS_AS(necklace_weight<Rational>({}, q), std::invalid_argument);
    CHECK_THROWS_AS(necklace_weight<Rational>({{Rational(1)}, {}}, q), std::invalid_argument);
    CHECK_THROWS_AS(necklace_weight<Rational>({{Rational(1)}}, Rational(0)), InvalidQ);
    CHECK_THROWS_AS(necklace_weight<Rational>({{Rational(-1), Rational(-1)}}, q), SingularPoint);
}

TEST_CASE("parallel reduction is associative and order independent") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        const Rational grouped = parallel_weight<Rational>({{a, parallel_weight<Rational>({{b, c}})}});
        const Rational flat = parallel_weight<Rational>({{a, b, c}});
        CHECK(grouped == flat);
        CHECK(parallel_weight<Rational>({{c, a, b}}) == flat);
    }
}

TEST_CASE("binary series folding agrees with the n-ary rule") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(2, 6);
        const int n = len(rng);
        std::vector<Rational> ws;
        for (int i = 0; i < n; ++i) ws.push_back(random_positive_rational(rng));
        const Rational q = random_positive_rational(rng, 9);

        const auto nary = series_weight(ws, q);

        std::shuffle(ws.begin(), ws.end(), rng); // order must not matter
        EffectiveEdge<Rational> folded{ws[0], Rational(1)};
        for (std::size_t i = 1; i < ws.size(); ++i) {
            const auto step = series_weight<Rational>({{folded.weight, ws[i]}}, q);
            folded.weight = step.weight;
            folded.prefactor *= step.prefactor;
        }
        CHECK(folded.weight == nary.weight);
        CHECK(folded.prefactor == nary.prefactor);
    }
}

TEST_CASE("necklace equals its series-then-parallel composition") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> n_levels(1, 4);
        std::uniform_int_distribution<int> level_len(1, 4);
        std::vector<std::vector<Rational>> levels(static_cast<std::size_t>(n_levels(rng)));
        for (auto& level : levels) {
            const int len = level_len(rng);
            for (int j = 0; j < len; ++j) level.push_back(random_positive_rational(rng));
        }
        const Rational q = random_positive_rational(rng, 9);

        const auto direct = necklace_weight(levels, q);

        std::vector<Rational> level_weights;
        Rational pref(1);
        for (const auto& level : levels) {
            const auto s = series_weight(level, q);
            level_weights.push_back(s.weight);
            pref *= s.prefactor;
        }
        CHECK(direct.weight == parallel_weight(level_weights));
        CHECK(direct.prefactor == pref);
    }
}

TEST_CASE("reductions preserve the partition function of their gadgets") {
    std::mt19937_64 rng(404);
    const std::vector<Rational> qs{Rational(1), Rational(2), Rational(3), Rational(5), Rational(7, 2)};

    for (int trial = 0; trial < 60; ++trial) {
        const Rational q = qs[trial % qs.size()];

        // parallel bundle between two vertices
        std::uniform_int_distribution<int> bundle_size(1, 5);
        const int b = bundle_size(rng);
        WeightedMultigraph bundle(2);
        std::vector<Rational> bws;
        for (int i = 0; i < b; ++i) {
            bws.push_back(random_rational(rng, 12));
            bundle.add_edge(0, 1, bws.back());
        }
        check_preserves_z(bundle, EffectiveEdge<Rational>{parallel_weight(bws), Rational(1)}, q);

        // series path
        std::uniform_int_distribution<int> path_len(1, 5);
        const int p = path_len(rng);
        std::vector<Rational> pws;
        for (int i = 0; i < p; ++i) pws.push_back(random_positive_rational(rng, 12));
        check_preserves_z(path_graph(pws), series_weight(pws, q), q);

        // necklace
        std::uniform_int_distribution<int> n_levels(1, 3);
        std::uniform_int_distribution<int> level_len(1, 3);
        std::vector<std::vector<Rational>> levels(static_cast<std::size_t>(n_levels(rng)));
        for (auto& level : levels) {
            const int len = level_len(rng);
            for (int j = 0; j < len; ++j) level.push_back(random_positive_rational(rng, 12));
        }
        check_preserves_z(necklace_graph(levels), necklace_weight(levels, q), q);
    }
}
