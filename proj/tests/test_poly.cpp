#include <catch2/catch_amalgamated.hpp>

#include <sptutte/evaluate.hpp>
#include <sptutte/generator.hpp>
#include <sptutte/oracle.hpp>
#include <sptutte/poly.hpp>

#include "test_support.hpp"

using namespace sptutte;
using namespace testsupport;

TEST_CASE("polynomial container basics") {
    PolyQ zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.pretty() == "0");

    const PolyQ p({Rational(0), Rational(2), Rational(-3), Rational(1)});
    CHECK(p.degree() == 3);
    CHECK(p.leading() == Rational(1));
    CHECK(p.coefficient(1) == Rational(2));
    CHECK(p.at(Rational(4)) == Rational(24)); // 2*4 - 3*16 + 64
    CHECK(p.pretty() == "2q - 3q^2 + q^3");

    // trailing zeros trim away
    CHECK(PolyQ({Rational(1), Rational(0), Rational(0)}).degree() == 0);

    CHECK(PolyQ({Rational(0), Rational(1), Rational(1)}).pretty() == "q + q^2");
    CHECK(PolyQ({Rational(-1), Rational(3, 2)}).pretty() == "-1 + (3/2)q");
    CHECK(PolyQ({Rational(0), Rational(-1)}).pretty() == "-q");
}

TEST_CASE("interpolation recovers exact polynomials") {
    // p(x) = x^3 - x/2 + 7
    const PolyQ p({Rational(7), Rational(-1, 2), Rational(0), Rational(1)});
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long x : {-2, 1, 3, 10}) pts.emplace_back(Rational(x), p.at(Rational(x)));
    CHECK(interpolate(pts) == p);
}

TEST_CASE("partition polynomial of worked examples") {
    const PolyQ pk2 = partition_polynomial(k2(Rational(1)));
    CHECK(pk2 == PolyQ({Rational(0), Rational(1), Rational(1)}));

    const PolyQ chromatic_tri = chromatic_polynomial(triangle());
    CHECK(chromatic_tri == PolyQ({Rational(0), Rational(2), Rational(-3), Rational(1)}));

    const PolyQ chk2 = chromatic_polynomial(k2());
    CHECK(chk2 == PolyQ({Rational(0), Rational(-1), Rational(1)}));
}

TEST_CASE("cycle chromatic polynomial matches coloring counts") {
    const auto c4 = cycle_graph(4, Rational(1));
    const PolyQ p = chromatic_polynomial(c4);
    for (long long q = 1; q <= 5; ++q) {
        CHECK(p.at(Rational(q)) == Rational(count_proper_colorings(c4, q)));
    }
    // secondary check against the closed form (q-1)^4 + (q-1)
    for (long long q = 1; q <= 8; ++q) {
        const Rational qm1(q - 1);
        CHECK(p.at(Rational(q)) == qm1.pow(4) + qm1);
    }
    CHECK(p == PolyQ({Rational(0), Rational(-3), Rational(6), Rational(-4), Rational(1)}));
}

TEST_CASE("partition polynomial shape and reevaluation") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorSpec spec;
        spec.composition_ops = static_cast<int>(seed % 12) + 1;
        spec.seed = seed * 613;
        const auto g = random_sp_graph(spec);

        const PolyQ p = partition_polynomial(g);
        CHECK(p.degree() == g.vertex_count());
        CHECK(p.leading() == Rational(1));
        CHECK(p.coefficient(0) == Rational(0));

        // fresh points, beyond the 1,2,3,... sampling prefix
        for (long long q : {997, 1009, 2027}) {
            CHECK(p.at(Rational(q)) == evaluate(EvalRequest{g, Rational(q), std::nullopt, false}));
        }
    }
}

TEST_CASE("chromatic polynomial interpolates across singular sample points") {
    // all-(-1) weights make many small integer q singular for the pointwise
    // reduction; the polynomial path must skip and still get it right
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        GeneratorSpec spec;
        spec.composition_ops = static_cast<int>(seed % 9) + 2;
        spec.seed = seed * 523;
        const auto g = random_sp_graph(spec);
        const PolyQ p = chromatic_polynomial(g);
        for (long long q = 1; q <= 4; ++q) {
            CHECK(p.at(Rational(q)) == Rational(count_proper_colorings(g, q)));
        }
    }
}

TEST_CASE("polynomials multiply over disjoint components") {
    const auto a = k2(Rational(2));
    const auto b = k2(Rational(5));
    const PolyQ p = partition_polynomial(disjoint_union(a, b));
    CHECK(p.degree() == 4);
    // (q^2 + 2q)(q^2 + 5q) = q^4 + 7q^3 + 10q^2
    CHECK(p == PolyQ({Rational(0), Rational(0), Rational(10), Rational(7), Rational(1)}));
}

TEST_CASE("non series-parallel inputs are reported") {
    CHECK_THROWS_AS(partition_polynomial(complete_graph(4)), NotSeriesParallel);
}

TEST_CASE("pendant flag extends polynomials to trees") {
    WeightedMultigraph star(4);
    for (int i = 1; i < 4; ++i) star.add_edge(0, i, Rational(-1));
    const PolyQ p = partition_polynomial(star, true);
    for (long long q = 1; q <= 4; ++q) {
        // star chromatic polynomial: q (q-1)^3 with the -1 weights baked in
        CHECK(p.at(Rational(q)) == Rational(q) * Rational(q - 1).pow(3));
    }
}
