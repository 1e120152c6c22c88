#include "doctest.h"
#include "helpers.hpp"
#include "omflat/closure_witness.hpp"
#include "omflat/errors.hpp"
#include "omflat/flattening_poset.hpp"

using namespace omflat;
using omflat::testing::om_of;

TEST_CASE("angular realization of rank-2 oriented matroids") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& m : enumerate_rank2_oms(n, false)) {
            const auto vectors = realize_rank2(m);
            CHECK(normalize(chirotope_from_vectors(vectors)) == m);
        }
    CHECK_THROWS_AS(realize_rank2(om_of({{1, 0}, {0, 0}, {0, 1}})), DomainError);
    CHECK_THROWS_AS(realize_rank2(om_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), InputError);
}

TEST_CASE("square below the uniform quadrilateral") {
    const auto cycle = SimplicialSphere::cycle(4);
    const auto square = om_of({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    const auto uniform = om_of({{1, 0}, {1, 1}, {-1, 0}, {0, -1}});
    REQUIRE(weak_leq(square, uniform));
    const Rational delta(1, 1000000);
    const CoverWitness w = cover_witness(square, uniform, delta, cycle);
    REQUIRE(w.found);
    CHECK(w.distance <= delta);
    CHECK(w.distance > 0);
    CHECK(mu0(*w.lower) == square);
    CHECK(mu0(*w.upper) == uniform);
}

TEST_CASE("every cover of P(cycle:4) and P(cycle:5) has a witness") {
    for (int n : {4, 5}) {
        const auto cycle = SimplicialSphere::cycle(n);
        const auto p = enumerate_P(cycle);
        for (const auto& [a, b] : p.poset().hasse()) {
            const CoverWitness w = cover_witness(p.elements()[a], p.elements()[b], Rational(1, 1000), cycle);
            CHECK_MESSAGE(w.found, w.note);
            if (w.found) CHECK(w.distance <= Rational(1, 1000));
        }
    }
}

TEST_CASE("invalid requests") {
    const auto cycle = SimplicialSphere::cycle(4);
    const auto p = enumerate_P(cycle);
    const auto& m = p.elements().front();
    CHECK_THROWS_AS(cover_witness(m, m, Rational(1, 10), cycle), InputError);
    CHECK_THROWS_AS(cover_witness(m, m, Rational(0), cycle), InputError);
    // Two distinct maximal elements are unrelated.
    const auto maxima = p.poset().maximal();
    REQUIRE(maxima.size() >= 2);
    CHECK_THROWS_AS(cover_witness(p.elements()[maxima[0]], p.elements()[maxima[1]], Rational(1, 10), cycle),
                    InputError);
    CHECK_THROWS_AS(cover_witness(m, m, Rational(1, 10), SimplicialSphere::simplex_boundary(3)), InputError);
}
