#include "doctest.h"
#include "helpers.hpp"
#include "omflat/duality.hpp"
#include "omflat/errors.hpp"
#include "omflat/flattening_poset.hpp"
#include "omflat/random.hpp"

using namespace omflat;
using omflat::testing::om_of;

namespace {

RationalMatrix rows_of(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RationalVector> out;
    for (auto r : rows) out.push_back(omflat::testing::vec(r));
    return RationalMatrix::from_rows(out);
}

bool orthogonal(const RationalMatrix& v, const RationalMatrix& w) {
    const RationalMatrix product = v * w.transpose();
    for (std::size_t i = 0; i < product.rows(); ++i)
        for (std::size_t j = 0; j < product.cols(); ++j)
            if (product(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("dual is an involution on small oriented matroids") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& m : enumerate_rank2_oms(n, true)) {
            const OrientedMatroid d = dual(m);
            CHECK(d.rank() == n - 2);
            CHECK(dual(d) == m);
        }
    CHECK_THROWS_AS(dual(om_of({{1, 0}, {0, 1}})), DomainError);
}

TEST_CASE("dual of (I|A) is the oriented matroid of (-A^T|I)") {
    const RationalMatrix v = rows_of({{1, 0, 1, 1}, {0, 1, 1, 2}});
    const RationalMatrix w = orthogonal_complement(v);
    CHECK(w == rows_of({{-1, -1, 1, 0}, {-1, -2, 0, 1}}));
    CHECK(dual(om_of(v.columns())) == om_of(w.columns()));
}

TEST_CASE("dual of a join is the join of the duals") {
    const auto a = om_of({{1, 0}, {0, 1}, {1, 1}});
    const auto b = om_of({{1}, {-2}});
    CHECK(dual(join_om(a, b)) == join_om(dual(a), dual(b)));
    const auto c = om_of({{1, 0}, {0, 1}, {-1, 1}, {2, 1}});
    CHECK(dual(join_om(a, c)) == join_om(dual(a), dual(c)));
}

TEST_CASE("orthogonal complement") {
    const RationalMatrix coordinate = rows_of({{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(orthogonal_complement(coordinate) == rows_of({{0, 0, 1, 0}, {0, 0, 0, 1}}));
    const RationalMatrix identity_pair = rows_of({{1, 0, 1, 0}, {0, 1, 0, 1}});
    const RationalMatrix w = orthogonal_complement(identity_pair);
    CHECK(w == rows_of({{-1, 0, 1, 0}, {0, -1, 0, 1}}));
    CHECK(orthogonal(identity_pair, w));

    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        RationalMatrix v(3, 5);
        for (int i = 0; i < 3; ++i) {
            v(i, i) = 1;
            v(i, 3) = rng.rational(20, 10);
            v(i, 4) = rng.rational(20, 10);
        }
        CHECK(orthogonal(v, orthogonal_complement(v)));
    }
    CHECK_THROWS_WITH_AS(orthogonal_complement(rows_of({{2, 0, 1}, {0, 1, 1}})), doctest::Contains("normalize first"),
                         InputError);
    CHECK(reduce_to_identity_form(rows_of({{2, 0, 1}, {0, 1, 1}})) ==
          RationalMatrix::from_rows({{Rational(1), Rational(0), Rational(1, 2)}, {Rational(0), Rational(1), Rational(1)}}));
}

TEST_CASE("duality diagram") {
    CHECK(check_duality_diagram_at(rows_of({{1, 0, 0, 0}, {0, 1, 0, 0}})) == DiagramOutcome::agree);
    CHECK(check_duality_diagram_at(rows_of({{1, 2, 0, 0}, {2, 4, 0, 0}})) == DiagramOutcome::degenerate);
    const DualityReport r3 = verify_duality_diagram(3, 100, 7);
    CHECK(r3.failures.empty());
    CHECK(r3.agreements + r3.degenerate == 100);
    const DualityReport r2 = verify_duality_diagram(2, 50, 1);
    CHECK(r2.failures.empty());
    const DualityReport again = verify_duality_diagram(3, 100, 7);
    CHECK(again.agreements == r3.agreements);
}

TEST_CASE("duality is an order isomorphism between MacP(3,5) and MacP(2,5)") {
    const auto rank3 = search_oms_by_signs(3, 5, true);
    const auto rank2 = enumerate_rank2_oms(5, true);
    REQUIRE(rank3.size() == rank2.size());
    std::vector<OrientedMatroid> image;
    for (const auto& m : rank3) image.push_back(dual(m));
    const WeakMapPoset p3 = build_weak_map_poset(rank3);
    const WeakMapPoset p2 = build_weak_map_poset(rank2);
    std::vector<std::size_t> map(p3.elements.size());
    for (std::size_t i = 0; i < p3.elements.size(); ++i) map[i] = p2.poset.find(dual(p3.elements[i]).key());
    CHECK(is_order_isomorphism(p3.poset, p2.poset, map));
}
