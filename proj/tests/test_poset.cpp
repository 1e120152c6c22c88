#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "omflat/duality.hpp"
#include "omflat/errors.hpp"
#include "omflat/flattening_poset.hpp"
#include "omflat/homology.hpp"
#include "omflat/poset.hpp"

using namespace omflat;
using omflat::testing::om_of;

namespace {

FinitePoset chain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return FinitePoset(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FinitePoset(labels, [](std::size_t a, std::size_t b) { return a == b; });
}

// Proper nonempty faces of a triangle under inclusion.
FinitePoset triangle_faces() {
    const std::vector<std::vector<int>> faces{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::string> labels;
    for (const auto& f : faces) {
        std::string s;
        for (int v : f) s += std::to_string(v);
        labels.push_back(s);
    }
    return FinitePoset(labels, [&](std::size_t a, std::size_t b) {
        return std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
    });
}

}  // namespace

TEST_CASE("weak map order examples") {
    const auto m = om_of({{1, 0}, {0, 1}, {1, 1}});
    CHECK(weak_leq(m, m));
    CHECK(weak_leq(m.chirotope(), m.chirotope().negated()));
    const auto n = om_of({{1, 0}, {0, 1}, {2, 0}});
    CHECK(weak_leq(n, m));
    CHECK_FALSE(weak_leq(m, n));
    CHECK_THROWS_AS(weak_leq(m, om_of({{1, 0}, {0, 1}})), InputError);
}

TEST_CASE("weak map order is a partial order on rank-2 oriented matroids, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const auto all = enumerate_rank2_oms(n, true);
        for (const auto& a : all)
            for (const auto& b : all) {
                // Representative independence.
                CHECK(weak_leq(a, b) == weak_leq(a.chirotope().negated(), b.chirotope()));
                if (a != b && weak_leq(a, b)) CHECK_FALSE(weak_leq(b, a));
            }
        // Construction re-checks reflexivity, antisymmetry and transitivity.
        CHECK_NOTHROW(build_weak_map_poset(all));
    }
}

TEST_CASE("poset construction and Hasse diagrams") {
    const FinitePoset c = chain(3);
    CHECK(c.hasse() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    CHECK(antichain(3).hasse().empty());
    CHECK(c.minimal() == std::vector<std::size_t>{0});
    CHECK(c.maximal() == std::vector<std::size_t>{2});
    CHECK_THROWS_WITH_AS(FinitePoset({"x", "y"}, [](std::size_t, std::size_t) { return true; }),
                         doctest::Contains("x"), DomainError);
}

TEST_CASE("transitive closure of the Hasse diagram reproduces the order") {
    const WeakMapPoset macp = build_weak_map_poset(enumerate_rank2_oms(4, true));
    const FinitePoset& p = macp.poset;
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& [a, b] : p.hasse()) reach[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(reach[i][j] == p.leq(i, j));
}

TEST_CASE("maximal elements of MacP(2,4) are exactly the uniform loop-free ones") {
    const WeakMapPoset macp = build_weak_map_poset(enumerate_rank2_oms(4, true));
    std::set<std::string> maximal, uniform;
    for (auto i : macp.poset.maximal()) maximal.insert(macp.poset.label(i));
    for (const auto& m : macp.elements)
        if (m.key().find('0') == std::string::npos) uniform.insert(m.key());
    CHECK(maximal == uniform);
    CHECK(uniform.size() > 0);
}

TEST_CASE("order complexes") {
    const SimplicialComplex c3 = order_complex(chain(3));
    CHECK(c3.dimension() == 2);
    CHECK(c3.count(2) == 1);
    const SimplicialComplex a2 = order_complex(antichain(2));
    CHECK(a2.dimension() == 0);
    CHECK(a2.count(0) == 2);
    const HomologyResult circle = reduced_homology(order_complex(triangle_faces()));
    CHECK(circle.betti == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("homotopy operators") {
    const FinitePoset c = chain(3);
    const MonotoneMap identity{&c, {0, 1, 2}};
    CHECK(is_descending_homotopy(identity));
    CHECK(is_ascending_homotopy(identity));
    const MonotoneMap to_min{&c, {0, 0, 0}};
    CHECK(is_descending_homotopy(to_min));
    CHECK_FALSE(is_ascending_homotopy(to_min));
    CHECK(to_min.is_idempotent());
    const MonotoneMap reversing{&c, {2, 1, 0}};
    CHECK_FALSE(reversing.is_monotone());
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(chain(3), chain(3)));
    CHECK_FALSE(is_isomorphic(chain(3), antichain(3)));
    const FinitePoset t = triangle_faces();
    std::vector<std::size_t> witness;
    const FinitePoset shuffled = t.induced({5, 3, 1, 0, 4, 2});
    REQUIRE(is_isomorphic(t, shuffled, &witness));
    CHECK(is_order_isomorphism(t, shuffled, witness));
}

TEST_CASE("dual image of MacP(3,5) is isomorphic to MacP(2,5) by search") {
    std::vector<OrientedMatroid> image;
    for (const auto& m : search_oms_by_signs(3, 5, true)) image.push_back(dual(m));
    const WeakMapPoset lhs = build_weak_map_poset(image);
    const WeakMapPoset rhs = build_weak_map_poset(enumerate_rank2_oms(5, true));
    // Compare as abstract posets: strip the labels by reversing the element order.
    std::vector<std::size_t> reversed(lhs.poset.size());
    for (std::size_t i = 0; i < reversed.size(); ++i) reversed[i] = reversed.size() - 1 - i;
    std::vector<std::size_t> witness;
    CHECK(is_isomorphic(lhs.poset.induced(reversed), rhs.poset, &witness));
}

TEST_CASE("DOT export") {
    const std::string dot = poset_to_dot(chain(2));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);
}
