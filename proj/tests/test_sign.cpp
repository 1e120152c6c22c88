#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "omflat/errors.hpp"
#include "omflat/sign.hpp"

using namespace omflat;

namespace {

const Sign kAll[] = {Sign::zero, Sign::plus, Sign::minus};

Sign inversion_parity(const std::vector<int>& t) {
    int inversions = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) ++inversions;
    return inversions % 2 == 0 ? Sign::plus : Sign::minus;
}

}  // namespace

TEST_CASE("sign order") {
    CHECK(sign_leq(Sign::zero, Sign::plus));
    CHECK(sign_leq(Sign::zero, Sign::minus));
    CHECK(sign_leq(Sign::plus, Sign::plus));
    CHECK_FALSE(sign_leq(Sign::plus, Sign::minus));
    CHECK_FALSE(sign_leq(Sign::minus, Sign::plus));
    CHECK_FALSE(sign_leq(Sign::plus, Sign::zero));
}

TEST_CASE("sign algebra is exhaustive over all triples") {
    for (Sign a : kAll) {
        CHECK(negate(negate(a)) == a);
        CHECK(a * Sign::plus == a);
        for (Sign b : kAll) {
            CHECK(a * b == b * a);
            for (Sign c : kAll) CHECK((a * b) * c == a * (b * c));
        }
    }
    CHECK(negate(Sign::zero) == Sign::zero);
    CHECK(Sign::minus * Sign::minus == Sign::plus);
    CHECK(sign_of(-3) == Sign::minus);
}

TEST_CASE("permutation sign") {
    CHECK(permutation_sign(std::vector<int>{1, 2}) == Sign::plus);
    CHECK(permutation_sign(std::vector<int>{2, 1}) == Sign::minus);
    CHECK(permutation_sign(std::vector<int>{3, 1, 2}) == Sign::plus);
    CHECK_THROWS_WITH_AS(permutation_sign(std::vector<int>{1, 3, 1}), "not a permutation input", InputError);
}

TEST_CASE("permutation sign matches inversion counting and the reversal rule") {
    for (int len = 0; len <= 5; ++len) {
        std::vector<int> t(len);
        std::iota(t.begin(), t.end(), 1);
        do {
            const Sign s = permutation_sign(t);
            CHECK(s == inversion_parity(t));
            std::vector<int> r(t.rbegin(), t.rend());
            const Sign flip = (len / 2) % 2 == 0 ? Sign::plus : Sign::minus;
            CHECK(s == permutation_sign(r) * flip);
        } while (std::next_permutation(t.begin(), t.end()));
    }
}

TEST_CASE("colex ranking examples") {
    const BasisIndexer idx(4, 2);
    CHECK(idx.size() == 6);
    CHECK(idx.rank_subset(std::vector<int>{1, 2}) == 0);
    CHECK(idx.unrank_subset(5) == std::vector<int>{3, 4});
    CHECK(idx.unrank_subset(1) == std::vector<int>{1, 3});
    CHECK(idx.unrank_subset(2) == std::vector<int>{2, 3});
    CHECK(BasisIndexer(3, 3).rank_subset(std::vector<int>{1, 2, 3}) == 0);
    CHECK_THROWS_AS(idx.rank_subset(std::vector<int>{1, 5}), InputError);
    CHECK_THROWS_AS(idx.unrank_subset(6), InputError);
    CHECK_THROWS_AS(idx.rank_subset(std::vector<int>{1, 2, 3}), InputError);
}

TEST_CASE("colex round trip is exhaustive for n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int r = 1; r <= n; ++r) {
            const BasisIndexer idx(n, r);
            CHECK(idx.size() == binomial(n, r));
            std::size_t expected = 0;
            std::vector<int> previous;
            for (const auto& s : all_subsets(n, r)) {
                // colex: compare from the largest element down
                if (!previous.empty())
                    CHECK(std::lexicographical_compare(previous.rbegin(), previous.rend(), s.rbegin(), s.rend()));
                previous = s;
                CHECK(idx.rank_subset(s) == expected);
                CHECK(idx.unrank_subset(expected) == s);
                ++expected;
            }
            CHECK(expected == idx.size());
        }
}
