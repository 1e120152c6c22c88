#include "omflat/flattening_poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "omflat/duality.hpp"

namespace omflat {

namespace {

constexpr int kMaxGround = 8;

std::vector<OrientedMatroid> from_keys(int rank, int n, const std::unordered_set<std::string>& keys) {
    std::vector<std::string> sorted(keys.begin(), keys.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<OrientedMatroid> out;
    out.reserve(sorted.size());
    for (const auto& k : sorted) out.push_back(OrientedMatroid::trusted(Chirotope::from_string(rank, n, k)));
    return out;
}

std::string canonical_key(std::vector<Sign>& signs) {
    auto first = std::find_if(signs.begin(), signs.end(), [](Sign s) { return s != Sign::zero; });
    if (first != signs.end() && *first == Sign::minus)
        for (Sign& s : signs) s = negate(s);
    std::string key(signs.size(), '0');
    for (std::size_t i = 0; i < signs.size(); ++i) key[i] = to_char(signs[i]);
    return key;
}

// Chirotopes of all angular models on the given non-loop elements.
void angular_models(int n, const std::vector<int>& elements, std::unordered_set<std::string>& keys,
                    const BasisIndexer& idx, const std::vector<std::pair<int, int>>& pairs) {
    const std::size_t m = elements.size();
    if (m < 2) return;
    std::vector<int> block(m, 0);   // restricted growth string
    std::vector<int> position(n + 1, -1);
    std::vector<int> sign(n + 1, 1);
    std::vector<Sign> signs(idx.size());
    while (true) {
        const int k = *std::max_element(block.begin(), block.end()) + 1;
        if (k >= 2) {
            std::vector<int> order(k - 1);
            std::iota(order.begin(), order.end(), 1);
            do {
                for (std::size_t i = 0; i < m; ++i)
                    position[elements[i]] = block[i] == 0 ? 0 : order[block[i] - 1];
                for (std::uint64_t mask = 0; mask < (1ULL << (m - 1)); ++mask) {
                    sign[elements[0]] = 1;
                    for (std::size_t i = 1; i < m; ++i) sign[elements[i]] = (mask >> (i - 1)) & 1 ? -1 : 1;
                    for (std::size_t p = 0; p < pairs.size(); ++p) {
                        const auto [i, j] = pairs[p];
                        if (position[i] < 0 || position[j] < 0 || position[i] == position[j]) {
                            signs[p] = Sign::zero;
                            continue;
                        }
                        const int value = sign[i] * sign[j] * (position[i] < position[j] ? 1 : -1);
                        signs[p] = value > 0 ? Sign::plus : Sign::minus;
                    }
                    keys.insert(canonical_key(signs));
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
        // Next restricted growth string.
        std::size_t i = m - 1;
        while (i > 0) {
            const int prefix_max = *std::max_element(block.begin(), block.begin() + i);
            if (block[i] <= prefix_max) {
                ++block[i];
                std::fill(block.begin() + i + 1, block.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
}

std::vector<OrientedMatroid> corank_one_oms(int m, const Budget* budget) {
    // Rank m on m+1 elements: the chirotope is fixed by the unique circuit's sign vector.
    const int n = m + 1;
    const BasisIndexer idx(n, m);
    std::vector<OrientedMatroid> out;
    std::vector<int> digits(n, 0);
    while (true) {
        poll(budget, "corank-one enumeration");
        const auto first = std::find_if(digits.begin(), digits.end(), [](int d) { return d != 0; });
        if (first != digits.end() && *first == 1) {
            std::vector<Sign> signs(idx.size());
            for (int i = 0; i < n; ++i) {
                std::vector<int> rest;
                for (int e = 1; e <= n; ++e)
                    if (e != i + 1) rest.push_back(e);
                Sign c = digits[i] == 0 ? Sign::zero : digits[i] == 1 ? Sign::plus : Sign::minus;
                signs[idx.rank_subset(rest)] = i % 2 == 0 ? c : negate(c);
            }
            const Chirotope chi(m, n, std::move(signs));
            if (check_chirotope_axioms(chi).ok) out.push_back(OrientedMatroid::trusted(chi));
        }
        int i = 0;
        while (i < n && digits[i] == 2) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_supported(const SimplicialSphere& sphere) {
    const bool ok =
        sphere.vertex_count() <= kMaxGround &&
        (sphere.rank() == 2 || sphere.corank() == 2 ||
         (sphere.family() == SphereFamily::simplex_boundary && sphere.corank() == 1 &&
          sphere.vertex_count() <= 7));
    if (!ok)
        throw InputError("sphere " + sphere.descriptor() +
                         " is out of supported family (cycle:n with n<=8, simplex:m with m<=6, "
                         "join:a,b with a+b<=6)");
}

}  // namespace

bool is_om_flattening(const OrientedMatroid& m, std::span<const SignedCircuit> cs,
                      const SimplicialSphere& sphere) {
    if (m.rank() != sphere.rank() || m.ground() != sphere.vertex_count())
        throw InputError("oriented matroid has rank " + std::to_string(m.rank()) + " on " +
                         std::to_string(m.ground()) + " elements, sphere needs rank " +
                         std::to_string(sphere.rank()) + " on " +
                         std::to_string(sphere.vertex_count()));
    for (const auto& facet : sphere.facets()) {
        const bool independent = static_cast<int>(facet.size()) == m.rank()
                                     ? m.chirotope().on_subset(facet) != Sign::zero
                                     : is_independent(cs, facet);
        if (!independent) return false;
    }
    // A hull violation x in conv(S) with S a face is a circuit with negative part {x} and
    // nonempty positive part inside some facet.
    for (const auto& c : cs) {
        for (const SignedCircuit& oriented : {c, c.opposite()}) {
            if (oriented.negative.size() != 1 || oriented.positive.empty()) continue;
            for (const auto& facet : sphere.facets())
                if (std::includes(facet.begin(), facet.end(), oriented.positive.begin(),
                                  oriented.positive.end()))
                    return false;
        }
    }
    return true;
}

bool is_om_flattening(const OrientedMatroid& m, const SimplicialSphere& sphere) {
    return is_om_flattening(m, circuits(m), sphere);
}

std::vector<OrientedMatroid> enumerate_rank2_oms(int n, bool allow_loops) {
    if (n < 2 || n > kMaxGround) throw InputError("rank-2 enumeration needs 2 <= n <= 8");
    const BasisIndexer idx(n, 2);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto s = idx.unrank_subset(i);
        pairs.emplace_back(s[0], s[1]);
    }
    std::unordered_set<std::string> keys;
    const std::uint64_t loop_masks = allow_loops ? (1ULL << n) : 1;
    for (std::uint64_t loops = 0; loops < loop_masks; ++loops) {
        std::vector<int> elements;
        for (int e = 1; e <= n; ++e)
            if (!((loops >> (e - 1)) & 1)) elements.push_back(e);
        angular_models(n, elements, keys, idx, pairs);
    }
    return from_keys(2, n, keys);
}

std::vector<OrientedMatroid> search_oms_by_signs(int rank, int n, bool allow_loops,
                                                 const Budget* budget) {
    const BasisIndexer idx(n, rank);
    if (idx.size() > 12) throw InputError("sign-array search limited to 3^12 arrays");
    std::vector<OrientedMatroid> out;
    std::vector<Sign> signs(idx.size(), Sign::zero);
    while (true) {
        poll(budget, "sign-array search");
        const auto first = std::find_if(signs.begin(), signs.end(), [](Sign s) { return s != Sign::zero; });
        if (first != signs.end() && *first == Sign::plus) {
            const Chirotope chi(rank, n, signs);
            if (check_chirotope_axioms(chi).ok) {
                OrientedMatroid m = OrientedMatroid::trusted(chi);
                if (allow_loops || !has_loop(m)) out.push_back(std::move(m));
            }
        }
        std::size_t i = 0;
        while (i < signs.size() && signs[i] == Sign::minus) signs[i++] = Sign::zero;
        if (i == signs.size()) break;
        signs[i] = signs[i] == Sign::zero ? Sign::plus : Sign::minus;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrientedMatroid> enumerate_flattening_oms(const SimplicialSphere& sphere,
                                                      EnumerationPath path, const Budget* budget) {
    require_supported(sphere);
    if (path == EnumerationPath::automatic) {
        if (sphere.rank() == 2) path = EnumerationPath::rank2_direct;
        else if (sphere.corank() == 2) path = EnumerationPath::duality;
    }
    std::vector<OrientedMatroid> candidates;
    switch (path) {
        case EnumerationPath::rank2_direct:
            if (sphere.rank() != 2) throw InputError("direct rank-2 path needs a 1-sphere");
            candidates = enumerate_rank2_oms(sphere.vertex_count(), false);
            break;
        case EnumerationPath::duality:
            if (sphere.corank() != 2) throw InputError("duality path needs corank 2");
            for (const auto& m : enumerate_rank2_oms(sphere.vertex_count(), true)) {
                poll(budget, "duality enumeration");
                candidates.push_back(dual(m));
            }
            break;
        case EnumerationPath::automatic:
            candidates = corank_one_oms(sphere.rank(), budget);
            break;
    }
    std::vector<OrientedMatroid> out;
    for (const auto& m : candidates) {
        poll(budget, "flattening filter");
        if (!has_loop(m) && is_om_flattening(m, sphere)) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FlatteningPoset enumerate_P(const SimplicialSphere& sphere, EnumerationPath path,
                            const Budget* budget) {
    return {sphere, build_weak_map_poset(enumerate_flattening_oms(sphere, path, budget))};
}

}  // namespace omflat
