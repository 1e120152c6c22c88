#include "omflat/chirotope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "omflat/errors.hpp"

namespace omflat {

namespace {

// Value of chi on an arbitrary tuple, with the tuple given by value.
Sign eval_tuple(const Chirotope& chi, std::vector<int> tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j]) return Sign::zero;
    const Sign parity = permutation_sign(tuple);
    std::sort(tuple.begin(), tuple.end());
    return parity * chi.on_subset(tuple);
}

bool contains_sorted(std::span<const int> haystack, int x) {
    return std::binary_search(haystack.begin(), haystack.end(), x);
}

bool is_subset_sorted(std::span<const int> small, std::span<const int> big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Chirotope::Chirotope(int rank, int ground, std::vector<Sign> signs)
    : rank_(rank), ground_(ground), indexer_(ground, rank), signs_(std::move(signs)) {
    if (signs_.size() != indexer_.size()) {
        throw InputError("chirotope needs " + std::to_string(indexer_.size()) +
                         " signs, got " + std::to_string(signs_.size()));
    }
}

Chirotope Chirotope::from_string(int rank, int ground, std::string_view signs) {
    std::vector<Sign> values;
    values.reserve(signs.size());
    for (char c : signs) values.push_back(sign_from_char(c));
    return Chirotope(rank, ground, std::move(values));
}

Chirotope Chirotope::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string rank_word, ground_word, signs;
    int rank = -1, ground = -1;
    if (!(in >> rank_word >> rank >> ground_word >> ground) || rank_word != "rank" ||
        ground_word != "ground") {
        throw InputError("expected header 'rank <r> ground <n>'");
    }
    in >> signs;  // empty only when C(n, r) would be zero, which cannot happen
    return from_string(rank, ground, signs);
}

Sign Chirotope::on_subset(std::span<const int> sorted_subset) const {
    return signs_[indexer_.rank_subset(sorted_subset)];
}

Sign Chirotope::evaluate(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != rank_) throw InputError("tuple length differs from rank");
    for (int e : tuple)
        if (e < 1 || e > ground_) throw InputError("tuple entry out of range");
    return eval_tuple(*this, std::vector<int>(tuple.begin(), tuple.end()));
}

bool Chirotope::is_zero() const {
    return std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::zero; });
}

Chirotope Chirotope::negated() const {
    std::vector<Sign> flipped(signs_.size());
    std::transform(signs_.begin(), signs_.end(), flipped.begin(), negate);
    return Chirotope(rank_, ground_, std::move(flipped));
}

std::string Chirotope::sign_string() const {
    std::string out(signs_.size(), '0');
    for (std::size_t i = 0; i < signs_.size(); ++i) out[i] = to_char(signs_[i]);
    return out;
}

std::string Chirotope::to_text() const {
    return "rank " + std::to_string(rank_) + " ground " + std::to_string(ground_) + "\n" +
           sign_string();
}

AxiomCheck check_chirotope_axioms(const Chirotope& chi) {
    if (chi.is_zero()) return {false, {}, "identically zero"};
    const int r = chi.rank();
    const int n = chi.ground();

    if (r >= 2) {
        std::vector<int> sigma(r - 2);
        for (int i = 0; i < r - 2; ++i) sigma[i] = i + 1;
        do {
            std::vector<int> rest;
            for (int e = 1; e <= n; ++e)
                if (!contains_sorted(sigma, e)) rest.push_back(e);
            const int m = static_cast<int>(rest.size());
            auto with = [&](int x, int y) {
                std::vector<int> t = sigma;
                t.push_back(x);
                t.push_back(y);
                return eval_tuple(chi, std::move(t));
            };
            for (int ia = 0; ia < m; ++ia)
                for (int ib = ia + 1; ib < m; ++ib)
                    for (int ic = ib + 1; ic < m; ++ic)
                        for (int id = ic + 1; id < m; ++id) {
                            const int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
                            const Sign terms[3] = {with(a, b) * with(c, d),
                                                   -(with(a, c) * with(b, d)),
                                                   with(a, d) * with(b, c)};
                            bool has_plus = false, has_minus = false, has_nonzero = false;
                            for (Sign t : terms) {
                                has_plus |= t == Sign::plus;
                                has_minus |= t == Sign::minus;
                                has_nonzero |= t != Sign::zero;
                            }
                            if (has_nonzero && !(has_plus && has_minus)) {
                                std::vector<int> witness = sigma;
                                witness.insert(witness.end(), {a, b, c, d});
                                return {false, witness, "Grassmann-Pluecker violation"};
                            }
                        }
        } while (next_colex(sigma, n));
    }

    // Bases must satisfy the exchange axiom.
    const BasisIndexer& idx = chi.indexer();
    std::vector<std::vector<int>> bases;
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (chi.at(i) != Sign::zero) bases.push_back(idx.unrank_subset(i));
    for (const auto& b1 : bases) {
        for (const auto& b2 : bases) {
            for (int x : b1) {
                if (contains_sorted(b2, x)) continue;
                bool found = false;
                for (int y : b2) {
                    if (contains_sorted(b1, y)) continue;
                    std::vector<int> candidate;
                    for (int e : b1)
                        if (e != x) candidate.push_back(e);
                    candidate.push_back(y);
                    std::sort(candidate.begin(), candidate.end());
                    if (chi.on_subset(candidate) != Sign::zero) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    std::vector<int> witness = b1;
                    witness.insert(witness.end(), b2.begin(), b2.end());
                    witness.push_back(x);
                    return {false, witness, "basis exchange violation"};
                }
            }
        }
    }
    return {true, {}, ""};
}

OrientedMatroid OrientedMatroid::trusted(const Chirotope& chi) {
    for (Sign s : chi.signs()) {
        if (s == Sign::plus) return OrientedMatroid(chi);
        if (s == Sign::minus) return OrientedMatroid(chi.negated());
    }
    throw DomainError("not a chirotope: identically zero");
}

OrientedMatroid OrientedMatroid::from_chirotope(const Chirotope& chi) {
    const AxiomCheck check = check_chirotope_axioms(chi);
    if (!check.ok) throw DomainError("not a chirotope: " + check.reason);
    return trusted(chi);
}

bool OrientedMatroid::operator<(const OrientedMatroid& other) const {
    if (rank() != other.rank()) return rank() < other.rank();
    if (ground() != other.ground()) return ground() < other.ground();
    return key() < other.key();
}

OrientedMatroid normalize(const Chirotope& chi) { return OrientedMatroid::from_chirotope(chi); }

std::vector<int> SignedCircuit::support() const {
    std::vector<int> s = positive;
    s.insert(s.end(), negative.begin(), negative.end());
    std::sort(s.begin(), s.end());
    return s;
}

Chirotope chirotope_from_vectors(const std::vector<RationalVector>& columns) {
    if (columns.empty()) throw InputError("no vectors given");
    const int r = static_cast<int>(columns.front().size());
    const int n = static_cast<int>(columns.size());
    if (r < 1 || r > n) throw DomainError("degenerate configuration: rank exceeds element count");
    std::vector<std::vector<Integer>> integral;
    integral.reserve(columns.size());
    for (const auto& c : columns) {
        if (static_cast<int>(c.size()) != r) throw InputError("vectors have different dimensions");
        integral.push_back(clear_denominators(c));
    }
    const BasisIndexer idx(n, r);
    std::vector<Sign> signs(idx.size());
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i + 1;
    std::size_t pos = 0;
    bool any = false;
    do {
        std::vector<Integer> entries(static_cast<std::size_t>(r) * r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) entries[i * r + j] = integral[subset[j] - 1][i];
        signs[pos] = sign_of(sgn(bareiss_determinant(std::move(entries), r)));
        any |= signs[pos] != Sign::zero;
        ++pos;
    } while (next_colex(subset, n));
    if (!any) throw DomainError("degenerate configuration: vectors do not span");
    return Chirotope(r, n, std::move(signs));
}

std::vector<SignedCircuit> circuits(const OrientedMatroid& m) {
    const Chirotope& chi = m.chirotope();
    const int r = chi.rank();
    const int n = chi.ground();
    std::set<SignedCircuit> found;
    if (r + 1 <= n) {
        std::vector<int> subset(r + 1);
        for (int i = 0; i <= r; ++i) subset[i] = i + 1;
        std::vector<int> rest(r);
        do {
            SignedCircuit c;
            for (int i = 0; i <= r; ++i) {
                rest.clear();
                for (int j = 0; j <= r; ++j)
                    if (j != i) rest.push_back(subset[j]);
                Sign s = chi.on_subset(rest);
                if (i % 2 == 1) s = negate(s);
                if (s == Sign::plus) c.positive.push_back(subset[i]);
                if (s == Sign::minus) c.negative.push_back(subset[i]);
            }
            if (c.positive.empty() && c.negative.empty()) continue;
            const bool flip = c.negative.empty()
                                  ? false
                                  : (c.positive.empty() || c.negative.front() < c.positive.front());
            found.insert(flip ? c.opposite() : c);
        } while (next_colex(subset, n));
    }
    std::vector<SignedCircuit> all(found.begin(), found.end());
    std::vector<SignedCircuit> minimal;
    for (const auto& c : all) {
        const auto sc = c.support();
        bool is_minimal = true;
        for (const auto& d : all) {
            const auto sd = d.support();
            if (sd.size() < sc.size() && is_subset_sorted(sd, sc)) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(c);
    }
    return minimal;
}

bool is_independent(std::span<const SignedCircuit> cs, std::span<const int> subset) {
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    for (const auto& c : cs)
        if (is_subset_sorted(c.support(), s)) return false;
    return true;
}

bool is_independent(const OrientedMatroid& m, std::span<const int> subset) {
    for (int e : subset)
        if (e < 1 || e > m.ground()) throw InputError("element out of range");
    return is_independent(circuits(m), subset);
}

bool convex_hull_contains(std::span<const SignedCircuit> cs, std::span<const int> subset, int x) {
    std::vector<int> a(subset.begin(), subset.end());
    std::sort(a.begin(), a.end());
    if (contains_sorted(a, x)) return true;
    for (const auto& c : cs) {
        for (const SignedCircuit& oriented : {c, c.opposite()}) {
            if (oriented.negative.size() == 1 && oriented.negative.front() == x &&
                is_subset_sorted(oriented.positive, a)) {
                return true;
            }
        }
    }
    return false;
}

bool convex_hull_contains(const OrientedMatroid& m, std::span<const int> subset, int x) {
    return convex_hull_contains(circuits(m), subset, x);
}

OrientedMatroid delete_element(const OrientedMatroid& m, int e) {
    const Chirotope& chi = m.chirotope();
    const int n = chi.ground();
    const int r = chi.rank();
    if (e < 1 || e > n) throw InputError("element out of range");
    if (r > n - 1) throw DomainError("deletion drops rank");
    const BasisIndexer idx(n - 1, r);
    std::vector<Sign> signs(idx.size());
    bool any = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::vector<int> s = idx.unrank_subset(i);
        for (int& x : s)
            if (x >= e) ++x;
        signs[i] = chi.on_subset(s);
        any |= signs[i] != Sign::zero;
    }
    if (!any) throw DomainError("deletion drops rank");
    return OrientedMatroid::trusted(Chirotope(r, n - 1, std::move(signs)));
}

OrientedMatroid join_om(const OrientedMatroid& first, const OrientedMatroid& second) {
    const Chirotope& a = first.chirotope();
    const Chirotope& b = second.chirotope();
    const int n1 = a.ground();
    const int r1 = a.rank();
    const int n = n1 + b.ground();
    const int r = r1 + b.rank();
    const BasisIndexer idx(n, r);
    std::vector<Sign> signs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::vector<int> s = idx.unrank_subset(i);
        std::vector<int> part1, part2;
        for (int x : s) {
            if (x <= n1) part1.push_back(x);
            else part2.push_back(x - n1);
        }
        if (static_cast<int>(part1.size()) != r1) continue;
        // The concatenation (part1, part2 + n1) is already sorted, so the shuffle sign is plus.
        signs[i] = a.on_subset(part1) * b.on_subset(part2);
    }
    return OrientedMatroid::trusted(Chirotope(r, n, std::move(signs)));
}

OrientedMatroid empty_om() { return OrientedMatroid::trusted(Chirotope(0, 0, {Sign::plus})); }

bool has_loop(const OrientedMatroid& m) {
    const Chirotope& chi = m.chirotope();
    std::vector<bool> in_basis(chi.ground() + 1, false);
    for (std::size_t i = 0; i < chi.indexer().size(); ++i) {
        if (chi.at(i) == Sign::zero) continue;
        for (int e : chi.indexer().unrank_subset(i)) in_basis[e] = true;
    }
    for (int e = 1; e <= chi.ground(); ++e)
        if (!in_basis[e]) return true;
    return false;
}

bool is_totally_cyclic(const OrientedMatroid& m) {
    std::vector<bool> covered(m.ground() + 1, false);
    for (const auto& c : circuits(m)) {
        if (!c.negative.empty()) continue;
        for (int e : c.positive) covered[e] = true;
    }
    return std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; });
}

OrientedMatroid relabel(const OrientedMatroid& m, std::span<const int> image) {
    const Chirotope& chi = m.chirotope();
    const int n = chi.ground();
    if (static_cast<int>(image.size()) != n) throw InputError("relabelling has wrong length");
    std::vector<int> preimage(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int j = image[i - 1];
        if (j < 1 || j > n || preimage[j] != 0) throw InputError("relabelling is not a permutation");
        preimage[j] = i;
    }
    const BasisIndexer& idx = chi.indexer();
    std::vector<Sign> signs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::vector<int> t = idx.unrank_subset(i);
        for (int& x : t) x = preimage[x];
        signs[i] = eval_tuple(chi, t);
    }
    return OrientedMatroid::trusted(Chirotope(chi.rank(), n, std::move(signs)));
}

Chirotope representative_with(const OrientedMatroid& m, std::span<const int> basis, Sign value) {
    const Sign current = m.chirotope().on_subset(basis);
    if (current == Sign::zero || value == Sign::zero)
        throw DomainError("basis is not a basis of the oriented matroid");
    return current == value ? m.chirotope() : m.chirotope().negated();
}

}  // namespace omflat
