#include "omflat/duality.hpp"

#include "omflat/errors.hpp"
#include "omflat/random.hpp"

namespace omflat {

OrientedMatroid dual(const OrientedMatroid& m) {
    const Chirotope& chi = m.chirotope();
    const int n = chi.ground();
    const int r = chi.rank();
    if (n - r < 1) throw DomainError("dual needs corank at least 1");
    const BasisIndexer idx(n, n - r);
    std::vector<Sign> signs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::vector<int> s = idx.unrank_subset(i);
        std::vector<int> complement;
        std::vector<int> order = s;
        std::size_t k = 0;
        for (int e = 1; e <= n; ++e) {
            if (k < s.size() && s[k] == e) {
                ++k;
                continue;
            }
            complement.push_back(e);
            order.push_back(e);
        }
        signs[i] = chi.on_subset(complement) * permutation_sign(order);
    }
    return OrientedMatroid::trusted(Chirotope(n - r, n, std::move(signs)));
}

RationalMatrix reduce_to_identity_form(const RationalMatrix& v) {
    std::vector<std::size_t> pivots;
    const RationalMatrix reduced = v.rref(&pivots);
    if (pivots.size() < v.rows()) throw DomainError("matrix does not have full row rank");
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != i) throw DomainError("leading columns are dependent");
    return reduced;
}

RationalMatrix orthogonal_complement(const RationalMatrix& v) {
    const std::size_t r = v.rows();
    const std::size_t n = v.cols();
    if (r > n) throw InputError("normalize first: more rows than columns");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (v(i, j) != (i == j ? 1 : 0))
                throw InputError("normalize first: matrix is not of the form (I | A)");
    const std::size_t c = n - r;
    RationalMatrix w(c, n);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < r; ++j) w(i, j) = -v(j, r + i);
        w(i, r + i) = 1;
    }
    return w;
}

DiagramOutcome check_duality_diagram_at(const RationalMatrix& v) {
    RationalMatrix reduced;
    try {
        reduced = reduce_to_identity_form(v);
    } catch (const DomainError&) {
        return DiagramOutcome::degenerate;
    }
    if (reduced.cols() <= reduced.rows()) return DiagramOutcome::degenerate;
    const RationalMatrix w = orthogonal_complement(reduced);
    const OrientedMatroid primal = normalize(chirotope_from_vectors(reduced.columns()));
    const OrientedMatroid perp = normalize(chirotope_from_vectors(w.columns()));
    return perp == dual(primal) ? DiagramOutcome::agree : DiagramOutcome::disagree;
}

DualityReport verify_duality_diagram(int r, int trials, std::uint64_t seed) {
    if (r < 2) throw InputError("duality diagram check needs r >= 2");
    DualityReport report;
    report.rank = r;
    report.trials = trials;
    report.seed = seed;
    const SplitMix64 root(seed);
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = root.split(static_cast<std::uint64_t>(t));
        RationalMatrix v(r, r + 2);
        for (int i = 0; i < r; ++i) {
            v(i, i) = 1;
            for (int j = 0; j < 2; ++j) v(i, r + j) = rng.rational(20, 10);
        }
        switch (check_duality_diagram_at(v)) {
            case DiagramOutcome::agree: ++report.agreements; break;
            case DiagramOutcome::degenerate: ++report.degenerate; break;
            case DiagramOutcome::disagree:
                report.failures.push_back(normalize(chirotope_from_vectors(v.columns())).key());
                break;
        }
    }
    return report;
}

}  // namespace omflat
