#include "omflat/closure_witness.hpp"

#include <algorithm>
#include <map>

#include "omflat/errors.hpp"
#include "omflat/flattening_poset.hpp"
#include "omflat/poset.hpp"

namespace omflat {

namespace {

Sign ordered(const Chirotope& chi, int i, int j) {
    const std::vector<int> t{i, j};
    return chi.evaluate(t);
}

// Orientation flips putting every element in the closed half plane starting at element 1.
std::vector<Sign> half_plane_signs(const Chirotope& chi) {
    const int n = chi.ground();
    std::vector<Sign> s(n + 1, Sign::plus);
    int witness = 0;
    for (int k = 2; k <= n && witness == 0; ++k)
        if (ordered(chi, 1, k) != Sign::zero) witness = k;
    for (int j = 2; j <= n; ++j) {
        const Sign c = ordered(chi, 1, j);
        s[j] = c != Sign::zero ? c : ordered(chi, j, witness) * ordered(chi, 1, witness);
    }
    return s;
}

Rational max_abs(const RationalVector& v) {
    Rational out = 0;
    for (const auto& x : v) out = std::max(out, Rational(abs(x)));
    return out;
}

}  // namespace

std::vector<RationalVector> realize_rank2(const OrientedMatroid& m) {
    if (m.rank() != 2) throw InputError("realize_rank2 needs a rank-2 oriented matroid");
    if (has_loop(m)) throw DomainError("cannot realize an oriented matroid with loops by nonzero vectors");
    const Chirotope& chi = m.chirotope();
    const int n = chi.ground();
    const std::vector<Sign> s = half_plane_signs(chi);
    std::vector<int> before(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (s[i] * s[j] * ordered(chi, j, i) == Sign::plus) ++before[i];
    std::vector<int> levels(before.begin() + 1, before.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<RationalVector> out;
    for (int i = 1; i <= n; ++i) {
        const long p = std::lower_bound(levels.begin(), levels.end(), before[i]) - levels.begin();
        const long scale = s[i] == Sign::plus ? 1 : -1;
        out.push_back({Rational(scale * (1 - p * p)), Rational(scale * 2 * p)});
    }
    if (!(OrientedMatroid::trusted(chirotope_from_vectors(out)) == m))
        throw std::logic_error("angular realization does not reproduce the oriented matroid");
    return out;
}

CoverWitness cover_witness(const OrientedMatroid& n, const OrientedMatroid& m, const Rational& delta,
                           const SimplicialSphere& cycle) {
    if (cycle.dim() != 1) throw InputError("cover witnesses are built for cycle spheres");
    if (delta <= 0) throw InputError("delta must be positive");
    if (n == m || !weak_leq(n, m)) throw InputError("cover witness needs N < M in the weak-map order");
    if (!is_om_flattening(n, cycle) || !is_om_flattening(m, cycle))
        throw InputError("both oriented matroids must be oriented matroid flattenings of " +
                         cycle.descriptor());

    CoverWitness result;
    if (has_loop(n) || has_loop(m)) {
        result.note = "loops present";
        return result;
    }
    const int size = n.ground();
    Flattening lower{cycle, realize_rank2(n)};
    if (!is_flattening(lower)) {
        result.note = "angular realization of N is not a flattening";
        return result;
    }
    const Chirotope chi_u = chirotope_from_vectors(lower.coords);
    auto below = [&](const Chirotope& upper) {
        for (std::size_t i = 0; i < chi_u.signs().size(); ++i)
            if (!sign_leq(chi_u.at(i), upper.at(i))) return false;
        return true;
    };
    const Chirotope chi_m = below(m.chirotope()) ? m.chirotope() : m.chirotope().negated();

    // Parallel classes of the realization, keyed by their least element.
    std::vector<int> root(size + 1);
    std::map<int, std::vector<int>> classes;
    for (int i = 1; i <= size; ++i) {
        root[i] = i;
        for (int j = 1; j < i; ++j)
            if (ordered(chi_u, i, j) == Sign::zero) {
                root[i] = root[j];
                break;
            }
        classes[root[i]].push_back(i);
    }
    // Rank within each class according to M: tau_i counts class members before i.
    const std::vector<Sign> s = half_plane_signs(chi_u);
    std::vector<long> tau(size + 1, 0);
    long tau_max = 0;
    for (const auto& [key, members] : classes)
        for (int i : members) {
            for (int j : members)
                if (ordered(chi_m, j, i) * s[i] * s[j] == Sign::plus) ++tau[i];
            tau_max = std::max(tau_max, tau[i]);
        }
    if (tau_max == 0) {
        result.note = "M does not split any parallel class of N";
        return result;
    }
    Rational scale = 0;
    for (const auto& v : lower.coords) scale = std::max(scale, max_abs(v));
    Rational epsilon = delta / (tau_max * scale + 1);

    for (int attempt = 0; attempt < 64; ++attempt, epsilon /= 2) {
        Flattening upper{cycle, lower.coords};
        for (int i = 1; i <= size; ++i) {
            const RationalVector& u = lower.coords[i - 1];
            upper.coords[i - 1] = {u[0] - epsilon * tau[i] * u[1], u[1] + epsilon * tau[i] * u[0]};
        }
        if (!is_flattening(upper)) continue;
        if (!(mu0(upper) == m)) continue;
        Rational distance = 0;
        for (int i = 0; i < size; ++i)
            for (int c = 0; c < 2; ++c)
                distance = std::max(distance, Rational(abs(upper.coords[i][c] - lower.coords[i][c])));
        if (distance > delta || !(mu0(lower) == n)) continue;
        result.found = true;
        result.distance = distance;
        result.lower = std::move(lower);
        result.upper = std::move(upper);
        return result;
    }
    result.note = "perturbation search exhausted";
    return result;
}

}  // namespace omflat
