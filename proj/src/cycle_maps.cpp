#include "omflat/cycle_maps.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace omflat {

namespace {

const std::vector<int> kEdge12{1, 2};

enum class Action { lower, raise };

OrientedMatroid apply(const OrientedMatroid& m, BasisVariant variant, Action action) {
    if (m.rank() != 2) throw InputError("lowering/raising maps act on rank-2 oriented matroids");
    Chirotope chi = representative_with(m, kEdge12, Sign::plus);
    const auto [a, b] = variant_basis(variant, m.ground());
    const std::vector<int> ordered{a, b};
    const Sign value = chi.evaluate(ordered);
    const Sign next = action == Action::raise ? Sign::plus
                                              : (value == Sign::plus ? Sign::plus : Sign::zero);
    const Sign orientation = a < b ? Sign::plus : Sign::minus;
    const std::vector<int> sorted{std::min(a, b), std::max(a, b)};
    std::vector<Sign> signs(chi.signs().begin(), chi.signs().end());
    signs[chi.indexer().rank_subset(sorted)] = next * orientation;
    const Chirotope out(2, m.ground(), std::move(signs));
    const AxiomCheck check = check_chirotope_axioms(out);
    if (!check.ok)
        throw FormulaAnomaly(m.key(), std::string(action == Action::raise ? "f1" : "f0") +
                                          " output is not a chirotope (" + check.reason + ")");
    return OrientedMatroid::trusted(out);
}

// Entrywise comparison on the representatives positive on {1,2}.
bool entrywise_leq(const OrientedMatroid& lower, const OrientedMatroid& upper) {
    const Chirotope a = representative_with(lower, kEdge12, Sign::plus);
    const Chirotope b = representative_with(upper, kEdge12, Sign::plus);
    for (std::size_t i = 0; i < a.signs().size(); ++i)
        if (!sign_leq(a.at(i), b.at(i))) return false;
    return true;
}

std::map<std::string, std::size_t> index_by_key(const std::vector<OrientedMatroid>& elements) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < elements.size(); ++i) out.emplace(elements[i].key(), i);
    return out;
}

}  // namespace

BasisVariant parse_basis_variant(std::string_view text) {
    if (text == "printed") return BasisVariant::printed;
    if (text == "n-succ") return BasisVariant::n_succ;
    if (text == "succ-1") return BasisVariant::succ_1;
    throw InputError("basis variant must be one of printed, n-succ, succ-1");
}

std::string to_string(BasisVariant v) {
    switch (v) {
        case BasisVariant::printed: return "printed";
        case BasisVariant::n_succ: return "n-succ";
        case BasisVariant::succ_1: return "succ-1";
    }
    return "?";
}

std::pair<int, int> variant_basis(BasisVariant v, int cycle_size) {
    const int n = cycle_size - 1;
    switch (v) {
        case BasisVariant::printed: return {n, 1};
        case BasisVariant::n_succ: return {n, n + 1};
        case BasisVariant::succ_1: return {n + 1, 1};
    }
    return {n, 1};
}

OrientedMatroid f0_map(const OrientedMatroid& m, BasisVariant variant) {
    return apply(m, variant, Action::lower);
}

OrientedMatroid f1_map(const OrientedMatroid& m, BasisVariant variant) {
    return apply(m, variant, Action::raise);
}

SigmaSubposet sigma_subposet(const FlatteningPoset& p, const FlatteningPoset& smaller) {
    const int big = p.sphere.vertex_count();
    if (p.sphere.family() != SphereFamily::cycle || big < 4)
        throw InputError("sigma subposet needs the poset of cycle:N with N >= 4");
    if (smaller.sphere.vertex_count() != big - 1 || smaller.sphere.family() != SphereFamily::cycle)
        throw InputError("sigma subposet needs the poset of the next smaller cycle");
    const auto smaller_index = index_by_key(smaller.elements());
    const std::vector<int> ends{1, big - 1};
    SigmaSubposet out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const OrientedMatroid& m = p.elements()[i];
        bool deletion_ok = false;
        try {
            deletion_ok = smaller_index.count(delete_element(m, big).key()) > 0;
        } catch (const DomainError&) {
            deletion_ok = false;
        }
        const bool hull_ok = convex_hull_contains(m, ends, big);
        if (deletion_ok && hull_ok) out.members.push_back(i);
        else if (deletion_ok != hull_ok) out.divergences.push_back(i);
    }
    out.poset = p.poset().induced(out.members);
    return out;
}

bool F0F1Report::passed() const {
    return anomalies.empty() && f0_descending && f1_ascending && f0_entrywise_lowering &&
           f1_entrywise_raising && image_equals_sigma && deletion_well_defined &&
           deletion_surjective;
}

F0F1Report verify_f0f1(int cycle_size, BasisVariant variant, bool with_homology,
                       const Budget* budget) {
    if (cycle_size < 4) throw InputError("lowering/raising maps need cycle:N with N >= 4");
    F0F1Report report;
    report.cycle_size = cycle_size;
    report.variant = variant;

    const FlatteningPoset p = enumerate_P(SimplicialSphere::cycle(cycle_size), EnumerationPath::automatic, budget);
    const FlatteningPoset smaller =
        enumerate_P(SimplicialSphere::cycle(cycle_size - 1), EnumerationPath::automatic, budget);
    report.p_size = p.size();
    report.smaller_size = smaller.size();
    const auto index = index_by_key(p.elements());

    // f0 on P.
    MonotoneMap f0{&p.poset(), std::vector<std::size_t>(p.size())};
    bool f0_total = true;
    report.f0_entrywise_lowering = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        poll(budget, "f0");
        const OrientedMatroid& m = p.elements()[i];
        try {
            const OrientedMatroid image = f0_map(m, variant);
            const auto it = index.find(image.key());
            if (it == index.end()) {
                report.anomalies.push_back(m.key() + ": f0 image " + image.key() +
                                           " is not an oriented matroid flattening");
                f0_total = false;
                continue;
            }
            f0.assignment[i] = it->second;
            report.f0_entrywise_lowering &= entrywise_leq(image, m);
        } catch (const FormulaAnomaly& e) {
            report.anomalies.push_back(e.what());
            f0_total = false;
        }
    }
    if (!f0_total) {
        report.f0_entrywise_lowering = false;
        return report;
    }
    report.f0_monotone = f0.is_monotone();
    report.f0_descending = is_descending_homotopy(f0);
    report.f0_idempotent = f0.is_idempotent();

    // f1 on P0 = f0(P).
    const std::vector<std::size_t> p0 = f0.image();
    report.p0_size = p0.size();
    const FinitePoset p0_poset = p.poset().induced(p0);
    std::map<std::size_t, std::size_t> p0_position;
    for (std::size_t j = 0; j < p0.size(); ++j) p0_position[p0[j]] = j;
    MonotoneMap f1{&p0_poset, std::vector<std::size_t>(p0.size())};
    bool f1_total = true;
    report.f1_entrywise_raising = true;
    std::set<std::size_t> f1_image;
    for (std::size_t j = 0; j < p0.size(); ++j) {
        poll(budget, "f1");
        const OrientedMatroid& m = p.elements()[p0[j]];
        try {
            const OrientedMatroid image = f1_map(m, variant);
            const auto it = index.find(image.key());
            if (it == index.end() || p0_position.count(it->second) == 0) {
                report.anomalies.push_back(m.key() + ": f1 image " + image.key() +
                                           (it == index.end() ? " is not an oriented matroid flattening"
                                                              : " leaves the image of f0"));
                f1_total = false;
                continue;
            }
            f1.assignment[j] = p0_position[it->second];
            f1_image.insert(it->second);
            report.f1_entrywise_raising &= entrywise_leq(m, image);
        } catch (const FormulaAnomaly& e) {
            report.anomalies.push_back(e.what());
            f1_total = false;
        }
    }
    if (!f1_total) {
        report.f1_entrywise_raising = false;
        return report;
    }
    report.f1_monotone = f1.is_monotone();
    report.f1_ascending = is_ascending_homotopy(f1);
    report.f1_idempotent = f1.is_idempotent();

    // Sigma and the deletion map.
    const SigmaSubposet sigma = sigma_subposet(p, smaller);
    report.sigma_size = sigma.members.size();
    report.sigma_filter_divergences = sigma.divergences.size();
    report.image_equals_sigma =
        std::set<std::size_t>(sigma.members.begin(), sigma.members.end()) == f1_image;

    const auto smaller_index = index_by_key(smaller.elements());
    report.deletion_well_defined = true;
    std::set<std::size_t> hit;
    for (std::size_t i : sigma.members) {
        try {
            const auto it = smaller_index.find(delete_element(p.elements()[i], cycle_size).key());
            if (it == smaller_index.end()) report.deletion_well_defined = false;
            else hit.insert(it->second);
        } catch (const DomainError&) {
            report.deletion_well_defined = false;
        }
    }
    report.deletion_surjective = report.deletion_well_defined && hit.size() == smaller.size();
    report.deletion_bijective = report.deletion_surjective && sigma.members.size() == smaller.size();

    if (with_homology) {
        auto certify = [&](const std::string& name, const FinitePoset& poset) {
            report.homology.push_back({name, poset.size(), certify_contractible(poset, budget)});
        };
        certify("P", p.poset());
        certify("P0", p0_poset);
        certify("Sigma", sigma.poset);
        certify("P(cycle:" + std::to_string(cycle_size - 1) + ")", smaller.poset());
    }
    return report;
}

}  // namespace omflat
