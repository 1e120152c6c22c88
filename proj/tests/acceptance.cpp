// Acceptance suite: one PASS/FAIL line per criterion, preceded by indented diagnostics.
// `acceptance` runs everything; `acceptance --criterion NAME` runs one criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "omflat/closure_witness.hpp"
#include "omflat/cycle_maps.hpp"
#include "omflat/duality.hpp"
#include "omflat/flattening.hpp"
#include "omflat/flattening_poset.hpp"
#include "omflat/homology.hpp"
#include "omflat/random.hpp"

using namespace omflat;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok    " : "FAILED ") + what);
    }
    void note(const std::string& text) { notes.push_back("       " + text); }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

std::string circuit_text(const SignedCircuit& c) {
    std::string s = "{";
    for (int e : c.positive) s += cat("+", e);
    for (int e : c.negative) s += cat("-", e);
    return s + "}";
}

std::string circuits_text(const OrientedMatroid& m) {
    std::string s;
    for (const auto& c : circuits(m)) s += circuit_text(c) + " ";
    return s;
}

std::set<std::string> keys(const std::vector<OrientedMatroid>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(m.key());
    return out;
}

// Totally cyclic members of P: the ones compatible with a complete fan. Diagnostic only.
std::vector<OrientedMatroid> totally_cyclic_members(const FlatteningPoset& p) {
    std::vector<OrientedMatroid> out;
    for (const auto& m : p.elements())
        if (is_totally_cyclic(m)) out.push_back(m);
    return out;
}

void singleton_posets(Outcome& o) {
    for (int m = 2; m <= 5; ++m) {
        const FlatteningPoset p = enumerate_P(SimplicialSphere::simplex_boundary(m));
        o.require(p.size() == 1, cat("|P(simplex:", m, ")| = ", p.size(), " (expected 1)"));
        if (p.size() != 1) {
            for (const auto& e : p.elements())
                if (!is_totally_cyclic(e)) {
                    o.note(cat("counterexample ", e.key(), " circuits ", circuits_text(e),
                               "is an OM flattening but not totally cyclic"));
                    break;
                }
            o.note(cat("diagnostic: ", totally_cyclic_members(p).size(),
                       " totally cyclic member(s) of P(simplex:", m, ")"));
        }
    }
}

void triangle(Outcome& o) {
    const FlatteningPoset p = enumerate_P(SimplicialSphere::cycle(3));
    o.require(p.size() == 1, cat("|P(cycle:3)| = ", p.size()));
}

void join_minimum(Outcome& o) {
    const FlatteningPoset edge = enumerate_P(SimplicialSphere::simplex_boundary(1));
    for (int m = 1; m <= 3; ++m) {
        const SimplicialSphere sphere = SimplicialSphere::parse(cat("join:1,", m));
        const FlatteningPoset p = enumerate_P(sphere);
        const FlatteningPoset factor = enumerate_P(SimplicialSphere::simplex_boundary(m));
        const auto minima = p.poset().minimal();
        o.note(cat(sphere.descriptor(), ": |P| = ", p.size(), ", minima = ", minima.size(),
                   ", |P(simplex:1)| = ", edge.size(), ", |P(simplex:", m, ")| = ", factor.size()));
        bool ok = minima.size() == 1 && edge.size() == 1 && factor.size() == 1;
        if (ok) {
            const OrientedMatroid expected = join_om(edge.elements().front(), factor.elements().front());
            ok = p.elements()[minima.front()] == expected;
            if (!ok) o.note(cat("minimum ", p.elements()[minima.front()].key(), " != join ", expected.key()));
        }
        o.require(ok, cat(sphere.descriptor(), " has a unique minimum equal to the join of the factors"));
        if (!ok) {
            const auto tc_factor = totally_cyclic_members(factor);
            std::vector<OrientedMatroid> tc = totally_cyclic_members(p);
            const WeakMapPoset q = build_weak_map_poset(tc);
            std::string verdict = "no";
            if (q.poset.minimal().size() == 1 && tc_factor.size() == 1)
                verdict = q.elements[q.poset.minimal().front()] ==
                                  join_om(edge.elements().front(), tc_factor.front())
                              ? "yes"
                              : "no";
            o.note(cat("diagnostic with total cyclicity: |P| = ", tc.size(), ", minima = ",
                       q.poset.minimal().size(), ", unique minimum equals the join: ", verdict));
        }
    }
}

void contractibility(Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
        const Budget budget(600);
        try {
            const FlatteningPoset p = enumerate_P(SimplicialSphere::cycle(n), EnumerationPath::automatic, &budget);
            const ContractibilityCertificate c = certify_contractible(p.poset(), &budget);
            std::ostringstream betti;
            for (auto b : c.homology.betti) betti << b << " ";
            o.note(cat("cycle:", n, ": |P| = ", p.size(), ", reduced betti [ ", betti.str(), "], euler ",
                       c.homology.euler_characteristic, ", collapsible ", c.collapsible ? "yes" : "no"));
            if (n <= 5)
                o.require(c.homology_trivial(), cat("order complex of P(cycle:", n, ") has trivial reduced homology"));
            else
                o.note(cat("cycle:6 reported: homology ", c.homology_trivial() ? "trivial" : "NOT trivial"));
        } catch (const BudgetExceeded& e) {
            if (n <= 5) o.require(false, cat("cycle:", n, " exceeded the budget"));
            else o.note(cat("cycle:6 not finished within 600 s: ", e.what()));
        }
    }
}

void f0f1(Outcome& o) {
    for (int n : {4, 5}) {
        const F0F1Report r = verify_f0f1(n, BasisVariant::printed);
        o.note(cat("cycle:", n, ": |P| = ", r.p_size, ", |P0| = ", r.p0_size, ", |Sigma| = ", r.sigma_size,
                   ", |P(cycle:", n - 1, ")| = ", r.smaller_size, ", deletion bijective: ",
                   r.deletion_bijective ? "yes" : "no", ", sigma filter divergences: ", r.sigma_filter_divergences));
        o.require(r.anomalies.empty(), cat("cycle:", n, " no formula anomaly"));
        for (const auto& a : r.anomalies) o.note("anomaly: " + a);
        o.require(r.f0_monotone && r.f0_descending, cat("cycle:", n, " f0 monotone and f0 <= id"));
        o.require(r.f1_monotone && r.f1_ascending, cat("cycle:", n, " f1 monotone and f1 >= id on P0"));
        o.require(r.image_equals_sigma, cat("cycle:", n, " f1(P0) = Sigma"));
        o.require(r.deletion_well_defined && r.deletion_surjective,
                  cat("cycle:", n, " deletion Sigma -> P(cycle:", n - 1, ") well-defined and surjective"));
        for (auto v : {BasisVariant::n_succ, BasisVariant::succ_1}) {
            const F0F1Report alt = verify_f0f1(n, v);
            o.note(cat("variant ", to_string(v), ": anomalies ", alt.anomalies.size(), ", f0 <= id ",
                       alt.f0_descending, ", f1 >= id ", alt.f1_ascending, ", f1(P0) = Sigma ",
                       alt.image_equals_sigma));
        }
    }
}

void duality(Outcome& o) {
    const auto macp25 = enumerate_rank2_oms(5, true);
    bool involution = true;
    for (const auto& m : macp25) involution &= dual(dual(m)) == m;
    o.require(involution, cat("dual is an involution on MacP(2,5) (", macp25.size(), " elements)"));

    const DualityReport d = verify_duality_diagram(3, 100, 7);
    o.note(cat("diagram r=3: ", d.agreements, " agree, ", d.degenerate, " degenerate, ", d.failures.size(), " fail"));
    o.require(d.failures.empty(), "duality diagram has zero failures over 100 seeded trials");

    const auto macp35 = search_oms_by_signs(3, 5, true);
    std::vector<OrientedMatroid> image;
    for (const auto& m : macp35) image.push_back(dual(m));
    const WeakMapPoset lhs = build_weak_map_poset(image);
    const WeakMapPoset rhs = build_weak_map_poset(macp25);
    std::vector<std::size_t> map(lhs.poset.size(), rhs.poset.size());
    bool total = lhs.poset.size() == rhs.poset.size();
    for (std::size_t i = 0; i < lhs.poset.size() && total; ++i) {
        map[i] = rhs.poset.find(lhs.poset.label(i));
        total = map[i] < rhs.poset.size();
    }
    const bool iso = total && is_order_isomorphism(lhs.poset, rhs.poset, map);
    o.note(cat("|MacP(3,5)| = ", macp35.size(), ", |MacP(2,5)| = ", macp25.size()));
    o.require(iso, "dual image of MacP(3,5) is poset-isomorphic to MacP(2,5) (exhaustive pairwise check)");
}

void enumeration_oracle(Outcome& o) {
    for (int n = 3; n <= 5; ++n)
        for (bool loops : {false, true}) {
            const auto a = keys(enumerate_rank2_oms(n, loops));
            const auto b = keys(search_oms_by_signs(2, n, loops));
            o.require(a == b, cat("n = ", n, loops ? " with" : " without", " loops: ", a.size(), " angular vs ",
                                  b.size(), " sign-array search"));
        }
}

void closure_witnesses(Outcome& o) {
    const Rational delta(1, 1000000);
    for (int n : {4, 5}) {
        const auto cycle = SimplicialSphere::cycle(n);
        const FlatteningPoset p = enumerate_P(cycle);
        std::size_t found = 0;
        for (const auto& [a, b] : p.poset().hasse()) {
            const CoverWitness w = cover_witness(p.elements()[a], p.elements()[b], delta, cycle);
            const bool ok = w.found && w.distance <= delta && mu0(*w.lower) == p.elements()[a] &&
                            mu0(*w.upper) == p.elements()[b];
            if (ok) ++found;
            else o.note(cat("cover ", p.elements()[a].key(), " < ", p.elements()[b].key(), ": ", w.note));
        }
        o.require(found == p.poset().hasse().size(),
                  cat("cycle:", n, ": ", found, "/", p.poset().hasse().size(), " covers witnessed within 1/1000000"));
    }
}

RationalVector angle_point(double angle) {
    Rational t(std::lround(std::tan(angle / 2) * 256), 256UL);
    t.canonicalize();
    return circle_point(t);
}

// Invalid planar configurations by construction, cycling through four kinds.
std::vector<RationalVector> invalid_configuration(int n, int index, SplitMix64& rng, const Flattening& valid) {
    std::vector<RationalVector> v = valid.coords;
    const int j = static_cast<int>(rng.uniform(0, n - 1));
    const int next = (j + 1) % n;
    const Rational lambda(static_cast<long>(rng.uniform(1, 5)), static_cast<unsigned long>(rng.uniform(1, 5)));
    switch (index % 4) {
        case 0:  // everything in the open upper half-plane
            for (auto& x : v) x = {rng.rational(5, 3), Rational(static_cast<long>(rng.uniform(1, 5)))};
            break;
        case 1:  // a degenerate edge cone: consecutive vectors parallel
            v[next] = {v[j][0] * lambda, v[j][1] * lambda};
            break;
        case 2:  // a degenerate edge cone: consecutive vectors opposite
            v[next] = {-v[j][0] * lambda, -v[j][1] * lambda};
            break;
        default:
            if (n >= 5) {  // winds twice around the origin
                const double offset = static_cast<double>(rng.uniform(0, 99)) / 100.0;
                for (int i = 0; i < n; ++i) v[i] = angle_point(4 * std::numbers::pi * (i + offset) / n - std::numbers::pi);
            } else {  // folds back: three vectors in an open half-plane, the rest repeated
                for (int i = 0; i < n; ++i) v[i] = angle_point((i % 2 == 0 ? 0.3 : 1.2) + 0.1 * i);
            }
    }
    return v;
}

void validator_agreement(Outcome& o) {
    for (int n = 3; n <= 7; ++n) {
        const auto sphere = SimplicialSphere::cycle(n);
        const SampleResult valid = sample_flattenings(sphere, 200, 1000 + n);
        std::size_t agree_valid = 0, agree_invalid = 0;
        for (const auto& f : valid.flattenings)
            if (is_flattening(f, FanTest::planar) && is_flattening(f, FanTest::generic)) ++agree_valid;
        SplitMix64 rng(2000 + n);
        for (int i = 0; i < 200; ++i) {
            const Flattening g{sphere, invalid_configuration(n, i, rng, valid.flattenings[i])};
            const bool planar = is_flattening(g, FanTest::planar);
            const bool generic = is_flattening(g, FanTest::generic);
            if (!planar && !generic) ++agree_invalid;
            else if (planar != generic) o.note(cat("n = ", n, " disagreement on invalid configuration ", i));
        }
        o.require(valid.flattenings.size() == 200 && agree_valid == 200 && agree_invalid == 200,
                  cat("cycle:", n, ": valid ", agree_valid, "/", valid.flattenings.size(),
                      ", invalid ", agree_invalid, "/200 rejected by both checks"));
    }
    const auto via_duality = keys(enumerate_flattening_oms(SimplicialSphere::parse("join:1,1"), EnumerationPath::duality));
    std::set<std::string> cycle_relabelled;
    const std::vector<int> image{1, 3, 2, 4};
    for (const auto& m : enumerate_flattening_oms(SimplicialSphere::cycle(4), EnumerationPath::rank2_direct))
        cycle_relabelled.insert(relabel(m, image).key());
    o.require(via_duality == cycle_relabelled,
              cat("join:1,1 via duality (", via_duality.size(), ") equals cycle:4 directly (",
                  cycle_relabelled.size(), ") under the vertex identification 1,3,2,4"));
}

void stratification(Outcome& o) {
    for (const char* spec : {"cycle:4", "cycle:5", "simplex:3"}) {
        const auto sphere = SimplicialSphere::parse(spec);
        const FlatteningPoset p = enumerate_P(sphere);
        const auto members = keys(p.elements());
        const SampleResult s = sample_flattenings(sphere, 1000, 17);
        std::map<std::string, std::size_t> histogram;
        std::size_t inside = 0;
        for (const auto& f : s.flattenings) {
            const OrientedMatroid m = mu0(f);
            ++histogram[m.key()];
            inside += members.count(m.key());
        }
        o.require(s.flattenings.size() == 1000 && inside == 1000,
                  cat(spec, ": ", inside, "/", s.flattenings.size(), " images in P, ", histogram.size(),
                      " distinct strata of ", p.size()));
        if (sphere.family() == SphereFamily::simplex_boundary) {
            const bool unique = p.size() == 1 && histogram.size() == 1 &&
                                histogram.begin()->first == p.elements().front().key();
            o.require(unique, cat(spec, ": every image is the unique element of P (|P| = ", p.size(), ")"));
            if (!unique && histogram.size() == 1) {
                const auto tc = totally_cyclic_members(p);
                o.note(cat("diagnostic: all images equal ", histogram.begin()->first,
                           tc.size() == 1 && tc.front().key() == histogram.begin()->first
                               ? ", the only totally cyclic member of P"
                               : ""));
            }
        }
    }
}

SimplicialComplex complex_of(int n, std::vector<Simplex> faces) {
    for (auto& f : faces)
        for (auto& v : f) --v;
    return SimplicialComplex::from_maximal(n, faces);
}

void homology_engine(Outcome& o) {
    const auto hollow = reduced_homology(complex_of(3, {{1, 2}, {1, 3}, {2, 3}}));
    o.require(hollow.betti == std::vector<std::int64_t>{0, 1}, "hollow triangle: reduced betti_1 = 1");
    const auto full = reduced_homology(complex_of(4, {{1, 2, 3, 4}}));
    o.require(full.is_trivial(), "full 3-simplex: all reduced betti numbers zero");
    const auto points = reduced_homology(complex_of(2, {{1}, {2}}));
    o.require(points.betti == std::vector<std::int64_t>{1}, "two points: reduced betti_0 = 1");

    std::vector<SimplicialComplex> generated{
        complex_of(3, {{1, 2}, {1, 3}, {2, 3}}), complex_of(4, {{1, 2, 3, 4}}), complex_of(2, {{1}, {2}}),
        complex_of(6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                       {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}})};
    for (int n = 3; n <= 5; ++n) generated.push_back(order_complex(enumerate_P(SimplicialSphere::cycle(n)).poset()));
    bool nilpotent = true;
    for (const auto& k : generated) {
        const auto d = boundary_matrices(k);
        for (int i = 2; i <= k.dimension(); ++i) nilpotent &= d[i - 1].multiply(d[i]).is_zero();
    }
    o.require(nilpotent, cat("boundary squared is zero on ", generated.size(), " generated complexes"));
    std::vector<std::vector<Integer>> m{{Integer(2), Integer(0)}, {Integer(0), Integer(3)}};
    o.require(smith_normal_form(m) == std::vector<Integer>{Integer(1), Integer(6)}, "SNF of diag(2,3) = (1,6)");
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"singleton-posets", "singleton posets P(simplex:m), m = 2..5", 10, singleton_posets},
        {"triangle", "triangle base case |P(cycle:3)| = 1", 1, triangle},
        {"join-minimum", "join minimum of P(join:1,m), m = 1..3", 60, join_minimum},
        {"contractibility", "contractibility certificates for P(cycle:n), n = 3..5 (6 reported)", 1800, contractibility},
        {"lowering-raising", "f0/f1 lowering and raising maps on P(cycle:4), P(cycle:5)", 60, f0f1},
        {"duality", "duality involution, diagram, and MacP(3,5) ~ MacP(2,5)", 60, duality},
        {"enumeration-oracle", "rank-2 enumeration equals sign-array search, n = 3..5", 120, enumeration_oracle},
        {"closure-witnesses", "closure witnesses for every cover of P(cycle:4), P(cycle:5)", 120, closure_witnesses},
        {"validator-agreement", "planar and generic flattening checks agree; join:1,1 equals cycle:4", 120, validator_agreement},
        {"stratification", "stratification sanity over 1000 samples per sphere", 60, stratification},
        {"homology-engine", "homology engine validation", 1, homology_engine},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"omflat acceptance suite"};
    std::string only;
    bool list = false;
    app.add_option("--criterion", only, "run a single criterion by name");
    app.add_flag("--list", list, "print the criterion names");
    CLI11_PARSE(app, argc, argv);
    if (list) {
        for (const Criterion& c : criteria()) std::cout << c.id << "\n";
        return 0;
    }
    bool known = only.empty();
    for (const Criterion& c : criteria()) known |= c.id == only;
    if (!known) {
        std::cerr << "unknown criterion '" << only << "'; see --list\n";
        return 2;
    }

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!only.empty() && c.id != only) continue;
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, cat("exception: ", e.what()));
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.require(seconds < c.limit_seconds, cat("runtime ", seconds, " s within ", c.limit_seconds, " s"));
        for (const auto& line : outcome.notes) std::cout << "    " << line << "\n";
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << c.id << ": " << c.title << "\n" << std::flush;
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
