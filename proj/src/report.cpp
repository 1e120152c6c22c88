#include "omflat/report.hpp"

namespace omflat {

namespace {

Json integers(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

}  // namespace

Json poset_to_json(const FinitePoset& p) {
    Json covers = Json::array();
    for (const auto& [a, b] : p.hasse()) covers.push_back({a, b});
    Json minimal = Json::array();
    for (auto i : p.minimal()) minimal.push_back(p.label(i));
    Json maximal = Json::array();
    for (auto i : p.maximal()) maximal.push_back(p.label(i));
    Json out;
    out["elements"] = p.labels();
    out["covers"] = covers;
    out["minimal"] = minimal;
    out["maximal"] = maximal;
    return out;
}

Json flattening_poset_to_json(const FlatteningPoset& p) {
    Json out;
    out["sphere"] = p.sphere.descriptor();
    out["rank"] = p.sphere.rank();
    out["ground"] = p.sphere.vertex_count();
    out.update(poset_to_json(p.poset()));
    return out;
}

Json homology_to_json(const HomologyResult& h) {
    Json out;
    if (h.empty_complex) {
        out["empty_complex"] = true;
        out["note"] = "reduced homology of the empty complex is Z in degree -1";
        return out;
    }
    out["betti"] = h.betti;
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(integers(t));
    out["torsion"] = torsion;
    out["euler_characteristic"] = h.euler_characteristic;
    out["trivial"] = h.is_trivial();
    return out;
}

Json certificate_to_json(const ContractibilityCertificate& c) {
    Json out;
    out["homology"] = homology_to_json(c.homology);
    out["homology_trivial"] = c.homology_trivial();
    out["collapsible"] = c.collapsible;
    if (c.collapsible) out["collapse_steps"] = c.collapse_steps;
    return out;
}

Json duality_report_to_json(const DualityReport& r) {
    Json out;
    out["rank"] = r.rank;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["agreements"] = r.agreements;
    out["degenerate"] = r.degenerate;
    out["failures"] = r.failures;
    return out;
}

Json f0f1_report_to_json(const F0F1Report& r) {
    Json out;
    out["cycle"] = r.cycle_size;
    out["variant"] = to_string(r.variant);
    const auto [a, b] = variant_basis(r.variant, r.cycle_size);
    out["basis"] = {a, b};
    out["sizes"] = {{"P", r.p_size}, {"P0", r.p0_size}, {"Sigma", r.sigma_size}, {"smaller", r.smaller_size}};
    out["anomalies"] = r.anomalies;
    out["f0_monotone"] = r.f0_monotone;
    out["f0_descending"] = r.f0_descending;
    out["f0_idempotent"] = r.f0_idempotent;
    out["f1_monotone"] = r.f1_monotone;
    out["f1_ascending"] = r.f1_ascending;
    out["f1_idempotent"] = r.f1_idempotent;
    out["f0_entrywise_lowering"] = r.f0_entrywise_lowering;
    out["f1_entrywise_raising"] = r.f1_entrywise_raising;
    out["image_equals_sigma"] = r.image_equals_sigma;
    out["sigma_filter_divergences"] = r.sigma_filter_divergences;
    out["deletion_well_defined"] = r.deletion_well_defined;
    out["deletion_surjective"] = r.deletion_surjective;
    out["deletion_bijective"] = r.deletion_bijective;
    if (!r.homology.empty()) {
        Json h = Json::array();
        for (const auto& entry : r.homology) {
            Json item = certificate_to_json(entry.certificate);
            item["name"] = entry.name;
            item["size"] = entry.size;
            h.push_back(item);
        }
        out["homology"] = h;
    }
    return out;
}

Json flattening_to_json_value(const Flattening& f) { return Json::parse(flattening_to_json(f)); }

Json cover_witness_to_json(const OrientedMatroid& n, const OrientedMatroid& m, const CoverWitness& w) {
    Json out;
    out["lower"] = n.key();
    out["upper"] = m.key();
    out["found"] = w.found;
    if (w.found) {
        out["distance"] = format_rational(w.distance);
        out["lower_flattening"] = flattening_to_json_value(*w.lower)["coordinates"];
        out["upper_flattening"] = flattening_to_json_value(*w.upper)["coordinates"];
    } else {
        out["note"] = w.note;
    }
    return out;
}

}  // namespace omflat
