#pragma once

#include "json.hpp"

#include "omflat/closure_witness.hpp"
#include "omflat/cycle_maps.hpp"
#include "omflat/duality.hpp"
#include "omflat/flattening_poset.hpp"
#include "omflat/homology.hpp"

namespace omflat {

using Json = nlohmann::ordered_json;

/// {"elements": [...keys], "covers": [[i, j], ...], "minimal": [...], "maximal": [...]}
Json poset_to_json(const FinitePoset& p);
Json flattening_poset_to_json(const FlatteningPoset& p);

/// {"betti": [...], "torsion": [[...], ...], "euler_characteristic": x, ...}
Json homology_to_json(const HomologyResult& h);
Json certificate_to_json(const ContractibilityCertificate& c);

Json duality_report_to_json(const DualityReport& r);
Json f0f1_report_to_json(const F0F1Report& r);
Json flattening_to_json_value(const Flattening& f);
Json cover_witness_to_json(const OrientedMatroid& n, const OrientedMatroid& m, const CoverWitness& w);

}  // namespace omflat
