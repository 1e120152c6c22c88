#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omflat/flattening_poset.hpp"
#include "omflat/homology.hpp"

namespace omflat {

/// Which ordered basis of cycle(N) (N = n+1) the lowering/raising maps act on.
enum class BasisVariant {
    printed,  ///< (n, 1)
    n_succ,   ///< (n, n+1)
    succ_1,   ///< (n+1, 1)
};

BasisVariant parse_basis_variant(std::string_view text);
std::string to_string(BasisVariant v);
/// The ordered pair acted on in cycle(cycle_size).
std::pair<int, int> variant_basis(BasisVariant v, int cycle_size);

/// Raised when a formula output is not a chirotope or leaves the poset it should land in.
class FormulaAnomaly : public std::runtime_error {
public:
    FormulaAnomaly(const std::string& element, const std::string& what)
        : std::runtime_error("formula anomaly at " + element + ": " + what), element_(element) {}
    const std::string& element() const noexcept { return element_; }

private:
    std::string element_;
};

/// Representative positive on {1,2}; the entry on the chosen ordered basis stays plus if it
/// was plus and becomes zero otherwise. Throws FormulaAnomaly if the result is not a chirotope.
OrientedMatroid f0_map(const OrientedMatroid& m, BasisVariant variant = BasisVariant::printed);
/// Representative positive on {1,2}; the entry on the chosen ordered basis is set to plus.
OrientedMatroid f1_map(const OrientedMatroid& m, BasisVariant variant = BasisVariant::printed);

struct SigmaSubposet {
    /// Indices into P that pass both filters.
    std::vector<std::size_t> members;
    /// Elements accepted by exactly one of the two filters (deletion lies in the smaller
    /// cycle's poset / the last vertex lies in the hull of {1, n}).
    std::vector<std::size_t> divergences;
    FinitePoset poset;
};

/// P must be the flattening poset of cycle(N), N >= 4.
SigmaSubposet sigma_subposet(const FlatteningPoset& p, const FlatteningPoset& smaller);

struct NamedHomology {
    std::string name;
    std::size_t size = 0;
    ContractibilityCertificate certificate;
};

struct F0F1Report {
    int cycle_size = 0;
    BasisVariant variant = BasisVariant::printed;
    std::size_t p_size = 0;
    std::size_t p0_size = 0;
    std::size_t sigma_size = 0;
    std::size_t smaller_size = 0;
    std::vector<std::string> anomalies;
    bool f0_monotone = false;
    bool f0_descending = false;
    bool f0_idempotent = false;
    bool f1_monotone = false;
    bool f1_ascending = false;
    bool f1_idempotent = false;
    bool f0_entrywise_lowering = false;
    bool f1_entrywise_raising = false;
    bool image_equals_sigma = false;
    std::size_t sigma_filter_divergences = 0;
    bool deletion_well_defined = false;
    bool deletion_surjective = false;
    bool deletion_bijective = false;
    /// Filled when homology was requested: P, P0, Sigma and the smaller cycle's poset.
    std::vector<NamedHomology> homology;

    /// Every required check holds (bijectivity and homology are informational).
    bool passed() const;
};

/// Exhaustive check of the lowering/raising maps on P(cycle(cycle_size)).
F0F1Report verify_f0f1(int cycle_size, BasisVariant variant = BasisVariant::printed,
                       bool with_homology = false, const Budget* budget = nullptr);

}  // namespace omflat
