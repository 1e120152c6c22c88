#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omflat/chirotope.hpp"
#include "omflat/exact.hpp"

namespace omflat {

/// Rank n-r dual: chi*(S) = chi(complement of S) * sign of the permutation (S, complement).
OrientedMatroid dual(const OrientedMatroid& m);

/// Row-reduces a full-rank r x n matrix to (I_r | A). Throws DomainError when the rank is
/// below r or the first r columns are dependent.
RationalMatrix reduce_to_identity_form(const RationalMatrix& v);

/// (I_r | A) -> (-A^T | I_{n-r}); throws InputError("normalize first") otherwise.
RationalMatrix orthogonal_complement(const RationalMatrix& v);

enum class DiagramOutcome { agree, disagree, degenerate };

/// Compares normalize(chi(V^perp columns)) with dual(normalize(chi(V columns))) at one point.
DiagramOutcome check_duality_diagram_at(const RationalMatrix& v);

struct DualityReport {
    int rank = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int agreements = 0;
    int degenerate = 0;
    /// Sign strings of V's oriented matroid for every failing trial.
    std::vector<std::string> failures;
};

/// Random points (I_r | A) of Gr(r, r+2), entries p/q with |p| <= 20, 1 <= q <= 10.
DualityReport verify_duality_diagram(int r, int trials, std::uint64_t seed);

}  // namespace omflat
