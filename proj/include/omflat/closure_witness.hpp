#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omflat/flattening.hpp"

namespace omflat {

/// Planar vectors realizing a loop-free rank-2 oriented matroid: parallel classes sit at
/// rational circle points t = 0, 1, 2, ... in angular order. Throws DomainError for loops.
std::vector<RationalVector> realize_rank2(const OrientedMatroid& m);

struct CoverWitness {
    bool found = false;
    std::optional<Flattening> lower;  ///< mu0(lower) = N
    std::optional<Flattening> upper;  ///< mu0(upper) = M
    /// Largest coordinate difference between the two flattenings.
    Rational distance;
    std::string note;
};

/// Flattenings of N and M within coordinate distance delta, built by splitting the parallel
/// classes of a realization of N in the angular order that M prescribes. Throws InputError
/// unless N < M strictly and both are oriented matroid flattenings of the cycle.
CoverWitness cover_witness(const OrientedMatroid& n, const OrientedMatroid& m,
                           const Rational& delta, const SimplicialSphere& cycle);

}  // namespace omflat
