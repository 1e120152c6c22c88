#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omflat/chirotope.hpp"
#include "omflat/exact.hpp"
#include "omflat/sphere.hpp"

namespace omflat {

/// Vertex vectors of a simplexwise-linear map of the cone over `sphere` into R^{k+1};
/// coords[v-1] is the image of vertex v.
struct Flattening {
    SimplicialSphere sphere;
    std::vector<RationalVector> coords;
};

enum class FanTest {
    automatic,  ///< planar winding check for 1-spheres, generic fan check otherwise
    generic,    ///< facet determinants, wall crossings, and degree of a generic ray
    planar,     ///< consecutive determinants share a sign and the winding number is +-1
};

struct FlatteningVerdict {
    bool valid = false;
    std::string reason;
};

/// Throws InputError for zero vectors or wrong dimensions.
FlatteningVerdict check_flattening(const Flattening& f, FanTest test = FanTest::automatic);
inline bool is_flattening(const Flattening& f, FanTest test = FanTest::automatic) {
    return check_flattening(f, test).valid;
}

/// Oriented matroid of the vertex vectors; throws DomainError unless f is a flattening.
OrientedMatroid mu0(const Flattening& f);

/// GL-orbit representative sending the lexicographically least facet to the standard basis.
Flattening canonical_form(const Flattening& f);

/// Winding number of the closed polygon through the given planar vectors about the origin,
/// counted in quarter turns across the coordinate axes.
int winding_number(const std::vector<RationalVector>& cyclic_vectors);

/// Rational point on the unit circle at angle 2*atan(t).
RationalVector circle_point(const Rational& t);

struct SampleResult {
    std::vector<Flattening> flattenings;
    std::size_t attempts = 0;
    /// True when the attempt budget ran out before `count` samples were accepted.
    bool exhausted = false;
};

/// Seeded rejection sampling; 1-spheres use sorted rational circle points with small
/// heights (so antipodal coincidences occur), other spheres perturb a base flattening.
SampleResult sample_flattenings(const SimplicialSphere& sphere, std::size_t count,
                                std::uint64_t seed);

/// A known flattening for the supported families (cycle, simplex boundary, join of two
/// simplex boundaries).
Flattening base_flattening(const SimplicialSphere& sphere);

/// {"sphere": "...", "coordinates": [["p/q", ...], ...]}
std::string flattening_to_json(const Flattening& f);
Flattening flattening_from_json(const std::string& text);

}  // namespace omflat
