#pragma once

#include <vector>

#include "omflat/chirotope.hpp"
#include "omflat/errors.hpp"
#include "omflat/poset.hpp"
#include "omflat/sphere.hpp"

namespace omflat {

/// Facets independent, and no vertex outside a face lies in the face's convex hull.
/// Throws InputError when rank or ground size does not match the sphere.
bool is_om_flattening(const OrientedMatroid& m, const SimplicialSphere& sphere);
bool is_om_flattening(const OrientedMatroid& m, std::span<const SignedCircuit> circuits,
                      const SimplicialSphere& sphere);

/// All rank-2 oriented matroids on n <= 8 elements, from the angular model: an ordered
/// partition of the non-loops into parallel classes around a half circle plus a sign per
/// element. Sorted by key.
std::vector<OrientedMatroid> enumerate_rank2_oms(int n, bool allow_loops);

/// Brute force over every sign array with first nonzero entry plus (at most 3^12 arrays),
/// keeping those that pass check_chirotope_axioms. Sorted by key.
std::vector<OrientedMatroid> search_oms_by_signs(int rank, int n, bool allow_loops,
                                                 const Budget* budget = nullptr);

enum class EnumerationPath {
    automatic,     ///< rank 2 direct, corank 1 from circuit signs, corank 2 by duality
    rank2_direct,  ///< requires rank 2
    duality,       ///< requires corank 2: dualize rank-2 oriented matroids (loops allowed)
};

/// Sorted list of all oriented matroid flattenings of the sphere.
std::vector<OrientedMatroid> enumerate_flattening_oms(const SimplicialSphere& sphere,
                                                      EnumerationPath path = EnumerationPath::automatic,
                                                      const Budget* budget = nullptr);

struct FlatteningPoset {
    SimplicialSphere sphere;
    WeakMapPoset order;

    std::size_t size() const { return order.elements.size(); }
    const FinitePoset& poset() const { return order.poset; }
    const std::vector<OrientedMatroid>& elements() const { return order.elements; }
};

/// P(L) under the weak-map order. Throws InputError("... out of supported family") for
/// spheres outside cycles (n <= 8), simplex boundaries (m <= 6) and corank-2 joins.
FlatteningPoset enumerate_P(const SimplicialSphere& sphere,
                            EnumerationPath path = EnumerationPath::automatic,
                            const Budget* budget = nullptr);

}  // namespace omflat
