#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace omflat {

enum class SphereFamily { cycle, simplex_boundary, join, other };

/// Facet-listed simplicial sphere on vertices 1..n.
class SimplicialSphere {
public:
    /// Boundary of a polygon with n >= 3 vertices, edges {i, i+1} and {n, 1}.
    static SimplicialSphere cycle(int n);
    /// Boundary of the m-simplex: m+1 vertices, facets are all m-subsets.
    static SimplicialSphere simplex_boundary(int m);
    /// Facets are unions of a facet of a and a facet of b; b's vertices are shifted.
    static SimplicialSphere join(const SimplicialSphere& a, const SimplicialSphere& b);
    /// "cycle:n" | "simplex:m" | "join:a,b" (join of two simplex boundaries).
    static SimplicialSphere parse(std::string_view spec);

    int dim() const noexcept { return dim_; }
    int vertex_count() const noexcept { return vertex_count_; }
    /// Rank of the oriented matroids that can flatten this sphere.
    int rank() const noexcept { return dim_ + 1; }
    int corank() const noexcept { return vertex_count_ - dim_ - 1; }
    const std::vector<std::vector<int>>& facets() const noexcept { return facets_; }
    SphereFamily family() const noexcept { return family_; }
    /// Descriptor in the parse grammar ("cycle:5", "join:1,2", ...).
    const std::string& descriptor() const noexcept { return descriptor_; }

    /// Every nonempty face, sorted, without duplicates.
    std::vector<std::vector<int>> faces() const;
    /// For 1-spheres: vertices in cyclic order, starting at vertex 1 and stepping first to
    /// its smaller neighbour.
    std::vector<int> cyclic_order() const;

private:
    SimplicialSphere(int dim, int vertex_count, std::vector<std::vector<int>> facets,
                     SphereFamily family, std::string descriptor);

    int dim_;
    int vertex_count_;
    std::vector<std::vector<int>> facets_;
    SphereFamily family_;
    std::string descriptor_;
};

}  // namespace omflat
