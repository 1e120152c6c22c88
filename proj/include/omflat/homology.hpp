#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "omflat/errors.hpp"
#include "omflat/exact.hpp"
#include "omflat/poset.hpp"

namespace omflat {

using Simplex = std::vector<int>;

struct CollapseResult;

/// Abstract simplicial complex on vertices 0..n-1; simplices kept sorted per dimension.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Closure of the given faces under taking subsets.
    static SimplicialComplex from_maximal(int vertex_count, const std::vector<Simplex>& faces);

    int vertex_count() const noexcept { return vertex_count_; }
    /// Highest simplex dimension, -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t total() const;
    bool empty() const noexcept { return by_dim_.empty(); }
    /// Index of a sorted simplex within its dimension, or -1.
    std::int64_t index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    /// sum_k (-1)^k f_k
    std::int64_t euler_characteristic() const;

private:
    friend SimplicialComplex order_complex(const FinitePoset&, const Budget*);
    friend CollapseResult greedy_collapse(const SimplicialComplex&, const Budget*);
    void finalize();

    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// k-simplices are the (k+1)-chains of the poset.
SimplicialComplex order_complex(const FinitePoset& p, const Budget* budget = nullptr);

/// Sparse integer matrix in column-major triplet-free form.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// columns[j] = sorted (row, value) pairs
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

    bool is_zero() const;
    /// Exact product this * other; throws on dimension mismatch.
    SparseMatrix multiply(const SparseMatrix& other) const;
};

/// boundary[k] maps k-chains to (k-1)-chains, k = 1..dim; boundary[0] is left empty.
std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& k);

/// Invariant factors d_1 | d_2 | ... (all positive) of a dense integer matrix.
std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> matrix);

/// Nonunit invariant factors plus rank of a sparse integer matrix; unit pivots are
/// eliminated sparsely and the remainder handed to smith_normal_form.
struct SparseSmith {
    std::size_t rank = 0;
    std::vector<Integer> nonunit_factors;
};
SparseSmith sparse_smith(const SparseMatrix& m, const Budget* budget = nullptr);

struct HomologyResult {
    /// Reduced Betti numbers by dimension 0..dim.
    std::vector<std::int64_t> betti;
    /// Torsion invariant factors (> 1) by dimension.
    std::vector<std::vector<Integer>> torsion;
    std::int64_t euler_characteristic = 0;
    /// Empty complex: reduced homology is Z in degree -1 and nothing else.
    bool empty_complex = false;

    bool is_trivial() const;
};

HomologyResult reduced_homology(const SimplicialComplex& k, const Budget* budget = nullptr);

/// Position of a simplex inside a complex.
struct SimplexRef {
    int dim = 0;
    std::uint32_t index = 0;
};

/// Residual of repeated elementary collapses plus the collapse log.
struct CollapseResult {
    SimplicialComplex residual;
    /// (free face, coface) pairs in removal order, referring to the input complex.
    std::vector<std::pair<SimplexRef, SimplexRef>> steps;
    bool collapsible() const { return residual.total() == 1; }
};
CollapseResult greedy_collapse(const SimplicialComplex& k, const Budget* budget = nullptr);

/// Contractibility certificate: trivial integral homology, Euler characteristic 1, and a
/// collapse certificate when one was found.
struct ContractibilityCertificate {
    HomologyResult homology;
    bool collapsible = false;
    std::size_t collapse_steps = 0;
    bool homology_trivial() const { return homology.is_trivial(); }
};

/// Greedy collapse first, then integral homology of the order complex of `p`.
ContractibilityCertificate certify_contractible(const FinitePoset& p, const Budget* budget = nullptr);

}  // namespace omflat
