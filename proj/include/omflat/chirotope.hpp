#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omflat/exact.hpp"
#include "omflat/sign.hpp"

namespace omflat {

/// Alternating sign map on r-tuples of {1..n}, stored on sorted r-subsets in colex order.
class Chirotope {
public:
    Chirotope(int rank, int ground, std::vector<Sign> signs);
    /// Parses the compact sign string (length C(n, r), colex order).
    static Chirotope from_string(int rank, int ground, std::string_view signs);
    /// Parses the text form "rank r ground n\n<signs>".
    static Chirotope parse(std::string_view text);

    int rank() const noexcept { return rank_; }
    int ground() const noexcept { return ground_; }
    const BasisIndexer& indexer() const noexcept { return indexer_; }
    std::span<const Sign> signs() const noexcept { return signs_; }

    Sign at(std::size_t index) const { return signs_.at(index); }
    /// Value on a sorted r-subset.
    Sign on_subset(std::span<const int> sorted_subset) const;
    /// Alternating extension to arbitrary tuples; zero on repeats.
    Sign evaluate(std::span<const int> tuple) const;

    bool is_zero() const;
    Chirotope negated() const;
    /// Sign string in colex order; this is the canonical hash key.
    std::string sign_string() const;
    /// "rank r ground n\n<signs>"
    std::string to_text() const;

    bool operator==(const Chirotope& other) const {
        return rank_ == other.rank_ && ground_ == other.ground_ && signs_ == other.signs_;
    }

private:
    int rank_;
    int ground_;
    BasisIndexer indexer_;
    std::vector<Sign> signs_;
};

struct AxiomCheck {
    bool ok = false;
    /// Violating index data: (sigma..., a, b, c, d) for a Grassmann-Pluecker failure,
    /// (basis1..., basis2..., x) for a basis-exchange failure, empty for the zero map.
    std::vector<int> witness;
    std::string reason;
};

/// Nonzero, three-term Grassmann-Pluecker sign condition, and basis exchange.
AxiomCheck check_chirotope_axioms(const Chirotope& chi);

/// Oriented matroid as the pair {chi, -chi}; stores the representative whose first
/// nonzero colex entry is plus.
class OrientedMatroid {
public:
    /// Checks the axioms; throws DomainError("not a chirotope") on failure.
    static OrientedMatroid from_chirotope(const Chirotope& chi);
    /// Skips the axiom check; for chirotopes that are valid by construction.
    static OrientedMatroid trusted(const Chirotope& chi);

    const Chirotope& chirotope() const noexcept { return canonical_; }
    int rank() const noexcept { return canonical_.rank(); }
    int ground() const noexcept { return canonical_.ground(); }
    std::string key() const { return canonical_.sign_string(); }
    std::string to_text() const { return canonical_.to_text(); }

    bool operator==(const OrientedMatroid& other) const { return canonical_ == other.canonical_; }
    bool operator<(const OrientedMatroid& other) const;

private:
    explicit OrientedMatroid(Chirotope canonical) : canonical_(std::move(canonical)) {}
    Chirotope canonical_;
};

OrientedMatroid normalize(const Chirotope& chi);

/// Signed circuit; the stored representative has its least support element in `positive`.
struct SignedCircuit {
    std::vector<int> positive;
    std::vector<int> negative;

    std::vector<int> support() const;
    SignedCircuit opposite() const { return {negative, positive}; }
    auto operator<=>(const SignedCircuit&) const = default;
};

/// Exact determinant signs of all r-subsets of the columns (each of length r).
/// Throws DomainError("degenerate configuration") if every r-minor vanishes.
Chirotope chirotope_from_vectors(const std::vector<RationalVector>& columns);

std::vector<SignedCircuit> circuits(const OrientedMatroid& m);

bool is_independent(const OrientedMatroid& m, std::span<const int> subset);
bool is_independent(std::span<const SignedCircuit> circuits, std::span<const int> subset);

/// x in conv(A): x in A, or some circuit has negative part {x} and positive part inside A.
bool convex_hull_contains(const OrientedMatroid& m, std::span<const int> subset, int x);
bool convex_hull_contains(std::span<const SignedCircuit> circuits, std::span<const int> subset,
                          int x);

/// Restriction to {1..n} \ {e}, relabelled order-preservingly.
OrientedMatroid delete_element(const OrientedMatroid& m, int e);

/// Direct sum; elements of `second` are shifted by first.ground().
OrientedMatroid join_om(const OrientedMatroid& first, const OrientedMatroid& second);

/// The rank-0 oriented matroid on the empty ground set (identity for join_om).
OrientedMatroid empty_om();

bool has_loop(const OrientedMatroid& m);

/// Every element lies in a positive circuit (the vectors positively span the space).
bool is_totally_cyclic(const OrientedMatroid& m);

/// Relabels element i as image[i-1]; `image` must be a permutation of {1..n}.
OrientedMatroid relabel(const OrientedMatroid& m, std::span<const int> image);

/// Representative with the given value on a sorted basis (which must be nonzero).
Chirotope representative_with(const OrientedMatroid& m, std::span<const int> basis, Sign value);

}  // namespace omflat
