#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "omflat/chirotope.hpp"
#include "omflat/errors.hpp"

namespace omflat {

/// Fixed-size bit set used for rows of the order relation.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    std::size_t count() const noexcept;
    BitRow& operator|=(const BitRow& other) noexcept;
    BitRow& and_not(const BitRow& other) noexcept;
    bool operator==(const BitRow& other) const = default;
    /// Calls f(i) for every set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Weak-map order: some representative of N lies entrywise below one of M.
bool weak_leq(const OrientedMatroid& n, const OrientedMatroid& m);
bool weak_leq(const Chirotope& n, const Chirotope& m);

/// Finite poset on opaque string labels with the full order relation and its Hasse diagram.
class FinitePoset {
public:
    using Relation = std::function<bool(std::size_t, std::size_t)>;

    FinitePoset() = default;
    /// Evaluates `leq` on all pairs; throws DomainError if it is not a partial order.
    FinitePoset(std::vector<std::string> labels, const Relation& leq);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }
    /// Elements >= a (including a).
    const BitRow& up_set(std::size_t a) const { return up_[a]; }
    /// Cover pairs (a, b) with a < b and nothing in between, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const noexcept { return hasse_; }

    std::vector<std::size_t> minimal() const;
    std::vector<std::size_t> maximal() const;
    /// Index of the label, or size() when absent.
    std::size_t find(const std::string& label) const;

    /// Subposet induced on the given elements (kept in the given order).
    FinitePoset induced(const std::vector<std::size_t>& elements) const;

private:
    void compute_hasse();

    std::vector<std::string> labels_;
    std::vector<BitRow> up_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

/// Deduplicates by canonical key, sorts by key, and orders by weak_leq.
struct WeakMapPoset {
    std::vector<OrientedMatroid> elements;
    FinitePoset poset;
};
WeakMapPoset build_weak_map_poset(std::vector<OrientedMatroid> elements);

/// Self-map of a poset given by images of element indices.
struct MonotoneMap {
    const FinitePoset* poset = nullptr;
    std::vector<std::size_t> assignment;

    bool is_monotone() const;
    bool is_idempotent() const;
    std::vector<std::size_t> image() const;
};

/// Monotone and f(x) <= x everywhere.
bool is_descending_homotopy(const MonotoneMap& f);
/// Monotone and f(x) >= x everywhere.
bool is_ascending_homotopy(const MonotoneMap& f);

/// Order isomorphism by colour refinement plus backtracking.
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q,
                   std::vector<std::size_t>* witness = nullptr);

/// True iff `map` (P index -> Q index) is a bijection preserving and reflecting order.
bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const std::vector<std::size_t>& map);

std::string poset_to_dot(const FinitePoset& p, const std::string& name = "hasse");

}  // namespace omflat
