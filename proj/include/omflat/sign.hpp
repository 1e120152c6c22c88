#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace omflat {

/// Three-valued sign with the face order zero < plus, zero < minus.
enum class Sign : std::uint8_t { zero = 0, plus = 1, minus = 2 };

constexpr Sign negate(Sign s) noexcept {
    switch (s) {
        case Sign::plus: return Sign::minus;
        case Sign::minus: return Sign::plus;
        default: return Sign::zero;
    }
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
    if (a == Sign::zero || b == Sign::zero) return Sign::zero;
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign operator-(Sign a) noexcept { return negate(a); }

/// a <= b in the order 0 < +, 0 < - (plus and minus are incomparable).
constexpr bool sign_leq(Sign a, Sign b) noexcept { return a == b || a == Sign::zero; }

template <class T>
constexpr Sign sign_of(const T& value) {
    if (value > 0) return Sign::plus;
    if (value < 0) return Sign::minus;
    return Sign::zero;
}

char to_char(Sign s) noexcept;
Sign sign_from_char(char c);

/// Sign of the permutation sorting `tuple`; throws InputError on repeated entries.
Sign permutation_sign(std::span<const int> tuple);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Colexicographic ranking of sorted r-subsets of {1..n}.
class BasisIndexer {
public:
    BasisIndexer(int n, int r);

    int ground() const noexcept { return n_; }
    int rank() const noexcept { return r_; }
    std::size_t size() const noexcept { return size_; }

    std::size_t rank_subset(std::span<const int> subset) const;
    std::vector<int> unrank_subset(std::size_t index) const;

private:
    int n_;
    int r_;
    std::size_t size_;
};

/// Advances a sorted subset of {1..n} to its colex successor; false after the last one.
bool next_colex(std::vector<int>& subset, int n);

/// All sorted k-subsets of {1..n} in colex order.
std::vector<std::vector<int>> all_subsets(int n, int k);

}  // namespace omflat
