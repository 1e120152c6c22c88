#include "omflat/sign.hpp"

#include <algorithm>

#include "omflat/errors.hpp"

namespace omflat {

char to_char(Sign s) noexcept {
    switch (s) {
        case Sign::plus: return '+';
        case Sign::minus: return '-';
        default: return '0';
    }
}

Sign sign_from_char(char c) {
    switch (c) {
        case '+': return Sign::plus;
        case '-': return Sign::minus;
        case '0': return Sign::zero;
        default: throw InputError(std::string("invalid sign character '") + c + "'");
    }
}

Sign permutation_sign(std::span<const int> tuple) {
    bool odd = false;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) throw InputError("not a permutation input");
            if (tuple[i] > tuple[j]) odd = !odd;
        }
    }
    return odd ? Sign::minus : Sign::plus;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
    return result;
}

BasisIndexer::BasisIndexer(int n, int r) : n_(n), r_(r) {
    if (n < 0 || r < 0 || r > n) {
        throw InputError("BasisIndexer requires 0 <= r <= n (got n=" + std::to_string(n) +
                         ", r=" + std::to_string(r) + ")");
    }
    size_ = binomial(n, r);
}

std::size_t BasisIndexer::rank_subset(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != r_) throw InputError("subset has wrong size");
    std::size_t index = 0;
    int previous = 0;
    for (int i = 0; i < r_; ++i) {
        const int e = subset[i];
        if (e < 1 || e > n_) throw InputError("subset element out of range");
        if (e <= previous) throw InputError("subset is not strictly increasing");
        previous = e;
        index += binomial(e - 1, i + 1);
    }
    return index;
}

std::vector<int> BasisIndexer::unrank_subset(std::size_t index) const {
    if (index >= size_) throw InputError("subset index out of range");
    std::vector<int> subset(r_);
    int c = n_;
    for (int j = r_; j >= 1; --j) {
        // largest c with C(c, j) <= index
        while (binomial(c, j) > index) --c;
        subset[j - 1] = c + 1;
        index -= binomial(c, j);
        --c;
    }
    return subset;
}

bool next_colex(std::vector<int>& subset, int n) {
    const std::size_t k = subset.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? subset[i + 1] : n + 1;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<int>(j) + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    do {
        out.push_back(s);
    } while (next_colex(s, n));
    return out;
}

}  // namespace omflat
