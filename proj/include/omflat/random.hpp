#pragma once

#include <cstdint>

#include "omflat/exact.hpp"

namespace omflat {

/// SplitMix64: small, splittable, platform-independent generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for sub-task `index`; the parent state is untouched.
    SplitMix64 split(std::uint64_t index) const noexcept {
        SplitMix64 child(state_ ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        child.next();
        return child;
    }

    /// Uniform integer in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool coin() noexcept { return (next() >> 63) != 0; }

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(std::int64_t max_num, std::int64_t max_den) {
        Rational r(static_cast<long>(uniform(-max_num, max_num)),
                   static_cast<unsigned long>(uniform(1, max_den)));
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace omflat
