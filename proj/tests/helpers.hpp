#pragma once

#include <initializer_list>
#include <vector>

#include "omflat/chirotope.hpp"

namespace omflat::testing {

inline RationalVector vec(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

inline std::vector<RationalVector> cols(std::initializer_list<std::initializer_list<long>> vs) {
    std::vector<RationalVector> out;
    for (auto v : vs) out.push_back(vec(v));
    return out;
}

inline OrientedMatroid om_of(const std::vector<RationalVector>& columns) {
    return normalize(chirotope_from_vectors(columns));
}

inline OrientedMatroid om_of(std::initializer_list<std::initializer_list<long>> vs) {
    return om_of(cols(vs));
}

}  // namespace omflat::testing
