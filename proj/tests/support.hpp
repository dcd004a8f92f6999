#pragma once

#include <initializer_list>

#include <symfan/kernel.hpp>
#include <symfan/polytope.hpp>

namespace symfan::testing {

inline IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline UPoint up(std::initializer_list<long> xs) { return UPoint(iv(xs)); }

/// Reduced coordinates of the W class of a full vector.
inline IVec red(std::initializer_list<long> full) { return primitive(WVector(iv(full)).reduced()); }

inline Polytope poly(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<UPoint> v;
    for (auto p : pts) v.push_back(up(p));
    return Polytope::hull(v);
}

inline Polytope S_poly() { return poly({{1, 2, 6, 8}, {0, 4, 5, 8}}); }
inline Polytope L_poly() { return poly({{1, 5, 6}, {2, 3, 7}}); }
inline Polytope X_poly() { return poly({{2, 3, 7, 8, 10}, {1, 5, 6, 8, 10}}); }
inline Polytope Y_poly() { return poly({{0, 3, 4, 5, 10}, {0, 1, 6, 7, 8}}); }

}  // namespace symfan::testing
