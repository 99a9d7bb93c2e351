#pragma once

#include "ghostalg/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace ghost::testing {

// Floating-point angle of a boundary point on the circle (Cayley chart).
inline double angle(const BoundaryPoint& x) {
    if (x.is_infinity()) return std::numbers::pi;
    return 2 * std::atan(x.value().get_d());
}

// Cyclic order read off sorted angles: +1 when a, b, c run counterclockwise.
inline int angle_orient(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
    if (a == b || b == c || a == c) return 0;
    auto norm = [](double t) { return t < 0 ? t + 2 * std::numbers::pi : t; };
    double tb = norm(angle(b) - angle(a)), tc = norm(angle(c) - angle(a));
    return tb < tc ? 1 : -1;
}

inline BoundaryPoint pt(std::int64_t p, std::int64_t q = 1) { return BoundaryPoint(p, q); }
inline BoundaryPoint inf() { return BoundaryPoint::infinity(); }
inline ThetaGeodesic geo(BoundaryPoint a, BoundaryPoint b, int label = 1) { return ThetaGeodesic(a, b, label); }

}  // namespace ghost::testing
