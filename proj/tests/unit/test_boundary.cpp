#include "support.hpp"

#include "ghostalg/sampling.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

TEST_CASE("cyclic_orient oracle values") {
    CHECK(cyclic_orient(pt(0), pt(1), inf()) == 1);
    CHECK(cyclic_orient(pt(0), pt(0), pt(1)) == 0);
    CHECK(cyclic_orient(pt(0), inf(), pt(1)) == -1);
    CHECK(angle_orient(pt(0), pt(1), inf()) == 1);
}

TEST_CASE("cyclic_orient agrees with the angle oracle") {
    Sampler s(11);
    for (int i = 0; i < 2000; ++i) {
        BoundaryPoint a = s.free_point(), b = s.free_point(), c = s.free_point();
        CHECK(cyclic_orient(a, b, c) == angle_orient(a, b, c));
        CHECK(cyclic_orient(a, b, c) == cyclic_orient(b, c, a));
        CHECK(cyclic_orient(a, b, c) == -cyclic_orient(b, a, c));
    }
}

TEST_CASE("boundary points are canonical") {
    CHECK(BoundaryPoint(2, 4) == BoundaryPoint(-1, -2));
    CHECK(BoundaryPoint(-3, 0) == inf());
    CHECK(BoundaryPoint::parse("6/4") == pt(3, 2));
    CHECK(BoundaryPoint::parse("inf").is_infinity());
    CHECK(pt(3, 2).to_string() == "3/2");
    CHECK_THROWS(BoundaryPoint(0, 0));
}

// The intersection number read off the definition with the angle oracle.
Rational epsilon_oracle(const OrientedGeodesic& g, const OrientedGeodesic& h) {
    if (g.is_phantom() || h.is_phantom()) return 0;
    auto oriented4 = [](const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c, const BoundaryPoint& d) {
        return angle_orient(a, b, c) == 1 && angle_orient(a, c, d) == 1;
    };
    const BoundaryPoint &gm = g.src, &gp = g.dst, &hm = h.src, &hp = h.dst;
    std::vector<BoundaryPoint> all{gm, gp, hm, hp};
    std::sort(all.begin(), all.end());
    std::size_t distinct = std::unique(all.begin(), all.end()) - all.begin();
    if (distinct == 4) {
        if (oriented4(gp, hp, gm, hm)) return 1;
        if (oriented4(gp, hm, gm, hp)) return -1;
        return 0;
    }
    if (distinct == 3) {
        // shared backward endpoint
        if (gm == hm) return Rational(angle_orient(gp, hp, hm), 2);
        if (gp == hp) return Rational(angle_orient(gm, hm, hp), 2);
        if (gm == hp) return -epsilon_oracle(g, h.reverse());
        if (gp == hm) return -epsilon_oracle(g.reverse(), h);
    }
    return 0;
}

TEST_CASE("epsilon examples") {
    OrientedGeodesic g{pt(0), pt(2)}, h{pt(1), pt(3)};
    CHECK(epsilon(g, g) == 0);
    CHECK(epsilon(g, g.reverse()) == 0);
    CHECK(abs(epsilon(g, h)) == 1);
    CHECK(epsilon(g, h) == epsilon_oracle(g, h));
    OrientedGeodesic a{pt(0), pt(1, 2)}, b{pt(0), pt(1, 4)};
    CHECK(abs(epsilon(a, b)) == Rational(1, 2));
    CHECK(epsilon(a, b) == Rational(cyclic_orient(a.dst, b.dst, b.src), 2));
    CHECK(epsilon(OrientedGeodesic{pt(1), pt(1)}, g) == 0);
}

TEST_CASE("epsilon agrees with the oracle on random pairs") {
    Sampler s(12, 6);
    for (int i = 0; i < 3000; ++i) {
        ThetaGeodesic g = s.geodesic(1, true), h = s.geodesic(1, true);
        CHECK(epsilon(g, h) == epsilon_oracle(g.geo, h.geo));
    }
}

TEST_CASE("separates") {
    CHECK(separates({pt(0), pt(2)}, {pt(1), pt(3)}));
    CHECK_FALSE(separates({pt(0), pt(1)}, {pt(2), pt(3)}));
    CHECK_FALSE(separates({pt(1), pt(1)}, {pt(0), pt(3)}));
}

TEST_CASE("theta signatures") {
    CHECK_THROWS(ThetaSignature({2, 1}, 3));
    CHECK_THROWS(ThetaSignature({1, 3}, 3));
    ThetaSignature s({1, 2}, 3);
    CHECK(s.weight(2) == 2);
    CHECK_FALSE(s.is_projective());
}

TEST_CASE("mobius action") {
    ThetaGeodesic g = geo(pt(0), pt(1), 2);
    CHECK(MobiusMap::identity().apply(g) == g);
    CHECK(MobiusMap(2, 0, 0, 1).apply(g) == geo(pt(0), pt(2), 2));
    CHECK_THROWS(MobiusMap(1, 2, 2, 4));
    Sampler s(13);
    for (int i = 0; i < 500; ++i) {
        int m11 = s.uniform(-4, 4), m12 = s.uniform(-4, 4), m21 = s.uniform(-4, 4), m22 = s.uniform(-4, 4);
        if (m11 * m22 - m12 * m21 <= 0) continue;
        MobiusMap m(m11, m12, m21, m22);
        ThetaGeodesic a = s.geodesic(1, true), b = s.geodesic(1, true);
        CHECK(epsilon(m.apply(a), m.apply(b)) == epsilon(a, b));
        CHECK(m.inverse().apply(m.apply(a.plus())) == a.plus());
    }
}
