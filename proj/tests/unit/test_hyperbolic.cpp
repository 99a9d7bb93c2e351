#include "support.hpp"

#include "ghostalg/hyperbolic.hpp"
#include "ghostalg/sampling.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

namespace {
double objective(const Configuration& c, const HyperbolicPoint& p) {
    double s = 0;
    for (const auto& g : c.geodesics()) s += distance_to_geodesic(p, g.geo);
    return s;
}
}  // namespace

TEST_CASE("distances") {
    CHECK(hyperbolic_distance({0, 1}, {0, std::exp(2.0)}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(distance_to_geodesic({0, 5}, {pt(0), inf()}) == doctest::Approx(0).epsilon(1e-14));
    CHECK(distance_to_geodesic({1, 1}, {pt(0), inf()}) == doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
}

TEST_CASE("perpendicular geodesics meet at the barycenter") {
    Configuration c({geo(pt(0), inf()), geo(pt(-1), pt(1))});
    BarycenterResult b = barycenter(c);
    CHECK(hyperbolic_distance(b.point, {0, 1}) < 1e-10);
    CHECK(b.objective == doctest::Approx(0).epsilon(1e-10));
    CHECK(core_diameter(c) < 1e-9);
}

TEST_CASE("order-three symmetric configuration") {
    MobiusMap M(0, -1, 1, 1);
    ThetaGeodesic g = geo(pt(1), pt(3));
    Configuration c({g, M.apply(g), M.apply(M.apply(g))});
    BarycenterResult b = barycenter(c);
    HyperbolicPoint fixed{-0.5, std::sqrt(3.0) / 2};
    CHECK(hyperbolic_distance(b.point, fixed) < 1e-9);
    CHECK(b.gradient_norm <= 1e-10);
    // grid search around the fixed point
    double best = 1e300;
    HyperbolicPoint arg;
    for (int i = -40; i <= 40; ++i)
        for (int j = -40; j <= 40; ++j) {
            HyperbolicPoint p{fixed.x + i * 0.01, fixed.y * std::exp(j * 0.01)};
            double v = objective(c, p);
            if (v < best) best = v, arg = p;
        }
    CHECK(hyperbolic_distance(arg, fixed) < 0.03);
    CHECK(b.objective <= best + 1e-12);
}

TEST_CASE("ideal triangle incenter and core diameter") {
    Configuration t({geo(pt(0), pt(1)), geo(inf(), pt(0)), geo(pt(1), inf())});
    BarycenterResult b = barycenter(t);
    CHECK(b.point.x == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(b.point.y == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-10));
    double r = std::log(std::sqrt(3.0));
    for (const auto& g : t.geodesics()) CHECK(distance_to_geodesic(b.point, g.geo) == doctest::Approx(r).epsilon(1e-9));
    CHECK(core_diameter(t) == doctest::Approx(r).epsilon(1e-9));
}

TEST_CASE("equivariance and isometry invariance") {
    Sampler s(41);
    std::vector<MobiusMap> isos{{2, 1, 1, 1}, {1, 3, 0, 1}, {0, -1, 1, 0}};
    for (int i = 0; i < 30; ++i) {
        std::vector<ThetaGeodesic> gs;
        for (int k = 0; k < 4; ++k) {
            auto p = s.distinct_sorted(2);
            gs.emplace_back(p[0], p[1]);
        }
        Configuration c(gs);
        BarycenterResult b = barycenter(c);
        CHECK(b.gradient_norm <= 1e-10);
        double diam = core_diameter(c);
        for (const auto& M : isos) {
            std::vector<ThetaGeodesic> img;
            for (const auto& g : gs) img.push_back(M.apply(g));
            Configuration mc(img);
            CHECK(hyperbolic_distance(barycenter(mc).point, apply_mobius(M, b.point)) < 1e-8);
            CHECK(core_diameter(mc) == doctest::Approx(diam).epsilon(1e-8));
        }
    }
}

TEST_CASE("configurations without a barycenter are rejected") {
    CHECK_THROWS(barycenter(Configuration({geo(pt(0), pt(1)), geo(pt(0), pt(5)), geo(pt(0), inf())})));
    CHECK_THROWS(barycenter(Configuration({geo(pt(0), pt(1)), geo(pt(1), pt(1))})));
}
