#include "support.hpp"

#include "ghostalg/sampling.hpp"
#include "ghostalg/swapping.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

namespace {
SwapElement P(const BoundaryPoint& X, const BoundaryPoint& x, int e = 1) { return SwapElement::pair(X, x, e); }
}  // namespace

TEST_CASE("pair bracket basics") {
    CHECK(swap_bracket(P(pt(1), pt(0)), P(pt(3), pt(2))).is_zero());
    CHECK(swap_bracket(P(pt(2), pt(0)), P(pt(2), pt(0))).is_zero());
    // crossing pairs
    SwapElement b = swap_bracket(P(pt(2), pt(0)), P(pt(3), pt(1)));
    CHECK_FALSE(b.is_zero());
}

TEST_CASE("logarithm bracket") {
    OrientedGeodesic g{pt(0), pt(2)}, h{pt(1), pt(3)};
    SwapElement lhs = swap_bracket(SwapElement::log(g), SwapElement::log(h));
    SwapElement gg = P(g.dst, g.src, -1), hh = P(h.dst, h.src, -1);
    SwapElement rhs = epsilon(h, g) * (gg * hh * P(g.dst, h.src) * P(h.dst, g.src)) +
                      epsilon(g, h) * SwapElement::casimir();
    CHECK(lhs == rhs);
}

TEST_CASE("pi of a rank-2 configuration") {
    ThetaGeodesic g1 = geo(pt(0), pt(2)), g2 = geo(pt(1), pt(3));
    SwapElement expected = P(g1.plus(), g2.minus()) * P(g2.plus(), g1.minus()) * P(g1.plus(), g1.minus(), -1) *
                           P(g2.plus(), g2.minus(), -1);
    CHECK(pi(Configuration({g1, g2})) == expected);
    CHECK(pi(Configuration({g1, g2})) == pi(Configuration({g2, g1})));
    // A single geodesic maps to its logarithm; read as a multifraction it is trivial.
    CHECK(pi(Configuration(g1)) == SwapElement::log(g1.geo));
    CHECK(multifraction_of(Configuration(g1)) == SwapElement::scalar(1));
}

TEST_CASE("pi preserves the bracket") {
    Sampler s(21, 8);
    int tested = 0;
    for (int i = 0; i < 150; ++i) {
        Configuration G = s.configuration_in(1, 3), H = s.configuration_in(1, 3);
        try {
            CHECK(pi(bracket(G, H)) == swap_bracket(pi(G), pi(H)));
            ++tested;
        } catch (const ZeroPairDivision&) {
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("polygonal decomposition") {
    std::vector<BoundaryPoint> X{pt(1), pt(3), pt(5), pt(7)}, x{pt(0), pt(2), pt(4), pt(6)};
    auto single = polygonal_decomposition({pt(1)}, {pt(0)}, {0});
    REQUIRE(single.size() == 1);
    CHECK(single[0].rank() == 1);
    auto cyc = polygonal_decomposition(X, x, {1, 2, 3, 0});
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0].rank() == 4);
    auto two = polygonal_decomposition(X, x, {1, 0, 3, 2});
    REQUIRE(two.size() == 2);
    CHECK(multifraction_of(two) == multifraction(X, x, {1, 0, 3, 2}));
    CHECK(multifraction_of(cyc) == multifraction(X, x, {1, 2, 3, 0}));
}

TEST_CASE("swapping Jacobi on multifractions") {
    Sampler s(22, 8);
    auto mf = [&] {
        for (;;) {
            std::vector<BoundaryPoint> X, x;
            for (int i = 0; i < 2; ++i) {
                X.push_back(s.pool_point());
                x.push_back(s.pool_point());
            }
            try {
                return multifraction(X, x, {1, 0});
            } catch (const ZeroPairDivision&) {
            }
        }
    };
    for (int i = 0; i < 40; ++i) {
        BoundaryPoint u = s.pool_point(), v = s.pool_point();
        while (v == u) v = s.pool_point();
        SwapElement a = mf(), b = mf(), c = SwapElement::log({u, v});
        SwapElement J = swap_bracket(a, swap_bracket(b, c)) + swap_bracket(b, swap_bracket(c, a)) +
                        swap_bracket(c, swap_bracket(a, b));
        CHECK(J.is_zero());
    }
}

TEST_CASE("zero pair division is reported") {
    CHECK_THROWS_AS(P(pt(1), pt(1), -1), ZeroPairDivision);
    CHECK(P(pt(1), pt(1)).is_zero());
}
