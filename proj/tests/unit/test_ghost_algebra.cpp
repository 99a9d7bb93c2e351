#include "support.hpp"

#include "ghostalg/ghost_algebra.hpp"
#include "ghostalg/linking.hpp"
#include "ghostalg/sampling.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

namespace {
GhostElement G(const ThetaGeodesic& g) { return GhostElement::geodesic(g); }
GhostElement C(std::vector<ThetaGeodesic> v) { return GhostElement(Configuration(std::move(v))); }
}  // namespace

TEST_CASE("geodesic bracket") {
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(1), pt(3));
    Rational e = epsilon(h, g);
    GhostElement expected = e * (C({h, g}) - GhostElement::casimir());
    CHECK(bracket(G(g), G(h)) == expected);
    CHECK(bracket(G(g), G(h)).to_string() == "𝟙 - ⌈(0→2),(1→3)⌉");
    CHECK(bracket(G(g), G(geo(pt(5), pt(7)))).is_zero());
}

TEST_CASE("the Casimir is central") {
    Sampler s(4);
    for (int i = 0; i < 50; ++i)
        CHECK(bracket(GhostElement::casimir(), GhostElement(s.configuration_in(1, 4))).is_zero());
}

TEST_CASE("antisymmetry and Leibniz") {
    Sampler s(5);
    for (int i = 0; i < 100; ++i) {
        GhostElement a = s.configuration_in(1, 3), b = s.configuration_in(1, 3), c = s.configuration_in(1, 3);
        CHECK(bracket(a, a).is_zero());
        CHECK((bracket(a, b) + bracket(b, a)).is_zero());
        CHECK(bracket(a * b, c) == a * bracket(b, c) + bracket(a, c) * b);
    }
}

TEST_CASE("configuration against a geodesic crossing one visible edge") {
    ThetaGeodesic g1 = geo(pt(0), pt(2)), g2 = geo(pt(5), pt(7)), h = geo(pt(1), pt(3));
    Configuration Gc({g1, g2});
    GhostElement b = bracket(GhostElement(Gc), G(h));
    // h crosses g1 and the ghost edge (g1- → g2+) only.
    std::size_t crossed = 0;
    for (EdgeIndex e = 0; e < Gc.edge_count(); ++e) crossed += epsilon(h, Gc.edge(e)) != 0;
    CHECK(crossed == 2);
    CHECK(b.size() == 2);
}

TEST_CASE("triple bracket vanishes when the middle geodesics are disjoint") {
    Sampler s(6);
    for (int i = 0; i < 200; ++i) {
        ThetaGeodesic g1 = s.geodesic(), g0 = s.geodesic(), h = s.geodesic();
        if (epsilon(g0, h) != 0) continue;
        CHECK(nested_bracket({G(g1), G(g0), G(h)}).is_zero());
    }
}

TEST_CASE("Jacobi identity") {
    Sampler s(7, 8);
    ThetaSignature sig({1, 2}, 3);
    int tested = 0;
    while (tested < 60) {
        Configuration A = s.configuration_in(1, 3, 2), B = s.configuration_in(1, 3, 2), Cc = s.configuration_in(1, 3, 2);
        if (share_triple_vertex(A, B, Cc)) continue;
        ++tested;
        CHECK(jacobiator(A, B, Cc, sig).is_zero());
    }
    Configuration A = s.configuration(2);
    CHECK(jacobiator(A, A, s.configuration(3), sig).is_zero());
    CHECK(jacobiator(GhostElement::casimir(), A, s.configuration(2), sig).is_zero());
}

TEST_CASE("cancellation families") {
    Sampler s(8, 8);
    int tested = 0;
    while (tested < 40) {
        Configuration A = s.configuration_in(1, 3), B = s.configuration_in(1, 3), Cc = s.configuration_in(1, 3);
        if (share_triple_vertex(A, B, Cc)) continue;
        ++tested;
        auto F = cancellation_terms(A, B, Cc), Fb = cancellation_terms(B, Cc, A), Fc = cancellation_terms(Cc, A, B);
        CHECK((F.P1 + Fc.P2).is_zero());
        CHECK((F.R1 + Fb.Q2).is_zero());
        CHECK((F.Q1 + Fc.R2).is_zero());
        CHECK((F.S1 + Fb.S1 + Fc.S1).is_zero());
        CHECK((F.S2 + Fb.S2 + Fc.S2).is_zero());
        CHECK(assemble_triple_bracket(A, B, Cc) == bracket(A, bracket(B, Cc)));
    }
}

TEST_CASE("hexagonal relations on the circle") {
    CircleLinking L;
    Sampler s(9, 7);
    int hyp = 0;
    for (int i = 0; i < 2000; ++i) {
        std::vector<BoundaryPoint> p(6);
        for (auto& x : p) x = s.pool_point();
        auto h = hexagonal_check<BoundaryPoint>(L, p[0], p[1], p[2], p[3], p[4], p[5]);
        CHECK(h.first);
        if (!h.hypothesis) continue;
        ++hyp;
        CHECK(h.second);
        CHECK(h.third);
        auto ax = check_linking_axioms<BoundaryPoint>(L, p[0], p[1], p[2], p[3], p[4], p[5]);
        CHECK(ax.antisymmetry);
        CHECK(ax.cocycle);
        // The product axiom holds on the circle unless X = Y or x = y.
        if (p[0] != p[2] && p[1] != p[3]) CHECK(ax.product);
    }
    // X = Y: ε(Xx,Xy)·ε(Xy,Xx) = −ε(Xx,Xy)², which is −1/4 at a shared endpoint.
    CHECK(L.link(pt(0), pt(1), pt(0), pt(2)) * L.link(pt(0), pt(2), pt(0), pt(1)) == Rational(-1, 4));
    CHECK(hyp > 500);
    // A phantom pair makes every term vanish.
    auto h = hexagonal_check<BoundaryPoint>(L, pt(0), pt(2), pt(1), pt(3), pt(4), pt(4));
    CHECK(h.first);
    CHECK(h.second);
    CHECK(h.third);
}
