#include "support.hpp"

#include "ghostalg/representations.hpp"
#include "ghostalg/sampling.hpp"
#include "ghostalg/swapping.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

namespace {
Configuration C(std::vector<ThetaGeodesic> v) { return Configuration(std::move(v)); }

}  // namespace

TEST_CASE("fuchsian projector of (0→∞)") {
    LimitFamily f = LimitFamily::fuchsian();
    Matrix P = f.projector(geo(pt(0), inf()));
    CHECK(P == Matrix(2, 2, {0, 0, 0, 1}));
    CHECK(P * P == P);
    CHECK(f.projector(geo(pt(3), pt(3))) == Matrix::identity(2));
}

TEST_CASE("fuchsian correlation matches the hand-built projector product") {
    LimitFamily f = LimitFamily::fuchsian();
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(1), pt(3));
    CHECK(correlation(f, C({g, h})) == Rational(3, 4));
    Matrix Pg = f.projector(g), Ph = f.projector(h);
    CHECK((Ph * Pg).trace() == Rational(3, 4));
    Sampler s(31);
    for (int i = 0; i < 200; ++i) {
        auto q = s.distinct_sorted(4);
        ThetaGeodesic a(q[0], q[1]), b(q[2], q[3]);
        if (q[1].is_infinity() || q[3].is_infinity()) continue;
        Rational am = a.minus().value(), ap = a.plus().value(), bm = b.minus().value(), bp = b.plus().value();
        CHECK(correlation(f, C({a, b})) == (ap - bm) * (bp - am) / ((ap - am) * (bp - bm)));
    }
}

TEST_CASE("shared endpoints") {
    LimitFamily f = LimitFamily::veronese(3);
    ThetaGeodesic g = geo(pt(0), pt(2));
    CHECK(correlation(f, C({g, geo(pt(2), pt(5))})) == 0);
    CHECK(correlation(f, C({g, geo(pt(7), pt(2))})) == 1);
    CHECK(correlation(f, C({g, geo(pt(5), pt(0))})) == 0);
    CHECK(correlation(f, C({g, geo(pt(0), pt(5))})) == 1);
    CHECK(correlation(f, GhostElement::casimir()) == Rational(1, 3));
}

TEST_CASE("projectors are idempotent with the right trace") {
    ThetaSignature sig({1, 2, 3}, 4);
    LimitFamily f = LimitFamily::veronese(4, sig);
    Sampler s(32);
    for (int i = 0; i < 100; ++i) {
        ThetaGeodesic g = s.geodesic(3);
        const Matrix& P = f.projector(g);
        CHECK(P * P == P);
        CHECK(P.trace() == sig.weight(g.label));
    }
}

TEST_CASE("rescaling flag columns leaves T unchanged") {
    // The dual of the dual family is built from rescaled flags.
    LimitFamily f = LimitFamily::veronese(3), dd = f.dual().dual();
    Sampler s(33);
    for (int i = 0; i < 50; ++i) {
        Configuration c = s.configuration_in(2, 4);
        CHECK(correlation(f, c) == correlation(dd, c));
    }
}

TEST_CASE("T evaluates pi") {
    for (const LimitFamily& f : {LimitFamily::fuchsian(), LimitFamily::veronese(3)}) {
        Sampler s(34);
        for (int i = 0; i < 100; ++i) {
            Configuration c = s.configuration_in(2, 4);
            CHECK(correlation(f, c) == swap_value(f, pi(c)));
            CHECK(correlation(f, c) == correlation(f.dual(), c.reverse()));
        }
    }
}

TEST_CASE("opposite endomorphism") {
    LimitFamily f = LimitFamily::fuchsian();
    Sampler s(35);
    for (int i = 0; i < 60; ++i) {
        Configuration c = s.configuration(3);
        Rational T = correlation(f, c);
        for (EdgeIndex e = 0; e < c.edge_count(); ++e) {
            if (c.edge(e).is_phantom()) continue;
            CHECK(opposite_endomorphism(f, c, e) == edge_projector(f, c, e) * T);
        }
    }
    Configuration touching({geo(pt(0), pt(1)), geo(pt(1), pt(3))});
    CHECK(correlation(f, touching) == 0);
    CHECK(opposite_endomorphism(f, touching, 0) == Matrix(2, 2));
}

TEST_CASE("intersection") {
    LimitFamily f = LimitFamily::fuchsian();
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(1), pt(3));
    CHECK(intersection(f, C({g}), C({h})) == epsilon(h, g) * (Rational(3, 4) - Rational(1, 2)));
    CHECK(intersection(f, C({g}), C({geo(pt(5), pt(6))})) == 0);
    Sampler s(36);
    for (const LimitFamily& fam : {LimitFamily::fuchsian(), LimitFamily::veronese(3)}) {
        for (int i = 0; i < 80; ++i) {
            Configuration G = s.configuration_in(1, 4), H = s.configuration_in(1, 4);
            Rational I = intersection(fam, G, H);
            CHECK(I == correlation(fam, bracket(G, H, fam.signature())));
            CHECK(I == intersection_factored(fam, G, H));
        }
    }
}

TEST_CASE("triangle functions") {
    LimitFamily f = LimitFamily::veronese(3);
    IdealTriangle t{pt(0), pt(1), inf()}, tbar{pt(0), inf(), pt(1)};
    CHECK(triangle_function(f, t) * triangle_function(f, tbar) == 1);
    CHECK(triangle_function(f, t) > 0);
    // a geodesic outside the triangle commutes with it
    ThetaGeodesic g = geo(pt(-3), pt(-1));
    CHECK(correlation(f, bracket(GhostElement::geodesic(g), t.configuration())) == 0);
    ThetaGeodesic side = geo(pt(0), pt(1));
    CHECK(correlation(f, bracket(GhostElement::geodesic(side), t.configuration())) == 0);
}

TEST_CASE("half intersection identity") {
    LimitFamily f = LimitFamily::fuchsian();
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(0), pt(5));
    REQUIRE(abs(epsilon(g, h)) == Rational(1, 2));
    CHECK(correlation(f, C({g, h})) + correlation(f, C({g, h.reverse()})) == 1);
}

TEST_CASE("sign lemma cases") {
    LimitFamily f = LimitFamily::fuchsian();
    Sampler s(37);
    int strict = 0, half = 0, zero = 0;
    for (int i = 0; i < 3000; ++i) {
        ThetaGeodesic g1 = s.geodesic(), g0 = s.geodesic(), h = s.geodesic();
        if (!sign_lemma_admissible(g1, g0, h)) continue;
        SignLemmaTerm t = sign_lemma_term(f, g1, g0, h);
        Rational ee = abs(t.eps0 * t.eps1);
        CHECK(t.direct == t.factored);
        if (ee == 0) {
            ++zero;
            CHECK(t.direct == 0);
        } else if (ee == 1) {
            ++strict;
            CHECK(t.direct > 0);
        } else {
            ++half;
            CHECK(t.direct == 0);
        }
    }
    CHECK(strict > 0);
    CHECK(half > 0);
    CHECK(zero > 0);
}

TEST_CASE("positive cross ratios") {
    CHECK(positive_crossratio_check(LimitFamily::fuchsian(), 200, 1).passed());
    CHECK(positive_crossratio_check(LimitFamily::veronese(3), 200, 1).passed());
    CrossRatioReport g = positive_crossratio_check(LimitFamily::generic(3, 3), 200, 1);
    CHECK(g.crossing_samples + g.skipped > 0);
}

TEST_CASE("generic families are reproducible") {
    LimitFamily a = LimitFamily::generic(9, 3), b = LimitFamily::generic(9, 3);
    CHECK(a.flag(pt(1, 3)) == b.flag(pt(1, 3)));
    CHECK(a.name() == "generic(9,3)");
    CHECK(LimitFamily::veronese(3).dual().name() == "dual veronese(3)");
}

TEST_CASE("orbit sums") {
    LimitFamily f = LimitFamily::fuchsian();
    Configuration G(geo(pt(0), pt(2))), H(geo(pt(1), pt(3)));
    Rational I = intersection(f, G, H);
    OrbitSum trivial = orbit_sum(f, G, H, GroupPresentation{}, 4);
    for (const auto& s : trivial.partial) CHECK(s == I);
    GroupPresentation gamma{{MobiusMap(5, 12, 2, 5), MobiusMap(5, 2, 12, 5)}};
    OrbitSum zero = orbit_sum(f, G, H, gamma, 0);
    REQUIRE(zero.partial.size() == 1);
    CHECK(zero.partial[0] == I);
    auto words = gamma.words_by_length(3);
    CHECK(words[0].size() == 1);
    CHECK(words[1].size() == 4);
    CHECK(words[2].size() == 12);
    CHECK(words[3].size() == 36);
}
