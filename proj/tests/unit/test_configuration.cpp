#include "support.hpp"

#include "ghostalg/configuration.hpp"
#include "ghostalg/sampling.hpp"

#include <doctest.h>

using namespace ghost;
using namespace ghost::testing;

TEST_CASE("ghost polygon of a rank-2 configuration") {
    ThetaGeodesic g1 = geo(pt(0), pt(1)), g2 = geo(pt(2), pt(3));
    Configuration c({g1, g2});
    GhostPolygon p = c.polygon();
    REQUIRE(p.edges.size() == 4);
    CHECK(p.edges[0] == g1);
    CHECK(p.edges[1] == geo(g2.minus(), g1.plus()));
    CHECK(p.edges[2] == g2);
    CHECK(p.edges[3] == geo(g1.minus(), g2.plus()));
    CHECK(p.ghost_index == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("touching endpoints give a phantom ghost edge") {
    Configuration c({geo(pt(0), pt(1)), geo(pt(1), pt(3))});
    CHECK(c.edge(1).is_phantom());
    CHECK_FALSE(c.edge(3).is_phantom());
}

TEST_CASE("triangle ghost polygon") {
    ThetaGeodesic a1 = geo(pt(0), pt(1)), a2 = geo(pt(1), inf()), a3 = geo(inf(), pt(0));
    Configuration t({a1, a3, a2});
    std::vector<ThetaGeodesic> expected{a1, a2.reverse(), a3, a1.reverse(), a2, a3.reverse()};
    CHECK(t.polygon().edges == expected);
}

TEST_CASE("opposite edges") {
    ThetaGeodesic g1 = geo(pt(0), pt(1)), g2 = geo(pt(2), pt(3)), g3 = geo(pt(4), pt(5));
    Configuration c({g1, g2});
    CHECK(c.opposite(0).edges == std::vector<ThetaGeodesic>{g1, g2, g1});
    CHECK(c.opposite(1).edges == std::vector<ThetaGeodesic>{g2, g1});
    Configuration h(g1);
    CHECK(h.opposite(0).edges == std::vector<ThetaGeodesic>{g1});

    Configuration c3({g1, g2, g3});
    CHECK(c3.interval(0, 0).edges == std::vector<ThetaGeodesic>{g1, g2, g3, g1});
    CHECK(c3.interval(1, 5).edges == std::vector<ThetaGeodesic>{g2, g3});
    for (EdgeIndex e = 0; e < c3.edge_count(); ++e) CHECK(c3.opposite(e) == c3.interval(e, e));
}

TEST_CASE("vertices") {
    CHECK(Configuration({geo(pt(0), pt(1)), geo(pt(2), pt(3))}).vertices() ==
          std::vector<BoundaryPoint>{pt(0), pt(1), pt(2), pt(3)});
    CHECK(Configuration(geo(pt(0), pt(1))).vertices() == std::vector<BoundaryPoint>{pt(0), pt(1)});
    Configuration t({geo(pt(0), pt(1)), geo(inf(), pt(0)), geo(pt(1), inf())});
    CHECK(t.vertices() == std::vector<BoundaryPoint>{pt(0), pt(1), inf()});
}

TEST_CASE("rotation and rendering") {
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(1), pt(3));
    CHECK(Configuration({g, h}) == Configuration({h, g}));
    CHECK(Configuration({g, h}).to_string() == "⌈(0→2),(1→3)⌉");
    CHECK(Configuration({g, h}).reverse() == Configuration({h.reverse(), g.reverse()}));
}

TEST_CASE("opposite edges span the rest of the polygon") {
    Sampler s(3);
    for (int i = 0; i < 300; ++i) {
        Configuration c = s.configuration_in(2, 5);
        for (EdgeIndex e = 0; e < c.edge_count(); e += 2) CHECK(c.opposite(e).size() == c.rank() + 1);
        for (EdgeIndex e = 1; e < c.edge_count(); e += 2) CHECK(c.opposite(e).size() == c.rank());
    }
}
