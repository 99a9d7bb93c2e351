#include "support.hpp"

#include "ghostalg/expression.hpp"
#include "ghostalg/scene.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace ghost;
using namespace ghost::testing;
using nlohmann::json;

namespace {
Scene sample_scene() {
    return Scene::from_json(json::parse(R"({
      "version": 1,
      "family": {"kind": "veronese", "dim": 3, "signature": [1, 2]},
      "points": {"a": "0", "b": "2", "c": "1", "d": "3", "w": "inf"},
      "geodesics": {"g": "a->b", "h": ["c", "d", 2], "k": {"from": "a", "to": "w"}},
      "configurations": {"G": ["g", "h"], "K": ["k", "0->5"]},
      "group": {"generators": [[5, 12, 2, 5]]},
      "parameters": {"G": "G", "H": "h"}
    })"));
}
}  // namespace

TEST_CASE("scene resolution") {
    Scene sc = sample_scene();
    CHECK(sc.point("a") == pt(0));
    CHECK(sc.point("3/4") == pt(3, 4));
    CHECK(sc.geodesic("h") == geo(pt(1), pt(3), 2));
    CHECK(sc.geodesic("k") == geo(pt(0), inf()));
    CHECK(sc.geodesic("(1→2)@2") == geo(pt(1), pt(2), 2));
    CHECK(sc.configuration("G").rank() == 2);
    CHECK(sc.configuration("⌈g,k⌉") == Configuration({geo(pt(0), pt(2)), geo(pt(0), inf())}));
    CHECK(sc.configuration("g").rank() == 1);
    CHECK(sc.signature() == ThetaSignature({1, 2}, 3));
    REQUIRE(sc.group());
    CHECK(sc.group()->generators.size() == 1);
    CHECK(sc.family().build().name() == "veronese(3)");
}

TEST_CASE("scene errors") {
    Scene sc = sample_scene();
    CHECK_THROWS_AS(sc.geodesic("nope"), SceneError);
    CHECK_THROWS_AS(Scene::from_json(json::parse(R"({"version": 2})")), SceneError);
    CHECK_THROWS_AS(Scene::from_json(json::parse(R"({"version": 1, "points": {"a": "1/0/2"}})")), SceneError);
    CHECK_THROWS_AS(Scene::from_json(json::parse(R"({"version": 1, "geodesics": {"g": ["0", "1", 3]}})")), SceneError);
    CHECK_THROWS_AS(
        Scene::from_json(json::parse(R"({"version": 1, "points": {"x": "1"}, "geodesics": {"x": "0->1"}})")),
        SceneError);
    CHECK_THROWS(Scene::load("/nonexistent/scene.json"));
}

TEST_CASE("expressions") {
    Scene sc;
    ThetaGeodesic g = geo(pt(0), pt(2)), h = geo(pt(1), pt(3));
    GhostElement gg = GhostElement::geodesic(g), hh = GhostElement::geodesic(h);
    CHECK(parse_expression("[0->2, 1->3]", sc) == bracket(gg, hh));
    CHECK(parse_expression("(0->2)", sc) == gg);
    CHECK(parse_expression("3/2 * ⌈0->2,1->3⌉ − 𝟙", sc) ==
          Rational(3, 2) * GhostElement(Configuration({g, h})) - GhostElement::casimir());
    CHECK(parse_expression("[𝟙, ⌈0->2,1->3⌉]", sc).is_zero());
    CHECK(parse_expression("[⌈0->2,1->3⌉, ⌈0->2,1->3⌉]", sc).is_zero());
    CHECK(parse_expression("-(0->2)·(1->3)", sc) == -(gg * hh));
    CHECK_THROWS_AS(parse_expression("[0->2,", sc), ParseError);
    CHECK_THROWS_AS(parse_expression("1 +", sc), ParseError);
    try {
        parse_expression("(0->2) $", sc);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}
