#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgeland/io.hpp"
#include "bridgeland/plot.hpp"
#include "fixtures.hpp"

#include <cmath>

using namespace bridgeland;
using namespace fixtures;
using nlohmann::json;
using namespace bridgeland::vars;

namespace {

double dist_to_segment(double px, double py, const Segment& s) {
    const double x0 = s.x0.convert_to<double>(), y0 = s.y0.convert_to<double>();
    const double dx = s.x1.convert_to<double>() - x0, dy = s.y1.convert_to<double>() - y0;
    const double len2 = dx * dx + dy * dy;
    const double u = len2 == 0 ? 0 : std::clamp(((px - x0) * dx + (py - y0) * dy) / len2, 0.0, 1.0);
    return std::hypot(px - x0 - u * dx, py - y0 - u * dy);
}

double dist_to_curve(double px, double py, const std::vector<Segment>& segs) {
    double best = 1e9;
    for (const auto& s : segs) best = std::min(best, dist_to_segment(px, py, s));
    return best;
}

const char* kEllipses = R"({
  "surface": "p1xp1", "a": 2, "b": 1, "t": 0,
  "viewport": {"xmin": -3, "xmax": 1, "ymin": -3, "ymax": 1},
  "resolution": 80,
  "walls": [{"v": "O", "w": "O(-2,-1)[1]"}, {"v": "O", "w": "O(-1,-2)[1]", "color": "#1f77b4"}],
  "lines": [{"form": "a*y + b*x"}, {"form": "a*y + b*x + a + 2*b"}, {"form": "a*y + b*x + 2*a + b"}],
  "points": [{"x": 0, "y": 0, "label": "O"}]
})";

}  // namespace

TEST_CASE("marching squares on a circle") {
    const SymPoly f = x() * x() + y() * y() - 1;
    const Viewport v{-2, 2, -2, 2};
    for (int res : {8, 40, 160}) {
        const auto segs = trace_zero_set(f, v, res);
        REQUIRE(!segs.empty());
        for (const auto& s : segs) {
            // crossings sit on grid edges where f changes sign; linear interpolation stays near the circle
            const double r0 = std::hypot(s.x0.convert_to<double>(), s.y0.convert_to<double>());
            CHECK(std::abs(r0 - 1) < 4.0 / res);
        }
        CHECK(dist_to_curve(1, 0, segs) < 1e-12);  // (1, 0) is a grid node crossing for every even res
    }
    CHECK(trace_zero_set(x() * x() + y() * y() + 1, v, 20).empty());
    CHECK_THROWS(trace_zero_set(f, v, 0));
}

TEST_CASE("saddle cells use the centre value") {
    // xy = c has a saddle at the origin; the two branches must not be joined across it
    const SymPoly f = x() * y() - Rational(1, 100);
    const auto segs = trace_zero_set(f, {-1, 1, -1, 1}, 2);
    for (const auto& s : segs) {
        const bool same_quadrant = (s.x0 >= 0) == (s.x1 >= 0) && (s.y0 >= 0) == (s.y1 >= 0);
        CHECK(same_quadrant);
    }
}

TEST_CASE("clip_line") {
    const Viewport v{-1, 1, -1, 1};
    auto segs = clip_line(1, -1, 0, v);  // x = y
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].x0 == -1);
    CHECK(segs[0].y1 == 1);
    CHECK(clip_line(1, 0, -5, v).empty());
    CHECK(clip_line(0, 0, 1, v).empty());
    segs = clip_line(0, 1, 0, v);  // y = 0
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].x0 == -1);
    CHECK(segs[0].x1 == 1);
    CHECK(clip_line(1, 1, 2, v).empty());  // touches a corner only
}

TEST_CASE("P1xP1 ellipses and heart lines: incidence at the three points") {
    const SceneSpec scene = scene_from_json(json::parse(kEllipses));
    const auto curves = scene_curves(scene);
    REQUIRE(curves.size() == 5);
    CHECK(curves[0].label == "W(O, O(-2,-1)[1])");
    // both ellipses pass through the origin; the first through (-2,-1), the second through (-1,-2)
    for (int res : {40, 80, 200}) {
        SceneSpec s = scene;
        s.resolution = res;
        const auto c = scene_curves(s);
        const double tol = 2 * 4.0 / res;
        CHECK(dist_to_curve(0, 0, c[0].segments) < tol);
        CHECK(dist_to_curve(0, 0, c[1].segments) < tol);
        CHECK(dist_to_curve(-2, -1, c[0].segments) < tol);
        CHECK(dist_to_curve(-1, -2, c[1].segments) < tol);
        // lines are exact
        CHECK(dist_to_curve(0, 0, c[2].segments) < 1e-12);
        CHECK(dist_to_curve(-2, -1, c[3].segments) < 1e-12);
        CHECK(dist_to_curve(-1, -2, c[4].segments) < 1e-12);
    }
}

TEST_CASE("BlpP2 hyperbola and ellipse scene") {
    const SceneSpec scene = scene_from_json(json::parse(R"({
      "surface": "blp2", "a": 1, "b": 2,
      "viewport": {"xmin": -3, "xmax": 2, "ymin": -4, "ymax": 1},
      "walls": [{"v": "O", "w": "T"}, {"v": "O", "w": "O(-E-2F)[1]"}]})"));
    const auto c = scene_curves(scene);
    REQUIRE(c.size() == 2);
    CHECK(!c[0].segments.empty());
    CHECK(!c[1].segments.empty());
    // (0,0) lies on W(O, O(-E-2F)[1]) at t = 0
    CHECK(dist_to_curve(0, 0, c[1].segments) < 0.1);
}

TEST_CASE("svg output") {
    const SceneSpec empty = scene_from_json(json::object());
    const std::string e = render_svg(empty);
    CHECK(e.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(e.find("</svg>") != std::string::npos);
    CHECK(e.find("<path") == std::string::npos);

    const SceneSpec scene = scene_from_json(json::parse(kEllipses));
    const std::string svg = render_svg(scene);
    CHECK(svg == render_svg(scene_from_json(json::parse(kEllipses))));
    std::size_t paths = 0;
    for (std::size_t pos = 0; (pos = svg.find("<path", pos)) != std::string::npos; ++pos) ++paths;
    CHECK(paths == 5);
    CHECK(svg.find("<circle cx=\"450.00\" cy=\"150.00\"") != std::string::npos);
    CHECK(svg.find("-0.00") == std::string::npos);
}

TEST_CASE("scene errors") {
    for (const char* bad :
         {R"j([])j", R"j({"viewport": {"xmin": 1, "xmax": 1, "ymin": 0, "ymax": 1}})j",
          R"j({"viewport": {"xmin": 0}})j", R"j({"a": 1, "b": 1, "surface": "blp2"})j", R"j({"surface": "cubic"})j",
          R"j({"walls": [{"v": "O"}]})j", R"j({"walls": [{"v": "O", "w": "O(E)"}]})j",
          R"j({"lines": [{"form": "x +* y"}]})j", R"j({"resolution": 0})j", R"j({"t": "-1"})j", R"j({"a": 1.5})j"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(scene_from_json(json::parse(bad)), ParseError);
    }
    SceneSpec quad = scene_from_json(json::parse(R"({"lines": [{"form": "x^2 + y"}]})"));
    CHECK_THROWS_AS(scene_curves(quad), ParseError);
    SceneSpec same = scene_from_json(json::parse(R"({"walls": [{"v": "O", "w": "O"}]})"));
    CHECK_THROWS_AS(scene_curves(same), std::domain_error);
}
