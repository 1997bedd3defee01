#pragma once

#include "bridgeland/lattice.hpp"
#include "bridgeland/sympoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bridgeland {

struct Viewport {
    Rational xmin, xmax, ymin, ymax;
};

struct Segment {
    Rational x0, y0, x1, y1;
};

/// Zero set of a polynomial in x, y by marching squares on the (resolution x resolution) grid of
/// cells covering the viewport. Node values are exact; crossings are exact linear interpolations.
/// Saddle cells are resolved by the sign of the mean of the four corners.
std::vector<Segment> trace_zero_set(const SymPoly& f, const Viewport& view, int resolution);

/// The part of {alpha x + beta y + gamma = 0} inside the viewport, or nothing.
std::vector<Segment> clip_line(const Rational& alpha, const Rational& beta, const Rational& gamma,
                               const Viewport& view);

struct SceneWall {
    std::string v;
    std::string w;
    std::string color = "#b22222";
};

struct SceneLine {
    std::string form;  ///< linear in x, y; may involve a, b
    std::string color = "#555555";
};

struct ScenePoint {
    Rational x, y;
    std::string label;
};

/// A figure: walls between object literals and lines, restricted to the slice t = t0.
struct SceneSpec {
    Surface surface = Surface::P1xP1;
    Rational a = 1, b = 1, t = 0;
    Viewport view{-3, 1, -3, 1};
    int resolution = 160;
    std::vector<SceneWall> walls;
    std::vector<SceneLine> lines;
    std::vector<ScenePoint> points;
};

/// Throws ParseError for malformed scenes, including a degenerate viewport.
SceneSpec scene_from_json(const nlohmann::json& j);

struct SceneCurve {
    std::string label;
    std::string color;
    std::vector<Segment> segments;
};

std::vector<SceneCurve> scene_curves(const SceneSpec& scene);

/// Deterministic SVG document: 600x600 viewBox, y axis pointing up.
std::string render_svg(const SceneSpec& scene);

}  // namespace bridgeland
