#include "bridgeland/plot.hpp"

#include "bridgeland/io.hpp"
#include "bridgeland/walls.hpp"

#include <cstdio>
#include <sstream>

namespace bridgeland {

using nlohmann::json;

namespace {

constexpr int kCanvas = 600;

struct Pt {
    Rational x, y;
};

Pt crossing(const Pt& p, const Rational& fp, const Pt& q, const Rational& fq) {
    const Rational s = fp / (fp - fq);
    return {p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)};
}

std::string fmt(const Rational& q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", q.convert_to<double>());
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

}  // namespace

std::vector<Segment> trace_zero_set(const SymPoly& f, const Viewport& view, int resolution) {
    if (resolution < 1) throw std::invalid_argument("resolution must be positive");
    const int n = resolution;
    const Rational dx = (view.xmax - view.xmin) / n, dy = (view.ymax - view.ymin) / n;
    std::vector<Rational> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = view.xmin + dx * i;
        ys[i] = view.ymin + dy * i;
    }
    std::vector<std::vector<Rational>> val(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) val[i][j] = evaluate(f, {{Var::x, xs[i]}, {Var::y, ys[j]}});

    std::vector<Segment> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // corners counter-clockwise from (i, j)
            const Pt c[4] = {{xs[i], ys[j]}, {xs[i + 1], ys[j]}, {xs[i + 1], ys[j + 1]}, {xs[i], ys[j + 1]}};
            const Rational v[4] = {val[i][j], val[i + 1][j], val[i + 1][j + 1], val[i][j + 1]};
            bool pos[4];
            for (int k = 0; k < 4; ++k) pos[k] = v[k] >= 0;
            std::vector<Pt> cuts;
            for (int k = 0; k < 4; ++k) {
                const int l = (k + 1) % 4;
                if (pos[k] != pos[l]) cuts.push_back(crossing(c[k], v[k], c[l], v[l]));
            }
            if (cuts.size() == 2) {
                out.push_back({cuts[0].x, cuts[0].y, cuts[1].x, cuts[1].y});
            } else if (cuts.size() == 4) {
                // edges 0..3 each cut; pair them around the corner whose sign differs from the centre
                const bool centre = (v[0] + v[1] + v[2] + v[3]) >= 0;
                if (pos[0] == centre) {
                    out.push_back({cuts[0].x, cuts[0].y, cuts[1].x, cuts[1].y});
                    out.push_back({cuts[2].x, cuts[2].y, cuts[3].x, cuts[3].y});
                } else {
                    out.push_back({cuts[3].x, cuts[3].y, cuts[0].x, cuts[0].y});
                    out.push_back({cuts[1].x, cuts[1].y, cuts[2].x, cuts[2].y});
                }
            }
        }
    }
    return out;
}

std::vector<Segment> clip_line(const Rational& alpha, const Rational& beta, const Rational& gamma,
                               const Viewport& view) {
    if (alpha == 0 && beta == 0) return {};
    std::vector<Pt> hits;
    auto add = [&](const Rational& x, const Rational& y) {
        if (x < view.xmin || x > view.xmax || y < view.ymin || y > view.ymax) return;
        for (const auto& h : hits)
            if (h.x == x && h.y == y) return;
        hits.push_back({x, y});
    };
    if (beta != 0) {
        for (const Rational& x : {view.xmin, view.xmax}) add(x, -(alpha * x + gamma) / beta);
    }
    if (alpha != 0) {
        for (const Rational& y : {view.ymin, view.ymax}) add(-(beta * y + gamma) / alpha, y);
    }
    if (hits.size() < 2) return {};
    return {{hits[0].x, hits[0].y, hits[1].x, hits[1].y}};
}

SceneSpec scene_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("scene must be a JSON object");
        SceneSpec s;
        auto rat = [](const json& v) {
            if (v.is_number_integer()) return Rational(v.get<long long>());
            if (v.is_string()) return parse_rational(v.get<std::string>());
            throw ParseError("expected an integer or a \"p/q\" string");
        };
        if (j.contains("surface")) s.surface = parse_surface(j.at("surface").get<std::string>());
        if (j.contains("a")) s.a = rat(j.at("a"));
        if (j.contains("b")) s.b = rat(j.at("b"));
        if (j.contains("t")) s.t = rat(j.at("t"));
        if (j.contains("resolution")) s.resolution = j.at("resolution").get<int>();
        if (j.contains("viewport")) {
            const json& v = j.at("viewport");
            s.view = {rat(v.at("xmin")), rat(v.at("xmax")), rat(v.at("ymin")), rat(v.at("ymax"))};
        }
        if (!(s.view.xmin < s.view.xmax && s.view.ymin < s.view.ymax)) throw ParseError("degenerate viewport");
        if (s.resolution < 1 || s.resolution > 2000) throw ParseError("resolution must be in 1..2000");
        if (s.t < 0) throw ParseError("t must be non-negative");
        if (!is_ample(s.surface, s.a, s.b)) throw ParseError("(a, b) is not ample");
        for (const auto& w : j.value("walls", json::array())) {
            SceneWall sw{w.at("v").get<std::string>(), w.at("w").get<std::string>()};
            if (w.contains("color")) sw.color = w.at("color").get<std::string>();
            parse_object(s.surface, sw.v);
            parse_object(s.surface, sw.w);
            s.walls.push_back(std::move(sw));
        }
        for (const auto& l : j.value("lines", json::array())) {
            SceneLine sl{l.at("form").get<std::string>()};
            if (l.contains("color")) sl.color = l.at("color").get<std::string>();
            parse_sympoly(sl.form);
            s.lines.push_back(std::move(sl));
        }
        for (const auto& p : j.value("points", json::array()))
            s.points.push_back({rat(p.at("x")), rat(p.at("y")), p.value("label", "")});
        return s;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad scene: ") + e.what());
    }
}

std::vector<SceneCurve> scene_curves(const SceneSpec& scene) {
    const Bindings slice{{Var::a, scene.a}, {Var::b, scene.b}, {Var::t, scene.t}};
    std::vector<SceneCurve> curves;
    for (const auto& w : scene.walls) {
        const ExcObject v = parse_object(scene.surface, w.v), u = parse_object(scene.surface, w.w);
        const WallQuadric q = wall_quadric(v.k_class(), u.k_class());
        curves.push_back({"W(" + display_name(v) + ", " + display_name(u) + ")", w.color,
                          trace_zero_set(substitute(q.equation, slice), scene.view, scene.resolution)});
    }
    for (const auto& l : scene.lines) {
        const SymPoly f = substitute(parse_sympoly(l.form), slice);
        if (f.total_degree() > 1) throw ParseError("line '" + l.form + "' is not linear in x, y");
        const Rational alpha = coefficient(f, {{Var::x, 1}, {Var::y, 0}}).constant_term(),
                       beta = coefficient(f, {{Var::x, 0}, {Var::y, 1}}).constant_term(),
                       gamma = coefficient(f, {{Var::x, 0}, {Var::y, 0}}).constant_term();
        curves.push_back({l.form + " = 0", l.color, clip_line(alpha, beta, gamma, scene.view)});
    }
    return curves;
}

std::string render_svg(const SceneSpec& scene) {
    const Viewport& v = scene.view;
    const Rational sx = Rational(kCanvas) / (v.xmax - v.xmin), sy = Rational(kCanvas) / (v.ymax - v.ymin);
    auto X = [&](const Rational& x) { return fmt((x - v.xmin) * sx); };
    auto Y = [&](const Rational& y) { return fmt((v.ymax - y) * sy); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\" width=\""
        << kCanvas << "\" height=\"" << kCanvas << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";
    if (v.xmin <= 0 && 0 <= v.xmax)
        svg << "<line x1=\"" << X(0) << "\" y1=\"0.00\" x2=\"" << X(0) << "\" y2=\"" << kCanvas
            << ".00\" stroke=\"#dddddd\"/>\n";
    if (v.ymin <= 0 && 0 <= v.ymax)
        svg << "<line x1=\"0.00\" y1=\"" << Y(0) << "\" x2=\"" << kCanvas << ".00\" y2=\"" << Y(0)
            << "\" stroke=\"#dddddd\"/>\n";
    for (const auto& c : scene_curves(scene)) {
        svg << "<path fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t i = 0; i < c.segments.size(); ++i) {
            const auto& s = c.segments[i];
            svg << (i ? " " : "") << 'M' << X(s.x0) << ',' << Y(s.y0) << 'L' << X(s.x1) << ',' << Y(s.y1);
        }
        svg << "\"><title>" << c.label << "</title></path>\n";
    }
    for (const auto& p : scene.points) {
        svg << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"3\" fill=\"black\">";
        if (!p.label.empty()) svg << "<title>" << p.label << "</title>";
        svg << "</circle>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bridgeland
