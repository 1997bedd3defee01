#include "cli.hpp"

#include "bridgeland/io.hpp"
#include "bridgeland/plot.hpp"
#include "bridgeland/regions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace bridgeland::cli {

using nlohmann::json;

namespace {

Surface surface_of(const std::string& name) {
    try {
        return parse_surface(name);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Rational rational_flag(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw ParseError(std::string("--") + flag + ": not a rational number: '" + text + "'");
    }
}

std::vector<Rational> rational_list(const std::string& text, const char* flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_flag(item, flag));
    if (out.empty()) throw ParseError(std::string("--") + flag + ": empty list");
    return out;
}

ExcObject lbo(Surface s, int p, int q, int shift = 0) { return line_bundle_object(s, NSClass(p, q), shift); }

const std::map<std::string, std::function<ExcCollection()>>& fixtures() {
    static const std::map<std::string, std::function<ExcCollection()>> table = {
        {"E-p1p1",
         [] {
             const Surface s = Surface::P1xP1;
             return ExcCollection{s, {lbo(s, 0, 0), lbo(s, 1, 0), lbo(s, 0, 1), lbo(s, 1, 1)}};
         }},
        {"E'-p1p1",
         [] {
             const Surface s = Surface::P1xP1;
             return ExcCollection{
                 s, {lbo(s, 0, 0), {"G", ChernCharacter(s, 3, NSClass(1, 1), -1), 0}, lbo(s, 1, 0), lbo(s, 0, 1)}};
         }},
        {"F'-p1p1", dual_Fprime_p1p1},
        {"E-blp2",
         [] {
             const Surface s = Surface::BlpP2;
             return ExcCollection{s, {lbo(s, 0, 0), lbo(s, 0, 1), lbo(s, 1, 1), lbo(s, 1, 2)}};
         }},
        {"E'-blp2",
         [] {
             const Surface s = Surface::BlpP2;
             return ExcCollection{s,
                                  {lbo(s, 0, 0), {"G1", ChernCharacter(s, 2, NSClass(1, 1), Rational(-1, 2)), 0},
                                   lbo(s, 0, 1), lbo(s, 1, 1)}};
         }},
        {"Ehat-blp2",
         [] {
             const Surface s = Surface::BlpP2;
             return ExcCollection{s, {lbo(s, 0, 0), lbo(s, 1, 0), lbo(s, 1, 1), lbo(s, 2, 2)}};
         }},
        {"E''-blp2",
         [] {
             const Surface s = Surface::BlpP2;
             return ExcCollection{s,
                                  {lbo(s, 0, 0), lbo(s, 1, 0),
                                   {"G2", ChernCharacter(s, 2, NSClass(1, 1), Rational(-1, 2)), 0}, lbo(s, 1, 1)}};
         }},
        {"F'-blp2", dual_Fprime_blp2},
        {"F''-blp2", dual_Fdoubleprime_blp2},
    };
    return table;
}

json read_json(const std::string& source, std::istream& in) {
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(source);
        if (!f) throw ParseError("cannot open '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

struct CollectionFlags {
    std::string file;
    std::string fixture;

    void add(CLI::App* sub) {
        auto* c = sub->add_option("--collection", file, "collection JSON file, or - for standard input");
        auto* f = sub->add_option("--fixture", fixture, "built-in collection")->check(CLI::IsMember(fixture_names()));
        c->excludes(f);
    }

    ExcCollection load(std::istream& in) const {
        if (!fixture.empty()) return fixtures().at(fixture)();
        if (file.empty()) throw ParseError("one of --collection or --fixture is required");
        return collection_from_json(read_json(file, in));
    }
};

struct PointFlags {
    std::string a, b, x, y, t;

    void add(CLI::App* sub, bool required) {
        sub->add_option("--a", a, "ample class coefficient (default 2 on p1xp1, 1 on blp2)");
        sub->add_option("--b", b, "ample class coefficient (default 1 on p1xp1, 2 on blp2)");
        for (auto [name, field] : {std::pair{"--x", &x}, std::pair{"--y", &y}, std::pair{"--t", &t}}) {
            auto* o = sub->add_option(name, *field);
            if (required) o->required();
        }
    }

    bool given() const { return !x.empty() || !y.empty() || !t.empty(); }

    std::pair<Rational, Rational> ample(Surface s) const {
        const bool p = s == Surface::P1xP1;
        return {a.empty() ? Rational(p ? 2 : 1) : rational_flag(a, "a"),
                b.empty() ? Rational(p ? 1 : 2) : rational_flag(b, "b")};
    }

    StabilityPoint point(Surface s) const {
        if (x.empty() || y.empty() || t.empty()) throw ParseError("--x, --y and --t are all required");
        const auto [A, B] = ample(s);
        return make_point(s, A, B, rational_flag(x, "x"), rational_flag(y, "y"), rational_flag(t, "t"));
    }
};

std::string vector_text(const auto& v) {
    std::string s = "(";
    for (long i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(Rational(v(i)));
    return s + ")";
}

json vector_json(const auto& v) {
    json j = json::array();
    for (long i = 0; i < v.size(); ++i) j.push_back(to_string(Rational(v(i))));
    return j;
}

std::string charge_text(const ChargeValue& z) {
    return to_string(z.re) + (z.im < 0 ? " - " : " + ") + to_string(z.im < 0 ? Rational(-z.im) : z.im) + "*i";
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, _] : fixtures()) names.push_back(k);
    return names;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bridgeland stability computations on P1xP1 and Bl_p P2", "bridgeland"};
    app.require_subcommand(1);
    std::string surface_name_flag = "p1xp1";
    auto surface_opt = [&](CLI::App* sub) {
        sub->add_option("--surface", surface_name_flag, "p1xp1 or blp2")->capture_default_str();
    };
    bool as_json = false;
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };

    // chi
    std::string A, B;
    auto* chi = app.add_subcommand("chi", "Euler pairing chi(A, B) of two objects");
    surface_opt(chi);
    chi->add_option("--A", A)->required();
    chi->add_option("--B", B)->required();

    // ch
    std::string obj;
    PointFlags ch_pt;
    auto* ch = app.add_subcommand("ch", "Chern character, and the central charge at a point");
    surface_opt(ch);
    ch->add_option("--obj", obj)->required();
    ch_pt.add(ch, false);
    json_flag(ch);

    // collection commands
    CollectionFlags coll;
    std::string by;
    auto* twist = app.add_subcommand("twist", "Twist a collection by a line bundle");
    coll.add(twist);
    twist->add_option("--by", by, "divisor p,q")->required();

    auto* dual = app.add_subcommand("dual", "Left dual collection (F_n, ..., F_1)");
    coll.add(dual);

    long at = 0;
    int period_shift = 0;
    auto* tilt = app.add_subcommand("tilt", "Left tilt of the helix generated by a collection");
    coll.add(tilt);
    tilt->add_option("--at", at, "1-based helix position of the tilted object")->required();
    tilt->add_option("--period-shift", period_shift, "shift picked up by E_{i-n} relative to E_i")
        ->capture_default_str();

    bool dualize = false;
    std::vector<std::string> labels;
    auto* quiver = app.add_subcommand("quiver", "Arrow matrix of a dual collection");
    coll.add(quiver);
    quiver->add_flag("--dualize", dualize, "the input is E; compute its dual first");
    quiver->add_option("--labels", labels, "vertex labels")->delimiter(',');

    // wall
    std::string wv, ww, plane;
    bool classify = false, xy = false;
    PointFlags wall_pt;
    auto* wall = app.add_subcommand("wall", "Numerical wall W(v, w)");
    surface_opt(wall);
    wall->add_option("--v", wv)->required();
    wall->add_option("--w", ww)->required();
    wall->add_flag("--classify", classify, "conic type of the fixed-t slices");
    wall->add_flag("--xy", xy, "restriction to t = 0");
    wall->add_option("--plane", plane, "vertical plane alpha,beta,gamma (uses --a, --b)");
    wall->add_option("--a", wall_pt.a);
    wall->add_option("--b", wall_pt.b);
    json_flag(wall);

    // region
    std::string kind, twist_by = "0,0";
    PointFlags reg_pt;
    auto* region = app.add_subcommand("region", "Membership in a quiver region");
    surface_opt(region);
    region->add_option("--kind", kind, "p1p1, F' or F'' (default p1p1 on p1xp1, F' on blp2)");
    region->add_option("--twist", twist_by, "twist p,q")->capture_default_str();
    reg_pt.add(region, true);
    json_flag(region);

    // cover
    std::string xmin = "-3", xmax = "3", ymin = "-3", ymax = "3", step = "1/4", schedule, cover_a, cover_b;
    bool no_fpp = false, no_translation = false, quiet = false;
    auto* cover = app.add_subcommand("cover", "Coverage of a grid by translated quiver regions");
    surface_opt(cover);
    cover->add_option("--a", cover_a);
    cover->add_option("--b", cover_b);
    for (auto [name, field] : {std::pair{"--xmin", &xmin}, std::pair{"--xmax", &xmax}, std::pair{"--ymin", &ymin},
                               std::pair{"--ymax", &ymax}, std::pair{"--step", &step}})
        cover->add_option(name, *field)->capture_default_str();
    cover->add_option("--t-schedule", schedule, "comma-separated t values, tried in order");
    cover->add_flag("--no-Fdoubleprime", no_fpp, "use F' regions only (blp2)");
    cover->add_flag("--no-translation", no_translation, "use the untwisted regions only");
    cover->add_flag("--quiet", quiet, "print the summary line only");

    // dimvec, theta
    std::string dv;
    auto* dimvec = app.add_subcommand("dimvec", "Coordinates of a class in the basis of a collection");
    coll.add(dimvec);
    dimvec->add_option("--v", dv)->required();
    json_flag(dimvec);

    PointFlags th_pt;
    auto* theta = app.add_subcommand("theta", "King weights of a stability point");
    coll.add(theta);
    theta->add_option("--v", dv)->required();
    th_pt.add(theta, true);
    json_flag(theta);

    // screen
    std::string L;
    PointFlags sc_pt;
    auto* screen = app.add_subcommand("screen", "Line bundle stability screen on blp2");
    screen->add_option("--L", L, "divisor p,q of O(pE+qF)")->required();
    sc_pt.add(screen, true);
    json_flag(screen);

    // plot
    std::string scene_file;
    int resolution = 0;
    auto* plot = app.add_subcommand("plot", "SVG figure of a scene");
    plot->add_option("--scene", scene_file, "scene JSON file, or -")->required();
    plot->add_option("--resolution", resolution, "marching squares cells per side (overrides the scene)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        const auto pretty = [&](const json& j) { out << j.dump(2) << '\n'; };

        if (chi->parsed()) {
            const Surface s = surface_of(surface_name_flag);
            out << to_string(euler_pairing(parse_object(s, A).k_class(), parse_object(s, B).k_class())) << '\n';
            return kOk;
        }
        if (ch->parsed()) {
            const Surface s = surface_of(surface_name_flag);
            const ExcObject e = parse_object(s, obj);
            json j = {{"object", display_name(e)}, {"ch", to_json(e.cls)}, {"shift", e.shift}};
            std::ostringstream text;
            text << display_name(e) << ": ch = " << to_string(e.cls);
            if (e.shift) text << ", K-class " << to_string(e.k_class());
            text << '\n';
            if (ch_pt.given()) {
                const StabilityPoint p = ch_pt.point(s);
                const ChargeValue z = central_charge(e.k_class(), p);
                j["Z"] = {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
                text << "Z = " << charge_text(z) << '\n';
                if (z.re != 0 || z.im != 0) {
                    j["beta"] = to_string(bridgeland_slope(z));
                    text << "beta = " << to_string(bridgeland_slope(z)) << '\n';
                }
            }
            if (as_json) pretty(j);
            else out << text.str();
            return kOk;
        }
        if (twist->parsed()) {
            const NSClass D = parse_ns_class(by);
            pretty(to_json(twist_collection(coll.load(in), D)));
            return kOk;
        }
        if (dual->parsed()) {
            pretty(to_json(dual_collection(coll.load(in))));
            return kOk;
        }
        if (tilt->parsed()) {
            pretty(to_json(left_tilt(Helix(coll.load(in), period_shift), at - 1).base()));
            return kOk;
        }
        if (quiver->parsed()) {
            ExcCollection F = coll.load(in);
            if (dualize) F = dual_collection(F);
            pretty(to_json(quiver_arrows(F, true, labels)));
            return kOk;
        }
        if (wall->parsed()) {
            const Surface s = surface_of(surface_name_flag);
            const ExcObject v = parse_object(s, wv), w = parse_object(s, ww);
            const WallQuadric q = wall_quadric(v.k_class(), w.k_class());
            json j = {{"v", display_name(v)}, {"w", display_name(w)}, {"equation", to_string(q.equation)}};
            std::ostringstream text;
            text << to_string(q.equation) << '\n';
            if (classify) {
                const ConicClass c = classify_fixed_t_conic(q);
                j["class"] = to_string(c.kind);
                j["discriminant"] = c.certificate.describe();
                text << to_string(c.kind) << "; discriminant = " << c.certificate.describe() << '\n';
            }
            if (xy) {
                j["xy"] = to_string(xy_restriction(q));
                text << "t = 0: " << to_string(xy_restriction(q)) << '\n';
            }
            if (!plane.empty()) {
                const auto coef = rational_list(plane, "plane");
                if (coef.size() != 3) throw ParseError("--plane expects alpha,beta,gamma");
                const auto [a, b] = wall_pt.ample(s);
                const PlaneSection sec = wall_in_vertical_plane(q, {coef[0], coef[1], coef[2]}, make_ample(s, a, b));
                j["section"] = {{"kind", to_string(sec.kind)},
                                {"equation", to_string(sec.restricted)},
                                {"center", to_string(sec.center)},
                                {"radius2", to_string(sec.radius2)},
                                {"aspect", to_string(sec.aspect)}};
                text << "plane section: " << to_string(sec.kind) << ", " << to_string(sec.restricted) << " = 0";
                if (sec.kind != SectionKind::Empty && sec.kind != SectionKind::Parabola)
                    text << ", center s = " << to_string(sec.center) << ", radius^2 = " << to_string(sec.radius2);
                text << '\n';
            }
            if (as_json) pretty(j);
            else out << text.str();
            return kOk;
        }
        if (region->parsed()) {
            const Surface s = surface_of(surface_name_flag);
            if (kind.empty()) kind = s == Surface::P1xP1 ? "p1p1" : "F'";
            const NSClass tw = parse_ns_class(twist_by);
            RegionSpec r;
            if (kind == "p1p1" && s == Surface::P1xP1) r = region_p1p1(tw);
            else if (kind == "F'" && s == Surface::BlpP2) r = region_blp2_Fprime(tw);
            else if (kind == "F''" && s == Surface::BlpP2) r = region_blp2_Fdoubleprime(tw);
            else throw ParseError("region kind '" + kind + "' does not exist on " + surface_name(s));
            const StabilityPoint p = reg_pt.point(s);
            const Membership m = membership(r, p);
            const RotatabilityReport rot = rotatability_conditions(r.dual, p);
            if (as_json) {
                pretty({{"region", r.id}, {"member", m.member}, {"failed", m.failed}, {"rotatable", rot.satisfied}});
            } else {
                out << (m.member ? "member" : "not a member") << " of " << r.id << " twisted by O("
                    << to_string(tw(0)) << "," << to_string(tw(1)) << ")\n";
                for (const auto& f : m.failed) out << "  fails: " << f << '\n';
                out << "rotatable: " << (rot.satisfied ? "yes" : "no") << '\n';
            }
            return m.member ? kOk : kPropertyFailure;
        }
        if (cover->parsed()) {
            const Surface s = surface_of(surface_name_flag);
            PointFlags ab;
            ab.a = cover_a;
            ab.b = cover_b;
            const auto [a, b] = ab.ample(s);
            CoverageOptions opt;
            if (!schedule.empty()) opt.t_schedule = rational_list(schedule, "t-schedule");
            opt.use_Fdoubleprime = !no_fpp;
            opt.allow_translation = !no_translation;
            const CoverageReport r =
                coverage_check(s, a, b, rational_flag(xmin, "xmin"), rational_flag(xmax, "xmax"),
                               rational_flag(ymin, "ymin"), rational_flag(ymax, "ymax"), rational_flag(step, "step"), opt);
            if (!quiet) pretty(to_json(r));
            if (r.covered) {
                out << "COVERED (" << r.results.size() << " points)\n";
                return kOk;
            }
            out << "NOT COVERED: first failure at (" << to_string(r.first_failure->x) << ", "
                << to_string(r.first_failure->y) << ")\n";
            return kPropertyFailure;
        }
        if (dimvec->parsed()) {
            const ExcCollection F = coll.load(in);
            const ExcObject v = parse_object(F.surface, dv);
            const DimensionVector d = dimension_vector(v.k_class(), F);
            if (as_json) pretty({{"d", vector_json(d)}});
            else out << "d = " << vector_text(d) << '\n';
            return kOk;
        }
        if (theta->parsed()) {
            const ExcCollection F = coll.load(in);
            const ChernCharacter v = parse_object(F.surface, dv).k_class();
            const StabilityPoint p = th_pt.point(F.surface);
            const ThetaWeights th = king_weights(v, F, p);
            const DimensionVector d = dimension_vector(v, F);
            const auto subs = king_screen(th, d);
            if (as_json) {
                json js = json::array();
                for (const auto& e : subs) js.push_back(vector_json(e));
                pretty({{"theta", vector_json(th)},
                        {"d", vector_json(d)},
                        {"theta_d", to_string(theta_pairing(th, d))},
                        {"screen", "necessary condition only"},
                        {"violating_subvectors", js}});
            } else {
                out << "theta = " << vector_text(th) << '\n';
                out << "d = " << vector_text(d) << ", theta.d = " << to_string(theta_pairing(th, d)) << '\n';
                out << "King screen (necessary condition only): " << subs.size()
                    << " sub-dimension vectors with theta.d' > 0\n";
                for (const auto& e : subs) out << "  " << vector_text(e) << '\n';
            }
            return kOk;
        }
        if (screen->parsed()) {
            const StabilityPoint p = sc_pt.point(Surface::BlpP2);
            const ScreenResult r = line_bundle_stability_screen_blp2(parse_ns_class(L), p);
            if (as_json) pretty({{"L", L}, {"result", to_string(r)}});
            else out << to_string(r) << '\n';
            return r == ScreenResult::Destabilized ? kPropertyFailure : kOk;
        }
        if (plot->parsed()) {
            SceneSpec scene = scene_from_json(read_json(scene_file, in));
            if (resolution > 0) scene.resolution = resolution;
            out << render_svg(scene);
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace bridgeland::cli
