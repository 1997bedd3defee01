#include "bridgeland/walls.hpp"

#include <array>
#include <stdexcept>

namespace bridgeland {

namespace {

using namespace vars;

struct TableFactor {
    const char* label;
    SymPoly poly;
    int sign_p1p1;  // 0: sign not fixed on the cone
    int sign_blp2;
};

const std::vector<TableFactor>& factor_table() {
    static const std::vector<TableFactor> table = {
        {"a", a(), 1, 1},
        {"b", b(), 1, 1},
        {"(b-a)", b() - a(), 0, 1},
        {"(2*b-a)", 2 * b() - a(), 0, 1},
        {"(a-2*b)", a() - 2 * b(), 0, -1},
        {"(a+b)", a() + b(), 1, 1},
        {"(a+2*b)", a() + 2 * b(), 1, 1},
        {"(2*a+b)", 2 * a() + b(), 1, 1},
    };
    return table;
}

std::string cone_text(Surface s) { return s == Surface::P1xP1 ? "a,b>0" : "b>a>0"; }

// Rational grid of the ample cone used when the factor table does not apply.
std::vector<std::pair<Rational, Rational>> cone_samples(Surface s) {
    std::vector<std::pair<Rational, Rational>> out;
    for (int i = 1; i <= 40; ++i)
        for (int j = 1; j <= 40; ++j) {
            Rational av(i, 4), bv(j, 4);
            if (is_ample(s, av, bv)) out.emplace_back(av, bv);
        }
    return out;
}

struct Quadratic {
    Rational A, C, L, M;  // A s^2 + C t^2 + L s + M
};

Quadratic split_quadratic(const SymPoly& r) {
    Quadratic q;
    for (const auto& [e, c] : r.terms()) {
        const int es = e[0], et = e[2];
        if (e[1] != 0 || e[3] != 0 || e[4] != 0)
            throw std::logic_error("restricted wall still depends on y, a or b");
        if (es == 2 && et == 0) q.A = c;
        else if (es == 0 && et == 2) q.C = c;
        else if (es == 1 && et == 0) q.L = c;
        else if (es == 0 && et == 0) q.M = c;
        else throw std::logic_error("restricted wall is not of the form A s^2 + C t^2 + L s + M");
    }
    return q;
}

SymPoly restrict_to_line(const WallQuadric& wall, const AmpleClass& H, const NSClass& base,
                         const NSClass& dir) {
    const SymPoly bound = substitute(wall.equation, {{Var::a, H.a}, {Var::b, H.b}});
    const SymPoly s = x();
    return compose(bound, {{Var::x, SymPoly(base(0)) + SymPoly(dir(0)) * s},
                           {Var::y, SymPoly(base(1)) + SymPoly(dir(1)) * s}});
}

// Is there s with A s^2 + L s + M < 0?
bool quadratic_takes_negative(const Rational& A, const Rational& L, const Rational& M) {
    if (A < 0) return true;
    if (A == 0) return L != 0 || M < 0;
    return L * L - 4 * A * M > 0;
}

}  // namespace

SymPoly wall_cross_product(const ChernCharacter& v, const ChernCharacter& w) {
    if (v.surface() != w.surface()) throw std::invalid_argument("wall of classes on different surfaces");
    const SymbolicCharge zv = central_charge_symbolic(v), zw = central_charge_symbolic(w);
    return zw.re * heart_form(v) - zv.re * heart_form(w);
}

WallQuadric wall_quadric(const ChernCharacter& v, const ChernCharacter& w) {
    const SymPoly raw = wall_cross_product(v, w);
    if (raw.is_zero()) throw std::domain_error("proportional classes: wall is everywhere/nowhere");
    auto normalized = normalize_primitive_scaled(raw);
    return {v, w, std::move(normalized.poly), sign(normalized.scale)};
}

SymPoly xy_restriction(const WallQuadric& wall) { return substitute(wall.equation, {{Var::t, 0}}); }

std::string to_string(Side s) {
    switch (s) {
        case Side::Inside: return "inside";
        case Side::On: return "on";
        case Side::Outside: return "outside";
    }
    return "?";
}

Side point_sign(const WallQuadric& wall, const StabilityPoint& p) {
    for (const auto* c : {&wall.v, &wall.w}) {
        const auto z = central_charge(*c, p);
        if (z.re == 0 && z.im == 0) throw std::domain_error("class has vanishing charge here");
    }
    const int s = wall.orientation * sign(evaluate(wall.equation, bindings(p)));
    return s > 0 ? Side::Inside : (s == 0 ? Side::On : Side::Outside);
}

std::string SignCertificate::describe() const {
    const char* rel = sign > 0 ? " > 0" : (sign < 0 ? " < 0" : " = 0");
    std::string body;
    if (certified) {
        if (constant == -1 && !factors.empty()) body = "-";
        else if (constant != 1 || factors.empty()) body = to_string(constant) + (factors.empty() ? "" : "*");
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
    } else {
        body = to_string(poly);
    }
    const std::string cone = cone_text(surface);
    if (!uniform) return body + " changes sign under " + cone + " (sampled, not certified)";
    return body + rel + " under " + cone + (certified ? "" : " (sampled, not certified)");
}

SignCertificate certify_sign(const SymPoly& p, Surface s) {
    if (p.depends_on(Var::x) || p.depends_on(Var::y) || p.depends_on(Var::t))
        throw std::invalid_argument("sign certificates are for polynomials in a, b only");
    SignCertificate cert;
    cert.poly = p;
    cert.surface = s;
    if (p.is_zero()) {
        cert.certified = true;
        return cert;
    }
    SymPoly rest = p;
    int factor_sign = 1;
    for (const auto& f : factor_table()) {
        const int fs = s == Surface::P1xP1 ? f.sign_p1p1 : f.sign_blp2;
        if (fs == 0) continue;
        while (auto q = exact_divide(rest, f.poly)) {
            rest = std::move(*q);
            cert.factors.push_back(f.label);
            factor_sign *= fs;
        }
    }
    if (rest.is_constant()) {
        cert.certified = true;
        cert.constant = rest.constant_term();
        cert.sign = factor_sign * sign(cert.constant);
        if (cert.constant < 0) {
            for (auto& label : cert.factors)
                if (label == std::string("(2*b-a)")) {
                    label = "(a-2*b)";
                    cert.constant = -cert.constant;
                    break;
                }
        }
        return cert;
    }
    cert.factors.clear();
    bool pos = false, neg = false, zero = false;
    for (const auto& [av, bv] : cone_samples(s)) {
        const int v = sign(evaluate(p, {{Var::a, av}, {Var::b, bv}}));
        pos |= v > 0;
        neg |= v < 0;
        zero |= v == 0;
    }
    cert.uniform = !zero && !(pos && neg);
    cert.sign = cert.uniform ? (pos ? 1 : -1) : 0;
    return cert;
}

std::string to_string(ConicKind k) {
    switch (k) {
        case ConicKind::Ellipse: return "ellipse";
        case ConicKind::Hyperbola: return "hyperbola";
        case ConicKind::ParabolaOrDegenerate: return "parabola-or-degenerate";
    }
    return "?";
}

ConicClass classify_conic(const SymPoly& equation, Surface s) {
    const SymPoly A = coefficient(equation, {{Var::x, 2}, {Var::y, 0}});
    const SymPoly B = coefficient(equation, {{Var::x, 1}, {Var::y, 1}});
    const SymPoly C = coefficient(equation, {{Var::x, 0}, {Var::y, 2}});
    if (A.is_zero() && B.is_zero() && C.is_zero())
        throw std::domain_error("degenerate: the equation has no quadratic xy-part");
    SymPoly disc = B * B - 4 * A * C;
    SignCertificate cert = certify_sign(disc, s);
    ConicKind kind = ConicKind::ParabolaOrDegenerate;
    if (cert.uniform && cert.sign < 0) kind = ConicKind::Ellipse;
    if (cert.uniform && cert.sign > 0) kind = ConicKind::Hyperbola;
    return {kind, std::move(disc), std::move(cert)};
}

ConicClass classify_fixed_t_conic(const WallQuadric& wall) {
    return classify_conic(wall.equation, wall.surface());
}

std::string TangencyReport::describe() const {
    if (!on_conic) return "point is not on the conic";
    if (!on_line) return "point is not on the line";
    return tangent ? "tangent" : "not tangent";
}

namespace {

TangencyReport gradients_parallel(const SymPoly& f, const SymPoly& g, const Rational& px,
                                  const Rational& py) {
    const Bindings pt{{Var::x, px}, {Var::y, py}};
    TangencyReport r;
    r.on_conic = substitute(f, pt).is_zero();
    r.on_line = substitute(g, pt).is_zero();
    if (!r.on_conic || !r.on_line) return r;
    const SymPoly fx = substitute(derivative(f, Var::x), pt), fy = substitute(derivative(f, Var::y), pt);
    const SymPoly gx = substitute(derivative(g, Var::x), pt), gy = substitute(derivative(g, Var::y), pt);
    const bool f_regular = !(fx.is_zero() && fy.is_zero());
    const bool g_regular = !(gx.is_zero() && gy.is_zero());
    r.tangent = f_regular && g_regular && (fx * gy - fy * gx).is_zero();
    return r;
}

}  // namespace

TangencyReport tangency_check(const SymPoly& conic, const SymPoly& line, const Rational& px,
                              const Rational& py) {
    return gradients_parallel(conic, line, px, py);
}

TangencyReport conics_tangent(const SymPoly& first, const SymPoly& second, const Rational& px,
                              const Rational& py) {
    return gradients_parallel(first, second, px, py);
}

VerticalPlane plane_parallel_to_H(const AmpleClass& H, const Rational& u) { return {-H.b, H.a, -u}; }

std::string to_string(SectionKind k) {
    switch (k) {
        case SectionKind::SemiCircle: return "semicircle";
        case SectionKind::SemiEllipse: return "semi-ellipse";
        case SectionKind::Hyperbola: return "hyperbola";
        case SectionKind::Parabola: return "parabola";
        case SectionKind::VerticalLine: return "vertical-line";
        case SectionKind::Empty: return "empty";
    }
    return "?";
}

PlaneSection wall_in_vertical_plane(const WallQuadric& wall, const VerticalPlane& plane,
                                    const AmpleClass& H) {
    if (plane.alpha == 0 && plane.beta == 0) throw std::invalid_argument("degenerate plane");
    if (H.surface != wall.surface()) throw std::invalid_argument("surface mismatch");
    NSClass dir(-plane.beta, plane.alpha);
    if (dir(0) * H.b - dir(1) * H.a == 0) dir = H.as_class();
    const NSClass base = plane.beta != 0 ? NSClass(0, -plane.gamma / plane.beta)
                                         : NSClass(-plane.gamma / plane.alpha, 0);
    PlaneSection out{SectionKind::Empty, base, dir, restrict_to_line(wall, H, base, dir), 0, 0, 0};
    const Quadratic q = split_quadratic(out.restricted);
    if (q.A == 0) {
        if (q.C != 0) {
            out.kind = SectionKind::Parabola;
        } else if (q.L != 0) {
            out.kind = SectionKind::VerticalLine;
            out.center = -q.M / q.L;
        } else if (q.M == 0) {
            throw std::domain_error("restriction not conic (identically zero)");
        }
        return out;
    }
    out.center = -q.L / (2 * q.A);
    out.aspect = q.C / q.A;
    out.radius2 = out.center * out.center - q.M / q.A;
    if (out.aspect < 0) out.kind = SectionKind::Hyperbola;
    else if (out.aspect == 0) out.kind = SectionKind::Parabola;
    else if (out.radius2 <= 0) out.kind = SectionKind::Empty;
    else out.kind = out.aspect == 1 ? SectionKind::SemiCircle : SectionKind::SemiEllipse;
    return out;
}

std::optional<Rational> sections_cross(const PlaneSection& first, const PlaneSection& second) {
    for (const auto* s : {&first, &second})
        if (s->kind != SectionKind::SemiCircle && s->kind != SectionKind::VerticalLine &&
            s->kind != SectionKind::Empty)
            throw std::invalid_argument("sections_cross needs semicircles or vertical lines, got " +
                                        to_string(s->kind));
    if (first.base != second.base || first.direction != second.direction)
        throw std::invalid_argument("sections lie in different planes");
    if (first.kind == SectionKind::Empty || second.kind == SectionKind::Empty) return std::nullopt;
    if (first.kind == SectionKind::VerticalLine && second.kind == SectionKind::VerticalLine)
        return std::nullopt;
    if (first.kind == SectionKind::VerticalLine || second.kind == SectionKind::VerticalLine) {
        const auto& line = first.kind == SectionKind::VerticalLine ? first : second;
        const auto& circle = first.kind == SectionKind::VerticalLine ? second : first;
        const Rational d = line.center - circle.center;
        if (circle.radius2 - d * d > 0) return line.center;
        return std::nullopt;
    }
    if (first.center == second.center) return std::nullopt;
    const Rational& c1 = first.center;
    const Rational& c2 = second.center;
    const Rational s = (c1 + c2) / 2 + (first.radius2 - second.radius2) / (2 * (c2 - c1));
    const Rational d = s - c1;
    if (first.radius2 - d * d > 0) return s;
    return std::nullopt;
}

bool wall_crosses_slope_plane(const WallQuadric& wall, const Rational& mu, const AmpleClass& H) {
    if (H.surface != wall.surface()) throw std::invalid_argument("surface mismatch");
    const NSClass G = H.surface == Surface::P1xP1 ? NSClass(H.a, -H.b) : NSClass(H.a, H.a - H.b);
    const Quadratic q = split_quadratic(restrict_to_line(wall, H, mu * H.as_class(), G));
    if (q.C == 0) {
        if (q.A == 0) return q.L != 0 || q.M == 0;
        return q.L * q.L - 4 * q.A * q.M >= 0;
    }
    // need q(s) = -C t^2 for some t > 0, i.e. sign(C) q(s) < 0 somewhere
    const int sc = sign(q.C);
    return quadratic_takes_negative(sc * q.A, sc * q.L, sc * q.M);
}

}  // namespace bridgeland
