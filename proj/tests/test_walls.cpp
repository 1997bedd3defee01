#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgeland/walls.hpp"
#include "fixtures.hpp"

#include <random>

using namespace bridgeland;
using namespace bridgeland::vars;
using namespace fixtures;

namespace {

SymPoly normalized(const char* text) { return normalize_primitive(parse_sympoly(text)); }

// Generic wall W(G, O_E(E)) for G = (r, dE E + dF F, c), written out by hand.
SymPoly generic_te_wall(const Rational& r, const Rational& dE, const Rational& dF, const Rational& c) {
    const SymPoly R(r), DE(dE), DF(dF), C(c);
    return t() * t() * R * a() * (b() - a()) * (2 * b() - a()) + (a() - b()) * R * x() * x() -
           2 * a() * R * x() * y() + 2 * a() * R * y() * y() + (2 * b() * DF + (b() - a()) * R) * x() +
           (R - 2 * DF) * a() * y() + 2 * a() * C + a() * DE - a() * DF - 2 * b() * C - b() * DE;
}

SymPoly translate(const SymPoly& p, const Rational& dx, const Rational& dy) {
    return compose(p, {{Var::x, x() + SymPoly(dx)}, {Var::y, y() + SymPoly(dy)}});
}

}  // namespace

TEST_CASE("P1xP1 ellipsoids") {
    const auto w1 = wall_quadric(O(P), -O(P, -2, -1));
    CHECK(w1.equation == normalized("t^2 a b (a + 2b) + 2a(y^2 + y) + b(x^2 + 2x)"));
    CHECK(to_string(w1.equation) == "t^2*a^2*b + 2*t^2*a*b^2 + x^2*b + 2*y^2*a + 2*x*b + 2*y*a");
    const auto w2 = wall_quadric(O(P), -O(P, -1, -2));
    CHECK(w2.equation == normalized("t^2 a b (2a + b) + a(y^2 + 2y) + 2b(x^2 + x)"));
    CHECK(xy_restriction(w1) == normalized("2a(y^2+y) + b(x^2+2x)"));
    CHECK(xy_restriction(w2) == normalized("a(y^2+2y) + 2b(x^2+x)"));
    for (const auto& [px, py] : {std::pair{0, 0}, std::pair{-2, -1}})
        CHECK(substitute(xy_restriction(w1), {{Var::x, px}, {Var::y, py}}).is_zero());
}

TEST_CASE("BlpP2 walls") {
    CHECK(wall_quadric(O(B), -O(B, -1, -2)).equation ==
          normalized("t^2(a(a+b)(2b-a)) + (3b-a)x^2 - 2axy + 2ay^2 + 3(b-a)x + 3ay"));
    CHECK(wall_quadric(O(B, -1, 0), O(B)).equation ==
          normalized("t^2(a(2b-a)(b-a)) + (a-b)x^2 - 2axy + 2ay^2 + (a-b)x - ay"));
    CHECK(wall_quadric(-O(B, -1, -1), T()).equation ==
          normalized("t^2(a(b-a)(2b-a)) + (a-b)x^2 - 2axy + 2ay^2 + (-a-b)x + 3ay + a"));
    CHECK(wall_quadric(O(B), T()).equation ==
          normalized("t^2 (a^3 - 3a^2b + 2ab^2) + (a-b)x^2 - 2axy + 2ay^2 + (b-a)x + ay"));
}

TEST_CASE("generic wall against O_E(E)") {
    const std::vector<ChernCharacter> subs = {O(B, -1, 0), O(B, 0, -1), G1(), O(B, -1, -1), O(B, 2, -3)};
    for (const auto& g : subs) {
        const auto formula = generic_te_wall(g.rank(), g.c1()(0), g.c1()(1), g.ch2());
        CHECK(wall_quadric(g, T()).equation == normalize_primitive(formula));
        const SymPoly twice = 2 * wall_cross_product(g, T());
        CHECK((twice == formula || twice == -formula));
    }
}

TEST_CASE("degenerate walls") {
    CHECK_THROWS_AS(wall_quadric(O(P), O(P)), std::domain_error);
    CHECK_THROWS_AS(wall_quadric(O(P), -O(P)), std::domain_error);
    CHECK_THROWS_AS(wall_quadric(O(P), O(B)), std::invalid_argument);
}

TEST_CASE("conic classification") {
    for (int r = 1; r <= 5; ++r) {
        const auto formula = generic_te_wall(r, -1, 2, 3);
        const auto cls = classify_conic(formula, B);
        CHECK(cls.kind == ConicKind::Hyperbola);
        CHECK(cls.discriminant == 4 * a() * SymPoly(r * r) * (2 * b() - a()));
        CHECK(cls.certificate.certified);
    }
    const auto ell = classify_fixed_t_conic(wall_quadric(O(B), -O(B, -1, -2)));
    CHECK(ell.kind == ConicKind::Ellipse);
    CHECK(ell.discriminant == 12 * a() * (a() - 2 * b()));
    CHECK(ell.certificate.certified);
    CHECK(ell.certificate.describe() == "12*a*(a-2*b) < 0 under b>a>0");
    const auto hyp = classify_fixed_t_conic(wall_quadric(O(B), T()));
    CHECK(hyp.kind == ConicKind::Hyperbola);
    CHECK(hyp.certificate.describe() == "4*a*(2*b-a) > 0 under b>a>0");
    for (const auto& w : {-O(P, -2, -1), -O(P, -1, -2)}) {
        const auto c = classify_fixed_t_conic(wall_quadric(O(P), w));
        CHECK(c.kind == ConicKind::Ellipse);
        CHECK(c.discriminant == -8 * a() * b());
        CHECK(c.certificate.describe() == "-8*a*b < 0 under a,b>0");
    }
    const ChernCharacter t1(P, 0, NSClass(1, 0), 0), t2(P, 0, NSClass(0, 1), 0);
    CHECK_THROWS_AS(classify_fixed_t_conic(wall_quadric(t1, t2)), std::domain_error);
}

TEST_CASE("sign certificates") {
    CHECK(certify_sign(a() * a() + b() * b(), P).certified == false);
    CHECK(certify_sign(a() * a() + b() * b(), P).sign == 1);
    CHECK_FALSE(certify_sign(a() - b(), P).uniform);
    CHECK(certify_sign(a() - b(), B).sign == -1);
    CHECK(certify_sign(a() - b(), B).describe() == "-(b-a) < 0 under b>a>0");
    CHECK(certify_sign(3 * b() - a(), B).sign == 1);
    CHECK(certify_sign(3 * b() - a(), B).describe() == "-a + 3*b > 0 under b>a>0 (sampled, not certified)");
    CHECK(certify_sign(SymPoly(-3), B).describe() == "-3 < 0 under b>a>0");
    CHECK_THROWS(certify_sign(x(), B));
}

TEST_CASE("point sides follow slope comparison") {
    const auto w1 = wall_quadric(O(P), -O(P, -2, -1));
    CHECK(point_sign(w1, make_point(P, 2, 1, -1, Rational(-1, 2), Rational(1, 10))) == Side::Inside);
    CHECK(point_sign(w1, make_point(P, 2, 1, 10, 10, 1)) == Side::Outside);
    CHECK(point_sign(w1, make_point(P, 2, 1, 0, 0, Rational(1, 1000000))) == Side::Outside);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> n(-20, 20), d(1, 8), pos(1, 16);
    for (Surface s : {P, B})
        for (int i = 0; i < 300; ++i) {
            const auto v = random_class(s, rng), w = random_class(s, rng);
            if (wall_cross_product(v, w).is_zero()) continue;
            const auto wall = wall_quadric(v, w);
            Rational av(pos(rng), d(rng)), bv = av + Rational(pos(rng), d(rng));
            const auto p = make_point(s, av, bv, Rational(n(rng), d(rng)), Rational(n(rng), d(rng)),
                                      Rational(pos(rng), d(rng)));
            const auto zv = central_charge(v, p), zw = central_charge(w, p);
            if ((zv.re == 0 && zv.im == 0) || (zw.re == 0 && zw.im == 0)) {
                CHECK_THROWS_AS(point_sign(wall, p), std::domain_error);
                continue;
            }
            const int expected = compare_slopes(zv, zw);
            const Side side = point_sign(wall, p);
            CHECK(side == (expected > 0 ? Side::Inside : expected == 0 ? Side::On : Side::Outside));
        }
}

TEST_CASE("tangency and incidence") {
    const SymPoly e1 = xy_restriction(wall_quadric(O(P), -O(P, -2, -1)));
    const SymPoly e2 = xy_restriction(wall_quadric(O(P), -O(P, -1, -2)));
    CHECK(tangency_check(e1, a() * y() + b() * x(), 0, 0).tangent);
    CHECK(tangency_check(e2, a() * y() + b() * x(), 0, 0).tangent);
    CHECK(tangency_check(e1, a() * (y() + 1) + b() * (x() + 2), -2, -1).tangent);
    CHECK(tangency_check(e2, a() * (y() + 2) + b() * (x() + 1), -1, -2).tangent);
    CHECK(tangency_check(x() * x() + y() * y() - 1, y() - 1, 0, 1).tangent);
    CHECK_FALSE(tangency_check(e1, a() * y() - b() * x(), 0, 0).tangent);
    const auto off = tangency_check(e1, a() * y() + b() * x(), 1, 1);
    CHECK_FALSE(off.on_conic);
    CHECK(off.describe() == "point is not on the conic");

    const SymPoly ellipse = xy_restriction(wall_quadric(O(B), -O(B, -1, -2)));
    const SymPoly hyp_oe = xy_restriction(wall_quadric(O(B), T()));
    const SymPoly hyp_eff = xy_restriction(wall_quadric(-O(B, -1, -1), T()));
    const SymPoly hyp_e = xy_restriction(wall_quadric(O(B, -1, 0), O(B)));
    const SymPoly hyp_down = xy_restriction(wall_quadric(-O(B, -1, -2), -O(B, 0, -2)));
    CHECK(tangency_check(hyp_eff, a() * (y() + 1) + (b() - a()) * (x() + 1), -1, -1).tangent);
    CHECK(conics_tangent(hyp_e, ellipse, -1, Rational(-1, 2)).tangent);
    CHECK(conics_tangent(hyp_down, ellipse, 0, Rational(-3, 2)).tangent);
    CHECK(tangency_check(ellipse, a() * y() + (b() - a()) * x(), 0, 0).tangent);
    CHECK(tangency_check(hyp_oe, a() * y() + (b() - a()) * x(), 0, 0).tangent);
    CHECK(tangency_check(ellipse, a() * (y() + 2) + (b() - a()) * (x() + 1), -1, -2).tangent);
    for (const auto* c : {&hyp_oe, &hyp_eff})
        CHECK(substitute(*c, {{Var::x, 0}, {Var::y, Rational(-1, 2)}}).is_zero());
    // (-1,-2) lies on this hyperbola only when b = 2a, i.e. H = E + 2F
    CHECK(substitute(hyp_oe, {{Var::x, -1}, {Var::y, -2}}) == normalize_primitive(2 * a() - b()) * SymPoly(2));
    CHECK(evaluate(hyp_oe, {{Var::x, -1}, {Var::y, -2}, {Var::a, 1}, {Var::b, 2}}) == 0);
}

TEST_CASE("translation and coincidence identities") {
    const SymPoly base = wall_quadric(O(B, -1, 0), O(B)).equation;
    CHECK(wall_quadric(-O(B, -1, -2), -O(B, 0, -2)).equation == normalize_primitive(translate(base, 0, 2)));
    CHECK(wall_quadric(O(B, -2, -1), O(B, -1, -1)).equation == normalize_primitive(translate(base, 1, 1)));
    CHECK(wall_quadric(-O(B, -1, -1), -O(B, 0, -1)).equation == wall_quadric(-O(B, -1, -1), T()).equation);
}

TEST_CASE("wall symmetries") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> l(-3, 3);
    for (Surface s : {P, B})
        for (int i = 0; i < 100; ++i) {
            const auto v = random_class(s, rng), w = random_class(s, rng);
            if (wall_cross_product(v, w).is_zero()) continue;
            const auto wall = wall_quadric(v, w);
            const NSClass L(l(rng), l(rng));
            const auto twisted = wall_quadric(twist_by_line_bundle(v, L), twist_by_line_bundle(w, L));
            CHECK(twisted.equation == normalize_primitive(translate(wall.equation, -L(0), -L(1))));
            CHECK(wall_quadric(w, v).equation == wall.equation);
            CHECK(wall_quadric(-v, w).equation == wall.equation);
            CHECK(wall_quadric(v, -w).equation == wall.equation);
            CHECK(wall_quadric(w, v).orientation == -wall.orientation);
            CHECK(wall.equation.degree(Var::t) <= 2);
        }
}

TEST_CASE("vertical planes") {
    const auto ell = wall_quadric(O(P), -O(P, -2, -1));
    const auto H11 = make_ample(P, 1, 1);
    const auto sec = wall_in_vertical_plane(ell, {1, -1, 0}, H11);
    CHECK(sec.kind == SectionKind::SemiCircle);
    CHECK(sec.radius2 > 0);
    CHECK(sec.direction == H11.as_class());
    // the section has no s*t term, so its center sits on t = 0
    CHECK(coefficient(sec.restricted, {{Var::x, 1}, {Var::t, 1}}).is_zero());
    CHECK(wall_in_vertical_plane(ell, {1, 1, -10}, H11).kind == SectionKind::Empty);
    const auto flat = wall_quadric(O(P), ChernCharacter(P, 2, NSClass(0, 0), -1));
    const auto line = wall_in_vertical_plane(flat, plane_parallel_to_H(H11, 3), H11);
    CHECK(line.kind == SectionKind::VerticalLine);
    const auto H = make_ample(B, 1, 2);
    CHECK(wall_in_vertical_plane(wall_quadric(O(B), T()), plane_parallel_to_H(H, 0), H).kind ==
          SectionKind::SemiCircle);
    CHECK_THROWS_AS(wall_in_vertical_plane(ell, {0, 0, 1}, H11), std::invalid_argument);
}

TEST_CASE("section crossings") {
    const auto H = make_ample(P, 1, 1);
    const auto plane = plane_parallel_to_H(H, 0);
    const ChernCharacter v = O(P, 1, 0);
    const auto s1 = wall_in_vertical_plane(wall_quadric(v, -O(P, -2, -1)), plane, H);
    const auto s2 = wall_in_vertical_plane(wall_quadric(v, O(P, -5, -5)), plane, H);
    if (s1.kind == SectionKind::SemiCircle && s2.kind == SectionKind::SemiCircle) CHECK_FALSE(sections_cross(s1, s2));
    PlaneSection c1{SectionKind::SemiCircle, NSClass(0, 0), NSClass(1, 1), SymPoly(), 0, 4, 1};
    PlaneSection c2{SectionKind::SemiCircle, NSClass(0, 0), NSClass(1, 1), SymPoly(), 2, 4, 1};
    PlaneSection l1{SectionKind::VerticalLine, NSClass(0, 0), NSClass(1, 1), SymPoly(), 1, 0, 0};
    CHECK(sections_cross(c1, c2) == Rational(1));
    CHECK(sections_cross(c1, l1) == Rational(1));
    c2.center = 5;
    CHECK_FALSE(sections_cross(c1, c2));
}

TEST_CASE("nested walls in planes parallel to H") {
    std::mt19937 rng(47);
    for (Surface s : {P, B}) {
        const auto H = s == P ? make_ample(P, 2, 1) : make_ample(B, 1, 2);
        const ChernCharacter v = s == P ? ChernCharacter(P, 2, NSClass(1, 0), -1) : ChernCharacter(B, 2, NSClass(0, 1), -1);
        REQUIRE(bogomolov_discriminant(v) >= 0);
        for (const Rational u : {Rational(-1), Rational(0), Rational(1, 2)}) {
            const auto plane = plane_parallel_to_H(H, u);
            std::vector<PlaneSection> sections;
            while (sections.size() < 20) {
                const auto w = random_class(s, rng);
                if (wall_cross_product(v, w).is_zero()) continue;
                const auto sec = wall_in_vertical_plane(wall_quadric(v, w), plane, H);
                CHECK((sec.kind == SectionKind::SemiCircle || sec.kind == SectionKind::VerticalLine ||
                       sec.kind == SectionKind::Empty));
                CHECK(coefficient(sec.restricted, {{Var::x, 1}, {Var::t, 1}}).is_zero());
                sections.push_back(sec);
            }
            for (std::size_t i = 0; i < sections.size(); ++i)
                for (std::size_t j = i + 1; j < sections.size(); ++j) CHECK_FALSE(sections_cross(sections[i], sections[j]));
        }
    }
}

TEST_CASE("crossing the slope plane") {
    const auto ell = wall_quadric(O(P), -O(P, -2, -1));
    const auto H = make_ample(P, 2, 1);
    CHECK_FALSE(wall_crosses_slope_plane(ell, 1000, H));
    CHECK_FALSE(wall_crosses_slope_plane(ell, 0, H));
    CHECK(wall_crosses_slope_plane(ell, Rational(-1, 2), H));
    const auto HB = make_ample(B, 1, 2);
    const NSClass hb = HB.as_class();
    const auto mu = [&](const ChernCharacter& g) {
        return intersect(g.c1(), hb, B) / (g.rank() * intersect(hb, hb, B));
    };
    // a line bundle's wall against O_E(E) touches its own slope plane only at t = 0
    for (const auto& L : {O(B, -1, 0), O(B, 0, -1), O(B, -1, -1), O(B)})
        CHECK_FALSE(wall_crosses_slope_plane(wall_quadric(L, T()), mu(L), HB));
    // for G = L1 + L2 the wall meets the plane of L1 or of L2
    const auto L1 = O(B, -2, -2), L2 = O(B, -1, -1), L3 = O(B, -2, -1);
    const auto w12 = wall_quadric(L1 + L2, T());
    CHECK(wall_crosses_slope_plane(w12, mu(L1), HB));
    CHECK(wall_crosses_slope_plane(w12, mu(L2), HB));
    const auto w13 = wall_quadric(L1 + L3, T());
    CHECK(wall_crosses_slope_plane(w13, mu(L1), HB));
    CHECK_FALSE(wall_crosses_slope_plane(w13, mu(L3), HB));
}
