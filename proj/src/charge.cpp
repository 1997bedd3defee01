#include "bridgeland/charge.hpp"

#include <array>
#include <stdexcept>

namespace bridgeland {

namespace {

using PolyVec = std::array<SymPoly, 2>;

PolyVec to_poly(const NSClass& c) { return {SymPoly(c(0)), SymPoly(c(1))}; }

void require_surface(const ChernCharacter& v, const StabilityPoint& p) {
    if (v.surface() != p.surface())
        throw std::invalid_argument("surface mismatch: class on " + surface_name(v.surface()) +
                                    ", point on " + surface_name(p.surface()));
}

}  // namespace

StabilityPoint make_point(Surface s, const Rational& a, const Rational& b, const Rational& x,
                          const Rational& y, const Rational& t) {
    if (t <= 0) throw std::invalid_argument("t must be positive, got " + to_string(t));
    return {make_ample(s, a, b), x, y, t};
}

Bindings bindings(const StabilityPoint& p) {
    return {{Var::x, p.x}, {Var::y, p.y}, {Var::t, p.t}, {Var::a, p.H.a}, {Var::b, p.H.b}};
}

SymPoly heart_form(const ChernCharacter& v) {
    using namespace vars;
    const Surface s = v.surface();
    const PolyVec D{x(), y()}, H{a(), b()};
    return intersect_form(s, to_poly(v.c1()), H) - SymPoly(v.rank()) * intersect_form(s, D, H);
}

SymbolicCharge central_charge_symbolic(const ChernCharacter& v) {
    using namespace vars;
    const Surface s = v.surface();
    const PolyVec D{x(), y()}, H{a(), b()};
    const SymPoly t2 = t() * t();
    SymPoly re = SymPoly(-v.ch2()) + intersect_form(s, to_poly(v.c1()), D) -
                 SymPoly(v.rank() / 2) * (intersect_form(s, D, D) - t2 * intersect_form(s, H, H));
    return {std::move(re), t() * heart_form(v)};
}

ChargeValue central_charge(const ChernCharacter& v, const StabilityPoint& p) {
    require_surface(v, p);
    const Surface s = v.surface();
    const NSClass D(p.x, p.y), H(p.H.a, p.H.b);
    const Rational& r = v.rank();
    const Rational re =
        -v.ch2() + intersect(v.c1(), D, s) - r / 2 * (intersect(D, D, s) - p.t * p.t * intersect(H, H, s));
    const Rational im = p.t * (intersect(v.c1(), H, s) - r * intersect(D, H, s));
    return {re, im};
}

ChargeValue evaluate(const SymbolicCharge& z, const Bindings& b) {
    return {evaluate(z.re, b), evaluate(z.im, b)};
}

std::string to_string(const Slope& s) { return s.infinite ? "+inf" : to_string(s.value); }

Slope bridgeland_slope(const ChargeValue& z) {
    if (z.re == 0 && z.im == 0) throw std::domain_error("class has vanishing charge here");
    if (z.im == 0) return {true, Rational(0)};
    return {false, -z.re / z.im};
}

Slope bridgeland_slope(const ChernCharacter& v, const StabilityPoint& p) {
    return bridgeland_slope(central_charge(v, p));
}

bool in_heart_halfplane(const ChargeValue& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }

int compare_slopes(const ChargeValue& u, const ChargeValue& v) {
    return sign(v.re * u.im - u.re * v.im);
}

std::string to_string(HeartSide s) { return s == HeartSide::Sheaf ? "sheaf" : "shifted"; }

HeartSide heart_side(const ChernCharacter& v, const StabilityPoint& p) {
    require_surface(v, p);
    if (v.rank() < 0) throw std::invalid_argument("heart side needs a sheaf class (rank >= 0)");
    if (v.rank() == 0) return HeartSide::Sheaf;
    const Surface s = v.surface();
    const NSClass D(p.x, p.y), H(p.H.a, p.H.b);
    return intersect(v.c1(), H, s) - v.rank() * intersect(D, H, s) > 0 ? HeartSide::Sheaf
                                                                         : HeartSide::Shifted;
}

HeartSide heart_side_line_bundle(const NSClass& L, const StabilityPoint& p) {
    return heart_side(ChernCharacter::line_bundle(p.surface(), L), p);
}

namespace {

void require_quarter_turn(const Rational& phi) {
    if (phi <= 0 || phi >= 1) throw std::invalid_argument("rotation angle must lie in (0, 1)");
    if (phi != Rational(1, 2))
        throw std::invalid_argument("only phi = 1/2 has an exact rotation; use RotationDirection");
}

}  // namespace

ChargeValue rotate_charge(const ChargeValue& z, const Rational& phi) {
    require_quarter_turn(phi);
    return {z.im, -z.re};
}

SymbolicCharge rotate_charge(const SymbolicCharge& z, const Rational& phi) {
    require_quarter_turn(phi);
    return {z.im, -z.re};
}

RotationDirection RotationDirection::from_tan(const Rational& tan_pi_phi) {
    if (tan_pi_phi == 0) throw std::invalid_argument("tan(pi phi) = 0 means phi is not in (0, 1)");
    if (tan_pi_phi > 0) return {Rational(1), tan_pi_phi};
    return {Rational(-1), -tan_pi_phi};
}

RotationDirection RotationDirection::quarter_turn() { return {Rational(0), Rational(1)}; }

bool kept_unshifted(const ChargeValue& z, const RotationDirection& phi) {
    if (!in_heart_halfplane(z)) throw std::invalid_argument("charge is not in the heart half-plane");
    return phi.c() * z.im - phi.s() * z.re > 0;
}

}  // namespace bridgeland
