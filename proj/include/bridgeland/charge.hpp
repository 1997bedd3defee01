#pragma once

#include "bridgeland/lattice.hpp"
#include "bridgeland/sympoly.hpp"

#include <string>
#include <utility>

namespace bridgeland {

/// sigma_{D,H} with D = x*B1 + y*B2 and the ample class scaled to tH.
struct StabilityPoint {
    AmpleClass H;
    Rational x;
    Rational y;
    Rational t;

    Surface surface() const { return H.surface; }
};

/// Throws std::invalid_argument unless t > 0 and (a, b) is ample.
StabilityPoint make_point(Surface s, const Rational& a, const Rational& b, const Rational& x,
                          const Rational& y, const Rational& t);

/// {x, y, t, a, b} -> values of the point.
Bindings bindings(const StabilityPoint& p);

struct ChargeValue {
    Rational re;
    Rational im;

    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

struct SymbolicCharge {
    SymPoly re;
    SymPoly im;

    friend bool operator==(const SymbolicCharge&, const SymbolicCharge&) = default;
};

/// Re Z = -ch2 + c1.D - r/2 (D^2 - t^2 H^2),  Im Z = t (c1.H - r D.H).
SymbolicCharge central_charge_symbolic(const ChernCharacter& v);
ChargeValue central_charge(const ChernCharacter& v, const StabilityPoint& p);
ChargeValue evaluate(const SymbolicCharge& z, const Bindings& b);

/// c1.H - r D.H as a polynomial in x, y, a, b. Im Z = t * heart_form.
SymPoly heart_form(const ChernCharacter& v);

/// beta = -Re/Im, with +infinity when Im = 0.
struct Slope {
    bool infinite = false;
    Rational value;

    friend bool operator==(const Slope&, const Slope&) = default;
};

std::string to_string(const Slope& s);

/// Throws std::domain_error("class has vanishing charge here") if z = 0.
Slope bridgeland_slope(const ChargeValue& z);
Slope bridgeland_slope(const ChernCharacter& v, const StabilityPoint& p);

/// Im z > 0, or Im z = 0 and Re z < 0.
bool in_heart_halfplane(const ChargeValue& z);

/// Sign of beta(u) - beta(v), computed as sign(Re v Im u - Re u Im v).
/// Meaningful when both charges lie in the heart half-plane.
int compare_slopes(const ChargeValue& u, const ChargeValue& v);

enum class HeartSide { Sheaf, Shifted };

std::string to_string(HeartSide s);

/// Heart side of a mu_H-stable sheaf of class v: Sheaf iff c1.H - r D.H > 0.
/// Rank-0 classes are torsion and always Sheaf. Throws for negative rank.
HeartSide heart_side(const ChernCharacter& v, const StabilityPoint& p);
HeartSide heart_side_line_bundle(const NSClass& L, const StabilityPoint& p);

/// Z[1/2] = e^{-i pi/2} Z. Throws unless phi = 1/2; other angles are handled by
/// RotationDirection because their rotations are not rational.
ChargeValue rotate_charge(const ChargeValue& z, const Rational& phi);
SymbolicCharge rotate_charge(const SymbolicCharge& z, const Rational& phi);

/// The ray e^{i pi phi} for 0 < phi < 1, stored as a rational direction (c, s) with s > 0 or
/// (c, s) = (0, 1).
class RotationDirection {
public:
    /// phi in (0, 1/2) has tan > 0, phi in (1/2, 1) has tan < 0.
    static RotationDirection from_tan(const Rational& tan_pi_phi);
    static RotationDirection quarter_turn();

    const Rational& c() const { return c_; }
    const Rational& s() const { return s_; }

private:
    RotationDirection(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {}
    Rational c_;
    Rational s_;
};

/// arg(z)/pi > phi, for z in the heart half-plane. Throws std::invalid_argument otherwise.
bool kept_unshifted(const ChargeValue& z, const RotationDirection& phi);

}  // namespace bridgeland
