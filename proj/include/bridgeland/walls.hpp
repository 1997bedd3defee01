#pragma once

#include "bridgeland/charge.hpp"
#include "bridgeland/lattice.hpp"
#include "bridgeland/sympoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bridgeland {

/// The numerical wall W(v, w) = {beta(v) = beta(w)} as a primitive integer quadric in
/// x, y, t with coefficients in a, b. Shifted objects enter with negated classes.
struct WallQuadric {
    ChernCharacter v;
    ChernCharacter w;
    SymPoly equation;
    int orientation = 1;  ///< orientation * equation > 0  <=>  beta(v) > beta(w)

    Surface surface() const { return v.surface(); }
};

/// (Re Z_w Im Z_v - Re Z_v Im Z_w) / t, before normalization.
SymPoly wall_cross_product(const ChernCharacter& v, const ChernCharacter& w);

/// Throws std::invalid_argument for classes on different surfaces and
/// std::domain_error("proportional classes: wall is everywhere/nowhere") when the cross product vanishes.
WallQuadric wall_quadric(const ChernCharacter& v, const ChernCharacter& w);

/// equation with t = 0.
SymPoly xy_restriction(const WallQuadric& wall);

enum class Side { Inside, On, Outside };

std::string to_string(Side s);

/// Inside iff beta(v) > beta(w) at p. Throws std::domain_error if Z(v) or Z(w) vanishes at p.
Side point_sign(const WallQuadric& wall, const StabilityPoint& p);

/// Sign of a polynomial in a, b over the ample cone of a surface.
struct SignCertificate {
    int sign = 0;             ///< -1, 0, +1; 0 with uniform == false means the sign varies
    bool uniform = true;
    bool certified = false;   ///< true when proved by the factor table
    Surface surface = Surface::P1xP1;
    SymPoly poly;
    Rational constant;        ///< poly = constant * product(factors) when certified
    std::vector<std::string> factors;

    /// e.g. "12*a*(a-2*b) < 0 under b>a>0" or "... (sampled, not certified)".
    std::string describe() const;
};

/// Divides out the factors a, b, b-a, 2b-a, a-2b, a+b, a+2b, 2a+b whose sign is fixed on the
/// ample cone. If a non-constant cofactor remains, samples a rational grid of the cone instead.
/// Throws std::invalid_argument if p involves x, y or t.
SignCertificate certify_sign(const SymPoly& p, Surface s);

enum class ConicKind { Ellipse, Hyperbola, ParabolaOrDegenerate };

std::string to_string(ConicKind k);

struct ConicClass {
    ConicKind kind;
    SymPoly discriminant;  ///< B^2 - 4AC of the quadratic xy-part
    SignCertificate certificate;
};

/// Classifies the fixed-t slices. Throws std::domain_error("degenerate: ...") when the
/// equation has no quadratic part in x, y.
ConicClass classify_conic(const SymPoly& equation, Surface s);
ConicClass classify_fixed_t_conic(const WallQuadric& wall);

struct TangencyReport {
    bool on_conic = false;
    bool on_line = false;
    bool tangent = false;  ///< only set when the point lies on both

    std::string describe() const;
};

/// Whether the line is tangent to the conic at (px, py) identically in a, b: the conic's gradient
/// there is a nonzero multiple of the line's normal.
TangencyReport tangency_check(const SymPoly& conic, const SymPoly& line, const Rational& px,
                              const Rational& py);

/// Tangency of two conics at a common point: compares gradients.
TangencyReport conics_tangent(const SymPoly& first, const SymPoly& second, const Rational& px,
                              const Rational& py);

/// alpha*x + beta*y + gamma = 0 in the (x, y) plane, extended vertically in t.
struct VerticalPlane {
    Rational alpha;
    Rational beta;
    Rational gamma;
};

/// Planes a*y - b*x = u, the family parallel to H.
VerticalPlane plane_parallel_to_H(const AmpleClass& H, const Rational& u);

enum class SectionKind { SemiCircle, SemiEllipse, Hyperbola, Parabola, VerticalLine, Empty };

std::string to_string(SectionKind k);

/// The wall restricted to a vertical plane, written A s^2 + C t^2 + L s + M = 0 in the
/// coordinate D = base + s * direction. For planes parallel to H the direction is H itself.
struct PlaneSection {
    SectionKind kind;
    NSClass base;
    NSClass direction;
    SymPoly restricted;    ///< in x (standing for s) and t
    Rational center;       ///< s0, for circles, ellipses, hyperbolas and vertical lines
    Rational radius2;      ///< (s - s0)^2 + aspect t^2 = radius2
    Rational aspect;       ///< C / A
};

/// Throws std::domain_error if the restriction vanishes identically, std::invalid_argument if
/// the plane is degenerate.
PlaneSection wall_in_vertical_plane(const WallQuadric& wall, const VerticalPlane& plane,
                                    const AmpleClass& H);

/// For semicircles and vertical lines: the s-coordinate of a crossing with t > 0, if any.
/// Coincident curves do not count as crossing. Throws std::invalid_argument for other kinds.
std::optional<Rational> sections_cross(const PlaneSection& first, const PlaneSection& second);

/// Whether the wall meets {D.H / H^2 = mu} at some point with t > 0.
bool wall_crosses_slope_plane(const WallQuadric& wall, const Rational& mu, const AmpleClass& H);

}  // namespace bridgeland
