#pragma once

#include "bridgeland/charge.hpp"
#include "bridgeland/helix.hpp"
#include "bridgeland/walls.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bridgeland {

/// form > 0, or form >= 0 when strict is false.
struct HeartLineConstraint {
    std::string name;
    SymPoly form;
    bool strict = true;
};

struct WallSideConstraint {
    std::string name;
    WallQuadric wall;
    Side required = Side::Inside;
};

using RegionConstraint = std::variant<HeartLineConstraint, WallSideConstraint>;

struct RegionSpec {
    std::string id;  ///< "p1p1", "F'" or "F''"
    Surface surface;
    NSClass twist;
    ExcCollection dual;
    std::vector<RegionConstraint> constraints;
};

struct Membership {
    bool member = false;
    std::vector<std::string> failed;
};

Membership membership(const RegionSpec& region, const StabilityPoint& p);
bool contains(const RegionSpec& region, const StabilityPoint& p);

/// Strictly inside W(O, O(-2,-1)[1]) and W(O, O(-1,-2)[1]), twisted by O(p,q).
RegionSpec region_p1p1(const NSClass& twist);
/// Strictly inside W(O, O_E(E)) and W(O, O(-E-2F)[1]), twisted.
RegionSpec region_blp2_Fprime(const NSClass& twist);
/// Strictly inside W(O, O(-E-2F)[1]) and W(O_E(E), O(-E-2F)[1]), twisted, plus the heart lines
/// for O (strict) and O(-E-2F)[1] (weak).
RegionSpec region_blp2_Fdoubleprime(const NSClass& twist);

/// The dual collections the regions are built on, untwisted.
ExcCollection dual_Fprime_p1p1();
ExcCollection dual_Fprime_blp2();
ExcCollection dual_Fdoubleprime_blp2();

struct RotatabilityReport {
    bool satisfied = false;
    std::vector<std::string> failed;
};

/// Whether sigma can be rotated so that every object of F lies in the rotated heart. F is a dual
/// collection (F_n, ..., F_1) with shifts in {0, 1, 2}. Objects X[2] need X[1] in the heart and are
/// rotated; objects X need X in the heart and are kept; for X[1], X in the heart means X is rotated
/// and X[1] in the heart means X[1] is kept. Every kept object must have strictly larger slope than
/// every rotated one. Throws std::invalid_argument for other shifts or surfaces.
RotatabilityReport rotatability_conditions(const ExcCollection& F, const StabilityPoint& p);

enum class ScreenResult { Stable, Destabilized, Boundary };
std::string to_string(ScreenResult r);

/// On BlpP2, L is destabilized only by L(-E) and L[1] only by the quotient L(E)[1].
ScreenResult line_bundle_stability_screen_blp2(const NSClass& L, const StabilityPoint& p);

struct CoverageOptions {
    std::vector<Rational> t_schedule{Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16),
                                     Rational(1, 32)};
    bool use_Fdoubleprime = true;  ///< BlpP2 only
    bool allow_translation = true; ///< false restricts the search to the untwisted regions
};

struct CoverageWitness {
    Rational x;
    Rational y;
    std::optional<NSClass> twist;  ///< empty when the point is not covered
    std::string region;
    Rational t;
};

struct CoverageReport {
    Surface surface;
    Rational a;
    Rational b;
    Rational xmin, xmax, ymin, ymax, step;
    bool covered = true;
    std::vector<CoverageWitness> results;  ///< grid order: x ascending, then y ascending
    std::optional<CoverageWitness> first_failure;
};

/// Grid points xmin + i*step (and likewise for y) within the box. For each point the translates
/// O(p,q) with p within 1 of ceil(x) and q within 2 of ceil(y) are tried nearest first, F' before F'',
/// each over the t schedule in order. An empty box is trivially covered.
/// Throws std::invalid_argument if step <= 0 or (a, b) is not ample.
CoverageReport coverage_check(Surface s, const Rational& a, const Rational& b, const Rational& xmin,
                              const Rational& xmax, const Rational& ymin, const Rational& ymax,
                              const Rational& step, const CoverageOptions& options = {});

using DimensionVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using ThetaWeights = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Coordinates of v in the basis [F_1], ..., [F_n]. Throws std::domain_error("class not in integral
/// span") for a non-integral solution and std::invalid_argument if the classes are not a basis.
DimensionVector dimension_vector(const ChernCharacter& v, const ExcCollection& F);

/// theta_i = Im(conj(Z(v)) Z([F_i])). Throws std::domain_error if Z(v) = 0.
ThetaWeights king_weights(const ChernCharacter& v, const ExcCollection& F, const StabilityPoint& p);

Rational theta_pairing(const ThetaWeights& theta, const DimensionVector& d);

/// All d' with 0 <= d' <= d componentwise, d' != 0, d, and theta.d' > 0. A necessary condition
/// only: an empty result does not certify semistability. Throws std::invalid_argument for negative
/// entries or more than 10^6 candidates.
std::vector<DimensionVector> king_screen(const ThetaWeights& theta, const DimensionVector& d);

}  // namespace bridgeland
