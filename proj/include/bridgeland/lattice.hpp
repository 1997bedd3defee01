#pragma once

#include "bridgeland/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <type_traits>

namespace bridgeland {

/// The two Del Pezzo surfaces of Picard rank 2.
///   P1xP1: NS basis (D1, D2), D1^2 = D2^2 = 0, D1.D2 = 1, K = -2D1 - 2D2.
///   BlpP2: NS basis (E, F),   E^2 = -1, F^2 = 0, E.F = 1,  K = -2E - 3F.
enum class Surface { P1xP1, BlpP2 };

std::string surface_name(Surface s);  // "p1xp1" / "blp2"
Surface parse_surface(std::string_view name);

template <typename Scalar>
using NSVector = Eigen::Matrix<Scalar, 2, 1>;
using NSClass = NSVector<Rational>;

/// (rank, c1 in the NS basis, ch2) as one column.
using KVector = Eigen::Matrix<Rational, 4, 1>;

/// Intersection matrix of the NS basis.
template <typename Scalar = Rational>
Eigen::Matrix<Scalar, 2, 2> intersection_matrix(Surface s) {
    Eigen::Matrix<Scalar, 2, 2> m;
    if (s == Surface::P1xP1) {
        m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
    } else {
        m << Scalar(-1), Scalar(1), Scalar(1), Scalar(0);
    }
    return m;
}

/// u.v under the surface's intersection form, for any pair of 2-vectors
/// indexable by [] (Eigen vectors, std::array of polynomials, ...).
template <typename Vec>
auto intersect_form(Surface s, const Vec& u, const Vec& v) {
    using Scalar = std::decay_t<decltype(u[0] * v[0])>;
    const auto m = intersection_matrix<Rational>(s);
    Scalar out = Scalar(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (m(i, j) != 0) out = out + Scalar(m(i, j)) * u[i] * v[j];
    return out;
}

NSClass canonical_class(Surface s);

/// Reference ample class used to orient rank-0 classes: D1+D2 resp. E+2F.
NSClass reference_ample(Surface s);

/// A class in the numerical Grothendieck group: rank, c1, ch2.
/// Rank is integral; c1 and ch2 may be any rationals.
class ChernCharacter {
public:
    ChernCharacter(Surface surface, const Rational& rank, const NSClass& c1, const Rational& ch2);
    ChernCharacter(Surface surface, const KVector& v);

    static ChernCharacter zero(Surface s);
    /// ch(O(L)) = (1, L, L^2/2).
    static ChernCharacter line_bundle(Surface s, const NSClass& c1);

    Surface surface() const { return surface_; }
    const KVector& vector() const { return v_; }
    const Rational& rank() const { return v_(0); }
    NSClass c1() const { return v_.segment<2>(1); }
    const Rational& ch2() const { return v_(3); }

    bool is_zero() const { return v_.isZero(); }

    ChernCharacter& operator+=(const ChernCharacter& rhs);
    ChernCharacter& operator-=(const ChernCharacter& rhs);
    friend ChernCharacter operator+(ChernCharacter lhs, const ChernCharacter& rhs) { return lhs += rhs; }
    friend ChernCharacter operator-(ChernCharacter lhs, const ChernCharacter& rhs) { return lhs -= rhs; }
    friend ChernCharacter operator-(const ChernCharacter& v) { return ChernCharacter(v.surface_, KVector(-v.v_)); }
    friend ChernCharacter operator*(const Integer& n, const ChernCharacter& v) {
        return ChernCharacter(v.surface_, KVector(v.v_ * Rational(n)));
    }
    friend bool operator==(const ChernCharacter& lhs, const ChernCharacter& rhs) {
        return lhs.surface_ == rhs.surface_ && lhs.v_ == rhs.v_;
    }
    friend bool operator!=(const ChernCharacter& lhs, const ChernCharacter& rhs) { return !(lhs == rhs); }

private:
    Surface surface_;
    KVector v_;
};

/// "(r, (p, q), ch2)"
std::string to_string(const ChernCharacter& v);

/// H = a*D1 + b*D2 (P1xP1, ample iff a, b > 0) or H = a*E + b*F (BlpP2, ample iff b > a > 0).
struct AmpleClass {
    Surface surface;
    Rational a;
    Rational b;

    NSClass as_class() const { return NSClass(a, b); }
};

bool is_ample(Surface s, const Rational& a, const Rational& b);
/// Throws std::invalid_argument if (a, b) is not ample on s.
AmpleClass make_ample(Surface s, const Rational& a, const Rational& b);

Rational intersect(const NSClass& u, const NSClass& v, Surface s);

/// d = -K.c1
Rational degree(const ChernCharacter& v);

/// chi(A, B) = rA rB + (rA dB - rB dA)/2 + rB ch2(A) + rA ch2(B) - c1(A).c1(B)
Rational euler_pairing(const ChernCharacter& A, const ChernCharacter& B);

/// v * exp(L). L must have integer coordinates.
ChernCharacter twist_by_line_bundle(const ChernCharacter& v, const NSClass& L);

/// v * exp(K).
ChernCharacter serre_twist(const ChernCharacter& v);

/// c1^2 - 2 r ch2. The Bogomolov inequality is bogomolov_discriminant(v) >= 0.
Rational bogomolov_discriminant(const ChernCharacter& v);

/// True when rank and c1 are integral and ch2 is in (1/2)Z.
bool has_sheaf_integrality(const ChernCharacter& v);

}  // namespace bridgeland
