#include "bridgeland/lattice.hpp"

#include <stdexcept>

namespace bridgeland {

namespace {

void require_same_surface(const ChernCharacter& u, const ChernCharacter& v) {
    if (u.surface() != v.surface())
        throw std::invalid_argument("surface mismatch: " + surface_name(u.surface()) + " vs " +
                                    surface_name(v.surface()));
}

}  // namespace

std::string surface_name(Surface s) { return s == Surface::P1xP1 ? "p1xp1" : "blp2"; }

Surface parse_surface(std::string_view name) {
    if (name == "p1xp1" || name == "P1xP1") return Surface::P1xP1;
    if (name == "blp2" || name == "BlpP2") return Surface::BlpP2;
    throw std::invalid_argument("unknown surface '" + std::string(name) + "' (expected p1xp1 or blp2)");
}

NSClass canonical_class(Surface s) {
    return s == Surface::P1xP1 ? NSClass(-2, -2) : NSClass(-2, -3);
}

NSClass reference_ample(Surface s) { return s == Surface::P1xP1 ? NSClass(1, 1) : NSClass(1, 2); }

ChernCharacter::ChernCharacter(Surface surface, const Rational& rank, const NSClass& c1,
                               const Rational& ch2)
    : surface_(surface) {
    if (!is_integer(rank)) throw std::invalid_argument("rank must be an integer, got " + to_string(rank));
    v_ << rank, c1(0), c1(1), ch2;
}

ChernCharacter::ChernCharacter(Surface surface, const KVector& v) : surface_(surface), v_(v) {
    if (!is_integer(v(0))) throw std::invalid_argument("rank must be an integer, got " + to_string(v(0)));
}

ChernCharacter ChernCharacter::zero(Surface s) { return ChernCharacter(s, KVector::Zero()); }

ChernCharacter ChernCharacter::line_bundle(Surface s, const NSClass& c1) {
    return ChernCharacter(s, 1, c1, intersect(c1, c1, s) / 2);
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& rhs) {
    require_same_surface(*this, rhs);
    v_ += rhs.v_;
    return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& rhs) {
    require_same_surface(*this, rhs);
    v_ -= rhs.v_;
    return *this;
}

std::string to_string(const ChernCharacter& v) {
    return "(" + to_string(v.rank()) + ", (" + to_string(v.c1()(0)) + ", " + to_string(v.c1()(1)) +
           "), " + to_string(v.ch2()) + ")";
}

bool is_ample(Surface s, const Rational& a, const Rational& b) {
    if (s == Surface::P1xP1) return a > 0 && b > 0;
    return b > a && a > 0;
}

AmpleClass make_ample(Surface s, const Rational& a, const Rational& b) {
    if (!is_ample(s, a, b))
        throw std::invalid_argument("H = (" + to_string(a) + ", " + to_string(b) + ") is not ample on " +
                                    surface_name(s) +
                                    (s == Surface::P1xP1 ? " (need a, b > 0)" : " (need b > a > 0)"));
    return {s, a, b};
}

Rational intersect(const NSClass& u, const NSClass& v, Surface s) {
    return (u.transpose() * intersection_matrix(s) * v)(0, 0);
}

Rational degree(const ChernCharacter& v) {
    return -intersect(canonical_class(v.surface()), v.c1(), v.surface());
}

Rational euler_pairing(const ChernCharacter& A, const ChernCharacter& B) {
    require_same_surface(A, B);
    const Rational& rA = A.rank();
    const Rational& rB = B.rank();
    return rA * rB + (rA * degree(B) - rB * degree(A)) / 2 + rB * A.ch2() + rA * B.ch2() -
           intersect(A.c1(), B.c1(), A.surface());
}

ChernCharacter twist_by_line_bundle(const ChernCharacter& v, const NSClass& L) {
    if (!is_integer(L(0)) || !is_integer(L(1)))
        throw std::invalid_argument("line bundle twist needs integer coordinates");
    const Surface s = v.surface();
    const Rational& r = v.rank();
    return ChernCharacter(s, r, v.c1() + r * L,
                          v.ch2() + intersect(v.c1(), L, s) + r * intersect(L, L, s) / 2);
}

ChernCharacter serre_twist(const ChernCharacter& v) {
    return twist_by_line_bundle(v, canonical_class(v.surface()));
}

Rational bogomolov_discriminant(const ChernCharacter& v) {
    return intersect(v.c1(), v.c1(), v.surface()) - 2 * v.rank() * v.ch2();
}

bool has_sheaf_integrality(const ChernCharacter& v) {
    return is_integer(v.rank()) && is_integer(v.c1()(0)) && is_integer(v.c1()(1)) &&
           is_integer(2 * v.ch2());
}

}  // namespace bridgeland
