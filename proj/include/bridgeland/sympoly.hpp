#pragma once

#include "bridgeland/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bridgeland {

/// The fixed variable universe. Central charges and walls live in Q[x, y, t, a, b].
enum class Var : std::uint8_t { x = 0, y = 1, t = 2, a = 3, b = 4 };

inline constexpr std::size_t kNumVars = 5;

using Exponents = std::array<std::uint16_t, kNumVars>;

char var_name(Var v);

/// Graded lexicographic order, descending: higher total degree first, then
/// lexicographically larger exponent tuple on (x, y, t, a, b) first.
struct GrlexDescending {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse polynomial with rational coefficients. Terms are kept in canonical
/// (GrlexDescending) order and never carry a zero coefficient, so two equal
/// polynomials always serialize identically.
class SymPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    SymPoly() = default;
    SymPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    SymPoly(int constant);              // NOLINT(google-explicit-constructor)

    static SymPoly variable(Var v);
    static SymPoly monomial(const Rational& coefficient, const Exponents& exponents);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    /// Coefficient of the first term in canonical order. Zero for the zero polynomial.
    Rational leading_coefficient() const;
    Exponents leading_exponents() const;

    int degree(Var v) const;
    int total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const SymPoly& rhs);
    SymPoly& scale(const Rational& c);

    friend SymPoly operator+(SymPoly lhs, const SymPoly& rhs) { return lhs += rhs; }
    friend SymPoly operator-(SymPoly lhs, const SymPoly& rhs) { return lhs -= rhs; }
    friend SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs);
    friend SymPoly operator-(SymPoly p);
    friend bool operator==(const SymPoly& lhs, const SymPoly& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const SymPoly& lhs, const SymPoly& rhs) { return !(lhs == rhs); }

    SymPoly pow(unsigned n) const;

private:
    void add_term(const Exponents& e, const Rational& c);

    TermMap terms_;
};

/// Partial assignment of variables to rationals.
using Bindings = std::map<Var, Rational>;

/// Exact partial evaluation; unbound variables survive.
SymPoly substitute(const SymPoly& p, const Bindings& bindings);

/// Full evaluation. Throws std::invalid_argument if a variable of p is unbound.
Rational evaluate(const SymPoly& p, const Bindings& bindings);

/// Replaces each variable by a polynomial (variables absent from the map are kept).
SymPoly compose(const SymPoly& p, const std::map<Var, SymPoly>& images);

SymPoly derivative(const SymPoly& p, Var v);

/// Collects the terms whose exponents match `pattern` on the listed variables and
/// strips those variables: for p = (a-b) x^2 + 2 a x y, coefficient(p, {{x,2},{y,0}}) = a - b.
SymPoly coefficient(const SymPoly& p, std::initializer_list<std::pair<Var, unsigned>> pattern);

/// p / d when d divides p exactly, std::nullopt otherwise.
std::optional<SymPoly> exact_divide(const SymPoly& p, const SymPoly& d);

struct NormalizedPoly {
    SymPoly poly;
    Rational scale;  ///< poly == scale * input
};

/// Scales p by a nonzero rational so the coefficients are coprime integers and the
/// first term in canonical order is positive. Throws std::invalid_argument on zero.
NormalizedPoly normalize_primitive_scaled(const SymPoly& p);
SymPoly normalize_primitive(const SymPoly& p);

/// Canonical text, e.g. "t^2*a^2*b + 2*t^2*a*b^2 + x^2*b - 3/2*y".
std::string to_string(const SymPoly& p);

/// Parses +, -, *, /, ^, parentheses, rationals and the variables x, y, t, a, b.
/// Juxtaposition multiplies ("2a(y^2+y)"). Division is only by constants.
SymPoly parse_sympoly(std::string_view text);

namespace vars {
inline SymPoly x() { return SymPoly::variable(Var::x); }
inline SymPoly y() { return SymPoly::variable(Var::y); }
inline SymPoly t() { return SymPoly::variable(Var::t); }
inline SymPoly a() { return SymPoly::variable(Var::a); }
inline SymPoly b() { return SymPoly::variable(Var::b); }
}  // namespace vars

}  // namespace bridgeland
