#include "bridgeland/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace bridgeland {

char var_name(Var v) {
    static constexpr std::array<char, kNumVars> names{'x', 'y', 't', 'a', 'b'};
    return names[static_cast<std::size_t>(v)];
}

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponents add_exponents(const Exponents& lhs, const Exponents& rhs) {
    Exponents out{};
    for (std::size_t i = 0; i < kNumVars; ++i) out[i] = static_cast<std::uint16_t>(lhs[i] + rhs[i]);
    return out;
}

bool divides(const Exponents& d, const Exponents& e) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (d[i] > e[i]) return false;
    return true;
}

Rational rational_pow(const Rational& q, unsigned n) {
    Rational out = 1;
    for (unsigned i = 0; i < n; ++i) out *= q;
    return out;
}

}  // namespace

bool GrlexDescending::operator()(const Exponents& lhs, const Exponents& rhs) const {
    const auto tl = total(lhs), tr = total(rhs);
    if (tl != tr) return tl > tr;
    return lhs > rhs;
}

SymPoly::SymPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
}

SymPoly::SymPoly(int constant) : SymPoly(Rational(constant)) {}

SymPoly SymPoly::variable(Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(1, e);
}

SymPoly SymPoly::monomial(const Rational& coefficient, const Exponents& exponents) {
    SymPoly p;
    p.add_term(exponents, coefficient);
    return p;
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational SymPoly::constant_term() const {
    const auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SymPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Exponents SymPoly::leading_exponents() const {
    return terms_.empty() ? Exponents{} : terms_.begin()->first;
}

int SymPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
    return d;
}

int SymPoly::total_degree() const {
    return terms_.empty() ? 0 : static_cast<int>(total(terms_.begin()->first));
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs) {
    SymPoly out;
    for (const auto& [el, cl] : lhs.terms_)
        for (const auto& [er, cr] : rhs.terms_) out.add_term(add_exponents(el, er), cl * cr);
    return out;
}

SymPoly& SymPoly::operator*=(const SymPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

SymPoly& SymPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

SymPoly operator-(SymPoly p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

SymPoly SymPoly::pow(unsigned n) const {
    SymPoly out(1);
    for (unsigned i = 0; i < n; ++i) out *= *this;
    return out;
}

SymPoly substitute(const SymPoly& p, const Bindings& bindings) {
    if (bindings.empty()) return p;
    SymPoly out;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        Rational coeff = c;
        for (const auto& [v, value] : bindings) {
            auto& k = rest[static_cast<std::size_t>(v)];
            coeff *= rational_pow(value, k);
            k = 0;
        }
        out += SymPoly::monomial(coeff, rest);
    }
    return out;
}

Rational evaluate(const SymPoly& p, const Bindings& bindings) {
    const SymPoly r = substitute(p, bindings);
    if (!r.is_constant()) throw std::invalid_argument("evaluate: unbound variable in " + to_string(r));
    return r.constant_term();
}

SymPoly compose(const SymPoly& p, const std::map<Var, SymPoly>& images) {
    SymPoly out;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        SymPoly term(c);
        for (const auto& [v, image] : images) {
            auto& k = rest[static_cast<std::size_t>(v)];
            term *= image.pow(k);
            k = 0;
        }
        out += term * SymPoly::monomial(1, rest);
    }
    return out;
}

SymPoly derivative(const SymPoly& p, Var v) {
    const auto i = static_cast<std::size_t>(v);
    SymPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        --d[i];
        out += SymPoly::monomial(c * e[i], d);
    }
    return out;
}

SymPoly coefficient(const SymPoly& p, std::initializer_list<std::pair<Var, unsigned>> pattern) {
    SymPoly out;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        bool match = true;
        for (const auto& [v, k] : pattern) {
            auto& slot = rest[static_cast<std::size_t>(v)];
            if (slot != k) {
                match = false;
                break;
            }
            slot = 0;
        }
        if (match) out += SymPoly::monomial(c, rest);
    }
    return out;
}

std::optional<SymPoly> exact_divide(const SymPoly& p, const SymPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    const Exponents lead = d.leading_exponents();
    const Rational lead_coeff = d.leading_coefficient();
    SymPoly quotient;
    SymPoly rest = p;
    while (!rest.is_zero()) {
        const Exponents e = rest.leading_exponents();
        // The remainder of division by a single polynomial is unique, so an
        // indivisible leading term means d does not divide p.
        if (!divides(lead, e)) return std::nullopt;
        Exponents q{};
        for (std::size_t i = 0; i < kNumVars; ++i) q[i] = static_cast<std::uint16_t>(e[i] - lead[i]);
        const SymPoly step = SymPoly::monomial(rest.leading_coefficient() / lead_coeff, q);
        quotient += step;
        rest -= step * d;
    }
    return quotient;
}

NormalizedPoly normalize_primitive_scaled(const SymPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot normalize zero");
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator_of(c));
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading_coefficient() < 0) scale = -scale;
    SymPoly scaled = p;
    scaled.scale(scale);
    return {scaled, scale};
}

SymPoly normalize_primitive(const SymPoly& p) { return normalize_primitive_scaled(p).poly; }

std::string to_string(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(static_cast<Var>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const Rational magnitude = negative ? Rational(-c) : c;
        if (mono.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    SymPoly parse() {
        SymPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
               std::string_view("xytab").find(c) != std::string_view::npos;
    }

    SymPoly expr() {
        SymPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    SymPoly term() {
        SymPoly acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == '/') {
                ++pos_;
                const SymPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc.scale(Rational(1) / d.constant_term());
            } else if (starts_factor()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    SymPoly unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    SymPoly power() {
        SymPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    SymPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SymPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return SymPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        switch (c) {
            case 'x': ++pos_; return vars::x();
            case 'y': ++pos_; return vars::y();
            case 't': ++pos_; return vars::t();
            case 'a': ++pos_; return vars::a();
            case 'b': ++pos_; return vars::b();
            case '\0': fail("unexpected end of input");
            default: fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SymPoly parse_sympoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace bridgeland
