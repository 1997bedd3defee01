#include "bridgeland/regions.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace bridgeland {

namespace {

ExcObject lb(Surface s, long p, long q, int shift) {
    return line_bundle_object(s, NSClass(Rational(p), Rational(q)), shift);
}

ExcObject torsion_T(int shift) {
    return {"O_E(E)", ChernCharacter(Surface::BlpP2, 0, NSClass(1, 0), Rational(-1, 2)), shift};
}

/// A rotated entry X[k] of a dual collection sits in the unrotated heart as X[k-1].
ExcObject lowered(ExcObject e) {
    if (e.shift > 0) e.shift -= 1;
    return e;
}

/// beta(kept) > beta(rotated), with both objects taken in the unrotated heart.
WallSideConstraint inside(const ExcObject& kept, const ExcObject& rotated) {
    const ExcObject low = lowered(rotated);
    return {"inside W(" + display_name(kept) + ", " + display_name(low) + ")",
            wall_quadric(kept.k_class(), low.k_class()), Side::Inside};
}

RegionSpec two_wall_region(std::string id, const ExcCollection& dual, const NSClass& twist,
                           std::pair<std::size_t, std::size_t> w1, std::pair<std::size_t, std::size_t> w2) {
    ExcCollection F = twist_collection(dual, twist);
    RegionSpec r{std::move(id), dual.surface, twist, F, {}};
    r.constraints.emplace_back(inside(F[w1.first], F[w1.second]));
    r.constraints.emplace_back(inside(F[w2.first], F[w2.second]));
    return r;
}

ChargeValue negated(const ChargeValue& z) { return {-z.re, -z.im}; }

struct HeartMember {
    std::string name;
    ChargeValue z;
};

std::string slope_text(const std::string& lhs, const std::string& rhs) {
    return "beta(" + lhs + ") > beta(" + rhs + ")";
}

}  // namespace

ExcCollection dual_Fprime_p1p1() {
    const Surface s = Surface::P1xP1;
    return {s, {lb(s, -2, -1, 2), lb(s, -1, -2, 2), lb(s, -1, -1, 1), lb(s, 0, 0, 0)}};
}

ExcCollection dual_Fprime_blp2() {
    const Surface s = Surface::BlpP2;
    return {s, {lb(s, -1, -2, 2), torsion_T(1), lb(s, -1, -1, 1), lb(s, 0, 0, 0)}};
}

ExcCollection dual_Fdoubleprime_blp2() {
    const Surface s = Surface::BlpP2;
    return {s, {lb(s, -1, -2, 2), lb(s, 0, -1, 1), torsion_T(0), lb(s, 0, 0, 0)}};
}

Membership membership(const RegionSpec& region, const StabilityPoint& p) {
    if (p.surface() != region.surface) throw std::invalid_argument("point and region live on different surfaces");
    const Bindings vals = bindings(p);
    Membership m;
    for (const auto& c : region.constraints) {
        if (const auto* h = std::get_if<HeartLineConstraint>(&c)) {
            const int s = sign(evaluate(h->form, vals));
            if (!(s > 0 || (!h->strict && s == 0))) m.failed.push_back(h->name);
        } else {
            const auto& w = std::get<WallSideConstraint>(c);
            const int s = w.wall.orientation * sign(evaluate(w.wall.equation, vals));
            const Side side = s > 0 ? Side::Inside : (s == 0 ? Side::On : Side::Outside);
            if (side != w.required) m.failed.push_back(w.name);
        }
    }
    m.member = m.failed.empty();
    return m;
}

bool contains(const RegionSpec& region, const StabilityPoint& p) { return membership(region, p).member; }

RegionSpec region_p1p1(const NSClass& twist) {
    return two_wall_region("p1p1", dual_Fprime_p1p1(), twist, {3, 0}, {3, 1});
}

RegionSpec region_blp2_Fprime(const NSClass& twist) {
    return two_wall_region("F'", dual_Fprime_blp2(), twist, {3, 1}, {3, 0});
}

RegionSpec region_blp2_Fdoubleprime(const NSClass& twist) {
    RegionSpec r = two_wall_region("F''", dual_Fdoubleprime_blp2(), twist, {3, 0}, {2, 0});
    const ChernCharacter O = r.dual[3].cls, bottom = r.dual[0].cls;
    r.constraints.emplace_back(HeartLineConstraint{display_name(r.dual[3]) + " in the heart", heart_form(O), true});
    r.constraints.emplace_back(
        HeartLineConstraint{display_name(lowered(r.dual[0])) + " in the heart", -heart_form(bottom), false});
    return r;
}

RotatabilityReport rotatability_conditions(const ExcCollection& F, const StabilityPoint& p) {
    if (F.surface != p.surface()) throw std::invalid_argument("collection and point live on different surfaces");
    RotatabilityReport report;
    std::vector<HeartMember> keep, rotate;
    for (const auto& e : F.objects) {
        if (e.shift < 0 || e.shift > 2) throw std::invalid_argument("unsupported collection shape: shift outside 0..2");
        const ChargeValue z = central_charge(e.cls, p);
        const HeartSide side = heart_side(e.cls, p);
        ExcObject sheaf = e, shifted = e;
        sheaf.shift = 0;
        shifted.shift = 1;
        switch (e.shift) {
            case 0:
                if (side != HeartSide::Sheaf) report.failed.push_back(display_name(sheaf) + " in the heart");
                else keep.push_back({display_name(sheaf), z});
                break;
            case 2:
                if (side != HeartSide::Shifted) report.failed.push_back(display_name(shifted) + " in the heart");
                else rotate.push_back({display_name(shifted), negated(z)});
                break;
            default:
                if (side == HeartSide::Sheaf) rotate.push_back({display_name(sheaf), z});
                else keep.push_back({display_name(shifted), negated(z)});
        }
    }
    for (const auto& k : keep)
        for (const auto& r : rotate)
            if (compare_slopes(k.z, r.z) <= 0) report.failed.push_back(slope_text(k.name, r.name));
    report.satisfied = report.failed.empty();
    return report;
}

std::string to_string(ScreenResult r) {
    switch (r) {
        case ScreenResult::Stable: return "stable";
        case ScreenResult::Destabilized: return "destabilized";
        case ScreenResult::Boundary: return "boundary (semistable)";
    }
    return "?";
}

ScreenResult line_bundle_stability_screen_blp2(const NSClass& L, const StabilityPoint& p) {
    if (p.surface() != Surface::BlpP2) throw std::invalid_argument("the line-bundle screen is for BlpP2");
    const Surface s = Surface::BlpP2;
    const NSClass E(1, 0);
    const ChernCharacter Lc = ChernCharacter::line_bundle(s, L);
    if (heart_side_line_bundle(L, p) == HeartSide::Sheaf) {
        const NSClass sub = L - E;
        if (heart_side_line_bundle(sub, p) != HeartSide::Sheaf) return ScreenResult::Stable;
        const int c = compare_slopes(central_charge(ChernCharacter::line_bundle(s, sub), p), central_charge(Lc, p));
        return c > 0 ? ScreenResult::Destabilized : (c == 0 ? ScreenResult::Boundary : ScreenResult::Stable);
    }
    const NSClass quot = L + E;
    if (heart_side_line_bundle(quot, p) != HeartSide::Shifted) return ScreenResult::Stable;
    const int c = compare_slopes(negated(central_charge(ChernCharacter::line_bundle(s, quot), p)),
                                 negated(central_charge(Lc, p)));
    return c < 0 ? ScreenResult::Destabilized : (c == 0 ? ScreenResult::Boundary : ScreenResult::Stable);
}

namespace {

RegionSpec specialize(RegionSpec r, const Rational& a, const Rational& b) {
    const std::map<Var, Rational> ab{{Var::a, a}, {Var::b, b}};
    for (auto& c : r.constraints) {
        if (auto* h = std::get_if<HeartLineConstraint>(&c)) h->form = substitute(h->form, ab);
        else {
            auto& w = std::get<WallSideConstraint>(c);
            w.wall.equation = substitute(w.wall.equation, ab);
        }
    }
    return r;
}

long ceil_of(const Rational& q) {
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer f = n / d;
    if (f * d != n && n > 0) f += 1;
    return f.convert_to<long>();
}

std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step) {
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

}  // namespace

CoverageReport coverage_check(Surface s, const Rational& a, const Rational& b, const Rational& xmin,
                              const Rational& xmax, const Rational& ymin, const Rational& ymax,
                              const Rational& step, const CoverageOptions& options) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    const AmpleClass H = make_ample(s, a, b);
    CoverageReport report{s, a, b, xmin, xmax, ymin, ymax, step, true, {}, std::nullopt};

    std::map<std::tuple<long, long, int>, RegionSpec> cache;
    auto region = [&](long p, long q, int kind) -> const RegionSpec& {
        const auto key = std::make_tuple(p, q, kind);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const NSClass L{Rational(p), Rational(q)};
        RegionSpec r = s == Surface::P1xP1 ? region_p1p1(L)
                       : kind == 0          ? region_blp2_Fprime(L)
                                            : region_blp2_Fdoubleprime(L);
        return cache.emplace(key, specialize(std::move(r), a, b)).first->second;
    };
    const int kinds = s == Surface::BlpP2 && options.use_Fdoubleprime ? 2 : 1;

    for (const Rational& x : grid(xmin, xmax, step)) {
        for (const Rational& y : grid(ymin, ymax, step)) {
            CoverageWitness w{x, y, std::nullopt, "", 0};
            std::vector<std::pair<long, long>> twists;
            if (options.allow_translation) {
                const long cx = ceil_of(x), cy = ceil_of(y);
                for (long p = cx - 1; p <= cx + 1; ++p)
                    for (long q = cy - 2; q <= cy + 2; ++q) twists.emplace_back(p, q);
                // nearest translate of the unit cell first
                const Rational cy0 = s == Surface::P1xP1 ? Rational(-1, 2) : Rational(-1);
                auto dist = [&](const std::pair<long, long>& pq) {
                    return abs(x - pq.first + Rational(1, 2)) + abs(y - pq.second - cy0);
                };
                std::stable_sort(twists.begin(), twists.end(),
                                 [&](const auto& l, const auto& r) { return dist(l) < dist(r); });
            } else {
                twists.emplace_back(0, 0);
            }
            for (auto [p, q] : twists) {
                for (int kind = 0; kind < kinds && !w.twist; ++kind) {
                    const RegionSpec& r = region(p, q, kind);
                    for (const Rational& t : options.t_schedule) {
                        if (contains(r, StabilityPoint{H, x, y, t})) {
                            w.twist = NSClass(Rational(p), Rational(q));
                            w.region = r.id;
                            w.t = t;
                            break;
                        }
                    }
                }
                if (w.twist) break;
            }
            if (!w.twist && report.covered) {
                report.covered = false;
                report.first_failure = w;
            }
            report.results.push_back(std::move(w));
        }
    }
    return report;
}

DimensionVector dimension_vector(const ChernCharacter& v, const ExcCollection& F) {
    const long n = static_cast<long>(F.size());
    if (n != 4) throw std::invalid_argument("a dimension vector needs a basis of four classes");
    Eigen::Matrix<Rational, 4, 4> M;
    for (long i = 0; i < n; ++i) {
        if (F.objects[static_cast<std::size_t>(n - 1 - i)].cls.surface() != v.surface())
            throw std::invalid_argument("class and collection live on different surfaces");
        M.col(i) = F.objects[static_cast<std::size_t>(n - 1 - i)].k_class().vector();
    }
    const Eigen::FullPivLU<Eigen::Matrix<Rational, 4, 4>> lu(M);
    if (lu.determinant() == 0) throw std::invalid_argument("collection classes do not form a basis");
    const Eigen::Matrix<Rational, 4, 1> sol = lu.solve(v.vector());
    if (M * sol != v.vector()) throw std::logic_error("exact solve failed");
    DimensionVector d(n);
    for (long i = 0; i < n; ++i) {
        if (!is_integer(sol(i))) throw std::domain_error("class not in integral span");
        d(i) = numerator_of(sol(i));
    }
    return d;
}

ThetaWeights king_weights(const ChernCharacter& v, const ExcCollection& F, const StabilityPoint& p) {
    const ChargeValue zv = central_charge(v, p);
    if (zv.re == 0 && zv.im == 0) throw std::domain_error("class has vanishing charge here");
    const long n = static_cast<long>(F.size());
    ThetaWeights theta(n);
    for (long i = 0; i < n; ++i) {
        const ChargeValue zi = central_charge(F.objects[static_cast<std::size_t>(n - 1 - i)].k_class(), p);
        theta(i) = zv.re * zi.im - zv.im * zi.re;
    }
    return theta;
}

Rational theta_pairing(const ThetaWeights& theta, const DimensionVector& d) {
    if (theta.size() != d.size()) throw std::invalid_argument("size mismatch");
    Rational s = 0;
    for (long i = 0; i < d.size(); ++i) s += theta(i) * Rational(d(i));
    return s;
}

std::vector<DimensionVector> king_screen(const ThetaWeights& theta, const DimensionVector& d) {
    if (theta.size() != d.size()) throw std::invalid_argument("size mismatch");
    Integer total = 1;
    for (long i = 0; i < d.size(); ++i) {
        if (d(i) < 0) throw std::invalid_argument("dimension vector has negative entries");
        total *= d(i) + 1;
    }
    if (total > 1000000) throw std::invalid_argument("too many sub-dimension vectors to enumerate");
    std::vector<DimensionVector> violations;
    DimensionVector cur = DimensionVector::Zero(d.size());
    while (true) {
        long i = 0;
        while (i < d.size() && cur(i) == d(i)) cur(i++) = 0;
        if (i == d.size()) break;
        cur(i) += 1;
        if (cur == d) continue;
        if (theta_pairing(theta, cur) > 0) violations.push_back(cur);
    }
    return violations;
}

}  // namespace bridgeland
