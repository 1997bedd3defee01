#include "bridgeland/helix.hpp"

#include <stdexcept>

namespace bridgeland {

namespace {

int sign_of_class(const ChernCharacter& k) {
    if (k.rank() != 0) return sign(k.rank());
    const int s = sign(intersect(k.c1(), reference_ample(k.surface()), k.surface()));
    if (s != 0) return s;
    return sign(k.ch2());
}

std::string blp2_term(const Rational& m, const char* name, bool first) {
    if (m == 0) return "";
    std::string out = m < 0 ? "-" : (first ? "" : "+");
    const Rational am = m < 0 ? Rational(-m) : m;
    if (am != 1) out += to_string(am);
    return out + name;
}

}  // namespace

ChernCharacter ExcObject::k_class() const { return shift % 2 == 0 ? cls : -cls; }

std::string display_name(const ExcObject& e) {
    return e.shift == 0 ? e.label : e.label + "[" + std::to_string(e.shift) + "]";
}

std::string line_bundle_label(Surface s, const NSClass& L) {
    if (L(0) == 0 && L(1) == 0) return "O";
    if (s == Surface::P1xP1) return "O(" + to_string(L(0)) + "," + to_string(L(1)) + ")";
    return "O(" + blp2_term(L(0), "E", true) + blp2_term(L(1), "F", L(0) == 0) + ")";
}

std::string canonical_label(const ChernCharacter& cls, const std::string& fallback) {
    const Surface s = cls.surface();
    if (cls.rank() == 1 && is_integer(cls.c1()(0)) && is_integer(cls.c1()(1)) &&
        cls == ChernCharacter::line_bundle(s, cls.c1()))
        return line_bundle_label(s, cls.c1());
    if (s == Surface::BlpP2 && cls == ChernCharacter(s, 0, NSClass(1, 0), Rational(-1, 2))) return "O_E(E)";
    return fallback;
}

ExcObject line_bundle_object(Surface s, const NSClass& L, int shift) {
    return {line_bundle_label(s, L), ChernCharacter::line_bundle(s, L), shift};
}

ExcObject object_from_k_class(const ChernCharacter& k, int base_shift, std::string label) {
    const int s = sign_of_class(k);
    if (s == 0) throw std::logic_error("mutation produced the zero class");
    const int odd = s < 0 ? 1 : 0;
    const int base_parity = ((base_shift % 2) + 2) % 2;
    const int shift = base_parity == odd ? base_shift : base_shift + 1;
    ChernCharacter cls = s < 0 ? -k : k;
    std::string name = canonical_label(cls, label);
    return {std::move(name), std::move(cls), shift};
}

ExcObject left_mutation(const ExcObject& A, const ExcObject& B) {
    const Rational chi = euler_pairing(A.k_class(), B.k_class());
    if (!is_integer(chi)) throw std::logic_error("non-integral Euler pairing between exceptional objects");
    if (chi == 0) return B;
    const ChernCharacter k = B.k_class() - numerator_of(chi) * A.k_class();
    return object_from_k_class(k, B.shift, "L_{" + display_name(A) + "}(" + display_name(B) + ")");
}

ExcObject left_mutation_through(const std::vector<ExcObject>& As, const ExcObject& B) {
    ExcObject out = B;
    for (auto it = As.rbegin(); it != As.rend(); ++it) out = left_mutation(*it, out);
    return out;
}

ExcCollection dual_collection(const ExcCollection& E) {
    const std::size_t n = E.size();
    ExcCollection F{E.surface, {}};
    for (std::size_t i = n; i-- > 0;) {
        const std::vector<ExcObject> prefix(E.objects.begin(), E.objects.begin() + static_cast<long>(i));
        F.objects.push_back(left_mutation_through(prefix, E.objects[i]));
    }
    if (n == 4) {
        const ExcObject& last = E.objects.back();
        const ExcObject& Fn = F.objects.front();
        if (Fn.cls != serre_twist(last.cls) || Fn.shift != last.shift + 2)
            throw std::logic_error("dual collection fails the Serre cross-check: got " + display_name(Fn) +
                                   " for " + display_name(last) + " (x) omega [2]");
    }
    return F;
}

QuiverData quiver_arrows(const ExcCollection& F, bool concentration_assumed,
                         const std::vector<std::string>& vertex_labels) {
    if (!concentration_assumed)
        throw std::invalid_argument("arrow counts need the single-degree concentration assumption");
    const std::size_t n = F.size();
    if (!vertex_labels.empty() && vertex_labels.size() != n)
        throw std::invalid_argument("expected one label per vertex");
    // vertex i (0-based) is F_{i+1}, stored at position n-1-i
    auto Fv = [&](std::size_t i) -> const ExcObject& { return F.objects[n - 1 - i]; };
    QuiverData q;
    q.arrows = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>::Zero(static_cast<long>(n), static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        q.labels.push_back(vertex_labels.empty() ? display_name(Fv(i)) : vertex_labels[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational chi = euler_pairing(Fv(j).k_class(), Fv(i).k_class());
            if (chi == 0) continue;
            // Hom^p(F_j, F_i) = Ext^{p + s_i - s_j} of the underlying sheaves
            const int p = chi < 0 ? 1 : 2;
            const int ext = p + Fv(i).shift - Fv(j).shift;
            if (!is_integer(chi) || ext < 0 || ext > 2)
                throw std::domain_error("concentration assumption fails for (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
            // chi = (-1)^p dim Hom^p
            if (p == 1) q.arrows(static_cast<long>(i), static_cast<long>(j)) = numerator_of(-chi).convert_to<long>();
        }
    }
    return q;
}

Helix::Helix(ExcCollection base, int period_shift) : base_(std::move(base)), period_shift_(period_shift) {
    if (base_.objects.empty()) throw std::invalid_argument("a helix needs a non-empty base collection");
}

ExcObject Helix::object(long index) const {
    const long n = static_cast<long>(period());
    long q = index / n, r = index % n;
    if (r < 0) {
        r += n;
        --q;
    }
    const ExcObject& e = base_.objects[static_cast<std::size_t>(r)];
    if (q == 0) return e;
    const NSClass twist = canonical_class(base_.surface) * Rational(-q);
    ChernCharacter cls = twist_by_line_bundle(e.cls, twist);
    std::string label = canonical_label(cls, e.label + "⊗ω^" + std::to_string(-q));
    return {std::move(label), std::move(cls), e.shift - static_cast<int>(q) * period_shift_};
}

ExcCollection thread(const Helix& h, long start) {
    ExcCollection out{h.base().surface, {}};
    for (long i = 0; i < static_cast<long>(h.period()); ++i) out.objects.push_back(h.object(start + i));
    return out;
}

ExcCollection twist_collection(const ExcCollection& E, const NSClass& L) {
    ExcCollection out{E.surface, {}};
    for (const auto& e : E.objects) {
        ChernCharacter cls = twist_by_line_bundle(e.cls, L);
        std::string label = canonical_label(cls, e.label + "⊗" + line_bundle_label(E.surface, L));
        out.objects.push_back({std::move(label), std::move(cls), e.shift});
    }
    return out;
}

Helix left_tilt(const Helix& h, long star) {
    const long n = static_cast<long>(h.period());
    const ExcCollection th = thread(h, star - n + 1);
    const QuiverData q = quiver_arrows(dual_collection(th), true);
    std::vector<std::size_t> sources;
    for (long i = 0; i + 1 < n; ++i)
        if (q.arrows(i, n - 1) > 0) sources.push_back(static_cast<std::size_t>(i));
    if (sources.empty()) throw std::domain_error("height function with level -1 undefined");
    std::vector<ExcObject> through;
    for (auto i : sources) through.push_back(th.objects[i]);
    ExcObject tilted = left_mutation_through(through, th.objects.back());
    tilted.shift -= 1;
    ExcCollection base{th.surface, {th.objects.begin(), th.objects.end() - 1}};
    base.objects.insert(base.objects.begin() + static_cast<long>(sources.front()), std::move(tilted));
    return Helix(std::move(base), h.period_shift());
}

}  // namespace bridgeland
