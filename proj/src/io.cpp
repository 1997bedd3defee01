#include "bridgeland/io.hpp"

#include <cctype>

namespace bridgeland {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

Rational rational_or_throw(std::string_view text) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
}

/// Splits "a,b,c" at top-level commas.
std::vector<std::string> split_top(std::string_view s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::string strip_parens(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
}

/// "E", "-E-2F", "2E+3F", "F" -> (m, n).
NSClass parse_EF(const std::string& body) {
    Rational m = 0, n = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < body.size()) {
        int sgn = 1;
        if (body[i] == '+' || body[i] == '-') {
            sgn = body[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < body.size() && (std::isdigit(static_cast<unsigned char>(body[j])) || body[j] == '/')) ++j;
        const Rational coef = j > i ? rational_or_throw(body.substr(i, j - i)) : Rational(1);
        if (j >= body.size() || (body[j] != 'E' && body[j] != 'F'))
            throw ParseError("expected E or F in 'O(" + body + ")'");
        (body[j] == 'E' ? m : n) += sgn * coef;
        i = j + 1;
        any = true;
    }
    if (!any) throw ParseError("empty divisor in 'O()'");
    return NSClass(m, n);
}

}  // namespace

NSClass parse_ns_class(std::string_view text) {
    const auto parts = split_top(strip_parens(trim(text)));
    if (parts.size() != 2) throw ParseError("expected a divisor 'p,q': '" + std::string(text) + "'");
    return NSClass(rational_or_throw(parts[0]), rational_or_throw(parts[1]));
}

ExcObject parse_object(Surface s, std::string_view text) {
    std::string body = trim(text);
    int shift = 0;
    if (!body.empty() && body.back() == ']') {
        const auto open = body.rfind('[');
        if (open == std::string::npos) throw ParseError("unbalanced shift in '" + std::string(text) + "'");
        try {
            shift = std::stoi(body.substr(open + 1, body.size() - open - 2));
        } catch (const std::exception&) {
            throw ParseError("bad shift in '" + std::string(text) + "'");
        }
        body = trim(body.substr(0, open));
    }
    ChernCharacter cls = ChernCharacter::zero(s);
    std::string label = body;
    try {
        if (body == "O") {
            cls = ChernCharacter::line_bundle(s, NSClass(0, 0));
        } else if (body == "T") {
            if (s != Surface::BlpP2) throw ParseError("T = O_E(E) exists only on blp2");
            cls = ChernCharacter(s, 0, NSClass(1, 0), Rational(-1, 2));
            label = "O_E(E)";
        } else if (body.size() > 3 && body.rfind("O(", 0) == 0 && body.back() == ')') {
            const std::string inner = body.substr(2, body.size() - 3);
            const bool ef = inner.find_first_of("EF") != std::string::npos;
            if (ef && s != Surface::BlpP2) throw ParseError("E/F divisors need --surface blp2");
            const NSClass L = ef ? parse_EF(inner) : parse_ns_class(inner);
            if (!is_integer(L(0)) || !is_integer(L(1))) throw ParseError("line bundles need an integral divisor");
            cls = ChernCharacter::line_bundle(s, L);
            label = line_bundle_label(s, L);
        } else if (body.size() > 2 && body.front() == '(' && body.back() == ')') {
            const auto parts = split_top(strip_parens(body));
            if (parts.size() != 3) throw ParseError("expected '(r,(c1a,c1b),ch2)'");
            cls = ChernCharacter(s, rational_or_throw(parts[0]), parse_ns_class(parts[1]), rational_or_throw(parts[2]));
            label = canonical_label(cls, body);
        } else {
            throw ParseError("unrecognized object literal '" + std::string(text) + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
    return {label, cls, shift};
}

namespace {

/// Integers as JSON numbers, other rationals as "p/q" strings.
json number_json(const Rational& q) {
    if (is_integer(q)) return numerator_of(q).convert_to<long long>();
    return to_string(q);
}

}  // namespace

json to_json(const ChernCharacter& v) {
    return {{"surface", surface_name(v.surface())},
            {"rank", number_json(v.rank())},
            {"c1", {number_json(v.c1()(0)), number_json(v.c1()(1))}},
            {"ch2", to_string(v.ch2())}};
}

namespace {

Rational rational_field(const json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_or_throw(j.get<std::string>());
    throw ParseError(std::string("field '") + what + "' must be an integer or a \"p/q\" string");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

ChernCharacter chern_fields(Surface s, const json& j) {
    const json& c1 = field(j, "c1");
    if (!c1.is_array() || c1.size() != 2) throw ParseError("field 'c1' must be a two-element array");
    try {
        return ChernCharacter(s, rational_field(field(j, "rank"), "rank"),
                              NSClass(rational_field(c1[0], "c1"), rational_field(c1[1], "c1")),
                              rational_field(field(j, "ch2"), "ch2"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Surface surface_field(const json& j) {
    const json& s = field(j, "surface");
    if (!s.is_string()) throw ParseError("field 'surface' must be a string");
    try {
        return parse_surface(s.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

ChernCharacter chern_from_json(const json& j) { return chern_fields(surface_field(j), j); }

json to_json(const ExcCollection& c) {
    json objs = json::array();
    for (const auto& e : c.objects) {
        json o = to_json(e.cls);
        o.erase("surface");
        objs.push_back({{"label", e.label}, {"rank", o["rank"]}, {"c1", o["c1"]}, {"ch2", o["ch2"]}, {"shift", e.shift}});
    }
    return {{"surface", surface_name(c.surface)}, {"objects", objs}};
}

ExcCollection collection_from_json(const json& j) {
    const Surface s = surface_field(j);
    const json& objs = field(j, "objects");
    if (!objs.is_array()) throw ParseError("field 'objects' must be an array");
    ExcCollection c{s, {}};
    for (const auto& o : objs) {
        ChernCharacter cls = chern_fields(s, o);
        int shift = 0;
        if (o.contains("shift")) {
            if (!o["shift"].is_number_integer()) throw ParseError("field 'shift' must be an integer");
            shift = o["shift"].get<int>();
        }
        std::string label = o.contains("label") && o["label"].is_string() ? o["label"].get<std::string>()
                                                                          : canonical_label(cls, to_string(cls));
        c.objects.push_back({std::move(label), std::move(cls), shift});
    }
    return c;
}

json to_json(const QuiverData& q) {
    json arrows = json::array();
    for (long i = 0; i < q.arrows.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < q.arrows.cols(); ++j) row.push_back(q.arrows(i, j));
        arrows.push_back(row);
    }
    return {{"labels", q.labels}, {"arrows", arrows}};
}

namespace {

json witness_json(const CoverageWitness& w) {
    json j = {{"x", to_string(w.x)}, {"y", to_string(w.y)}};
    if (w.twist) {
        j["p"] = to_string((*w.twist)(0));
        j["q"] = to_string((*w.twist)(1));
        j["region"] = w.region;
        j["t"] = to_string(w.t);
    } else {
        j["p"] = nullptr;
        j["q"] = nullptr;
        j["region"] = nullptr;
        j["t"] = nullptr;
    }
    return j;
}

}  // namespace

json to_json(const CoverageReport& r) {
    json results = json::array();
    for (const auto& w : r.results) results.push_back(witness_json(w));
    json out = {{"surface", surface_name(r.surface)},
                {"grid",
                 {{"xmin", to_string(r.xmin)}, {"xmax", to_string(r.xmax)}, {"ymin", to_string(r.ymin)},
                  {"ymax", to_string(r.ymax)}}},
                {"step", to_string(r.step)},
                {"H", {{"a", to_string(r.a)}, {"b", to_string(r.b)}}},
                {"covered", r.covered},
                {"results", results}};
    if (r.first_failure) out["first_failure"] = witness_json(*r.first_failure);
    return out;
}

}  // namespace bridgeland
