#include "hypercircle/io.hpp"

#include <sstream>

namespace hc::io {

namespace {

const json& require_array(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    return j;
}

std::vector<Rational> rationals_from_json(const json& j, const char* what) {
    std::vector<Rational> out;
    for (const auto& x : require_array(j, what)) out.push_back(rational_from_json(x));
    return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

}  // namespace

const json& require(const json& j, const std::string& key) {
    if (!j.is_object()) throw SchemaError("expected an object holding \"" + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field \"" + key + "\"");
    return *it;
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        throw SchemaError("bad rational \"" + j.get<std::string>() + "\"");
    }
}

json to_json(const QPoly& p) { return rationals_to_json(p.coeffs()); }

QPoly qpoly_from_json(const json& j) { return QPoly(rationals_from_json(j, "polynomial")); }

std::string render(const QPoly& p, const std::string& var) {
    QMulti m(1, Rational(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (!p.coeffs()[k].is_zero()) m.add_term(Exponent{static_cast<int>(k)}, p.coeffs()[k]);
    return hc::render(m, {var});
}

json field_to_json(const FieldPtr& f) { return json{{"minpoly", to_json(f->minpoly())}, {"text", render(f->minpoly(), "a")}}; }

FieldPtr field_from_json(const json& j) {
    QPoly m = qpoly_from_json(require(j, "minpoly"));
    if (m.degree() < 1) throw SchemaError("minpoly must have positive degree");
    return NumberField::create(m);
}

json to_json(const NFElement& x, const FieldPtr& f) { return rationals_to_json(x.coords(f->degree())); }

NFElement element_from_json(const json& j, const FieldPtr& f) {
    if (j.is_string() || j.is_number_integer()) return NFElement::from_rational(f, rational_from_json(j));
    auto c = rationals_from_json(j, "field element");
    if (c.size() > f->degree()) throw SchemaError("field element has more coordinates than the field degree");
    c.resize(f->degree(), Rational(0));
    return NFElement(f, std::move(c));
}

json to_json(const LPoly& p, const FieldPtr& f) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c, f));
    return out;
}

LPoly lpoly_from_json(const json& j, const FieldPtr& f) {
    std::vector<NFElement> c;
    for (const auto& x : require_array(j, "polynomial")) c.push_back(element_from_json(x, f));
    return LPoly(std::move(c));
}

json unit_to_json(const MoebiusUnit& u, const FieldPtr& f) {
    return json{{"a", to_json(u.a(), f)}, {"b", to_json(u.b(), f)}, {"c", to_json(u.c(), f)}, {"d", to_json(u.d(), f)}};
}

MoebiusUnit unit_from_json(const json& j, const FieldPtr& f) {
    return MoebiusUnit(f, element_from_json(require(j, "a"), f), element_from_json(require(j, "b"), f),
                       element_from_json(require(j, "c"), f), element_from_json(require(j, "d"), f));
}

json to_json(const Parametrization& p) {
    json nums = json::array(), text = json::array();
    for (const auto& q : p.numerators) {
        nums.push_back(to_json(q));
        text.push_back("(" + render(q) + ")/(" + render(p.denominator) + ")");
    }
    json out{{"numerators", nums}, {"denominator", to_json(p.denominator)}};
    if (p.unit && p.field) out["unit"] = unit_to_json(*p.unit, p.field);
    out["text"] = text;
    return out;
}

Parametrization parametrization_from_json(const json& j, const FieldPtr& f) {
    Parametrization p;
    p.field = f;
    for (const auto& x : require_array(require(j, "numerators"), "numerators")) p.numerators.push_back(qpoly_from_json(x));
    p.denominator = qpoly_from_json(require(j, "denominator"));
    if (p.denominator.is_zero()) throw SchemaError("zero denominator");
    if (p.numerators.size() != f->degree()) throw SchemaError("parametrization needs one numerator per field degree");
    if (j.contains("unit")) p.unit = unit_from_json(j["unit"], f);
    // bring to the canonical form with a monic common denominator
    QCurve comps;
    for (const auto& q : p.numerators) comps.emplace_back(q, p.denominator);
    Parametrization c = from_components(f, comps);
    c.unit = p.unit;
    return c;
}

json to_json(const QRatFunc& r, const std::string& var) {
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}, {"text", "(" + render(r.num(), var) + ")/(" + render(r.den(), var) + ")"}};
}

json to_json(const LRatFunc& r, const FieldPtr& f) { return json{{"num", to_json(r.num(), f)}, {"den", to_json(r.den(), f)}}; }

LRatFunc lratfunc_from_json(const json& j, const FieldPtr& f) {
    LPoly num = lpoly_from_json(require(j, "num"), f);
    LPoly den = j.contains("den") ? lpoly_from_json(j["den"], f) : LPoly(NFElement::from_rational(f, 1));
    if (den.is_zero()) throw SchemaError("zero denominator");
    return LRatFunc(std::move(num), std::move(den));
}

LCurve lcurve_from_json(const json& j, const FieldPtr& f) {
    LCurve out;
    for (const auto& x : require_array(j, "curve")) out.push_back(lratfunc_from_json(x, f));
    if (out.empty()) throw SchemaError("curve has no coordinates");
    return out;
}

json to_json(const QMulti& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        Exponent full = e;
        full.resize(names.size(), 0);
        terms.push_back(json{{"exp", full}, {"coef", to_json(c)}});
    }
    return json{{"vars", names}, {"terms", terms}, {"text", hc::render(p, names)}};
}

QMulti qmulti_from_json(const json& j) {
    const json& vars = require_array(require(j, "vars"), "vars");
    const std::size_t n = vars.size();
    QMulti p(n, Rational(0));
    for (const auto& t : require_array(require(j, "terms"), "terms")) {
        const json& e = require_array(require(t, "exp"), "exp");
        if (e.size() != n) throw SchemaError("exponent length differs from the number of variables");
        Exponent ex;
        for (const auto& k : e) {
            if (!k.is_number_integer() || k.get<long>() < 0) throw SchemaError("exponents must be nonnegative integers");
            ex.push_back(k.get<int>());
        }
        p += QMulti::monomial(ex, rational_from_json(require(t, "coef")));
    }
    return p;
}

json to_json(const Matrix<Rational>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rationals_to_json(m.row(i)));
    return out;
}

json to_json(const TransformWitness& w) {
    return json{{"kind", to_string(w.kind)}, {"matrix", to_json(w.matrix)}, {"pivots", w.pivots}};
}

json to_json(const WeilSystem& w) {
    const std::size_t n = w.field->degree();
    auto names = variable_names("t", n);
    json comps = json::array();
    for (const auto& row : w.components) {
        json r = json::array();
        for (const auto& q : row) r.push_back(to_json(q, names));
        comps.push_back(r);
    }
    json delta = json::array();
    for (const auto& q : w.delta_set()) delta.push_back(to_json(q, names));
    return json{{"denominator", to_json(w.denominator, names)}, {"components", comps}, {"equations", delta}};
}

json points_to_json(const std::vector<std::vector<Rational>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(rationals_to_json(p));
    return out;
}

std::vector<std::vector<Rational>> points_from_json(const json& j) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : require_array(j, "points")) out.push_back(rationals_from_json(p, "point"));
    return out;
}

}  // namespace hc::io
