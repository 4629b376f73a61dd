#include "hypercircle/hypercircle.hpp"

#include <algorithm>

namespace hc {

namespace {

NFElement in_field(const FieldPtr& f, const NFElement& x) { return NFElement(f, x.coords(f->degree())); }

FieldPtr field_of(const MoebiusUnit& u, const FieldPtr& fallback) {
    FieldPtr f = u.field() ? u.field() : fallback;
    if (!f) throw MathError("no number field given for the unit");
    if (fallback && u.field() && !same_field(fallback, u.field())) throw FieldMismatch();
    return f;
}

QPoly lcm(const QPoly& a, const QPoly& b) { return monic(exact_div(a * b, gcd(a, b))); }

}  // namespace

int Parametrization::degree() const {
    int d = denominator.degree();
    for (const auto& p : numerators) d = std::max(d, p.degree());
    return d;
}

QCurve Parametrization::components() const {
    QCurve out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(component(i));
    return out;
}

std::vector<Rational> Parametrization::at(const Rational& t) const {
    Rational m = denominator(t);
    if (m.is_zero()) throw MathError("evaluation at a pole");
    std::vector<Rational> x;
    for (const auto& p : numerators) x.push_back(p(t) / m);
    return x;
}

LPoly Parametrization::recombined_numerator() const {
    LPoly acc;
    NFElement a = NFElement::from_rational(field, 1), gen = NFElement::generator(field);
    for (const auto& p : numerators) {
        acc += lift(p).scaled(a);
        a = a * gen;
    }
    return acc;
}

Parametrization from_components(const FieldPtr& field, const QCurve& comps) {
    QPoly den(Rational(1));
    for (const auto& c : comps) den = lcm(den, c.den());
    Parametrization p{field, {}, den, std::nullopt};
    for (const auto& c : comps) p.numerators.push_back(c.num() * exact_div(den, c.den()));
    return p;
}

NFElement from_coords(const FieldPtr& field, const std::vector<Rational>& x) {
    if (x.size() != field->degree()) throw MathError("point dimension does not match the field degree");
    return NFElement(field, x);
}

// ---------------------------------------------------------------- projective points

ProjectivePoint::ProjectivePoint(std::vector<NFElement> coords) : coords_(std::move(coords)) {
    if (std::all_of(coords_.begin(), coords_.end(), [](const NFElement& x) { return x.is_zero(); }))
        throw MathError("projective point with all coordinates zero");
}

ProjectivePoint ProjectivePoint::normalized() const {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const NFElement& x) { return !x.is_zero(); });
    NFElement s = it->inverse();
    std::vector<NFElement> c;
    for (const auto& x : coords_) c.push_back(x * s);
    return ProjectivePoint(std::move(c));
}

bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.size() != q.size()) return false;
    return p.normalized().coords_ == q.normalized().coords_;
}

// ---------------------------------------------------------------- units

Parametrization parametrize_unit(const MoebiusUnit& u, const FieldPtr& field) {
    const FieldPtr f = field_of(u, field);
    const std::size_t n = f->degree();
    const NFElement a = in_field(f, u.a()), b = in_field(f, u.b()), c = in_field(f, u.c()), d = in_field(f, u.d());
    Parametrization out{f, std::vector<QPoly>(n), QPoly(Rational(1)), u};
    if (c.is_zero()) {
        NFElement s = a / d, r = b / d;
        for (std::size_t i = 0; i < n; ++i) out.numerators[i] = QPoly({r.coord(i), s.coord(i)});
        return out;
    }
    QPoly big_m = min_poly_over_q(-d / c);
    LPoly m = exact_div(lift(big_m), LPoly({d, c}));
    LPoly num = LPoly({b, a}) * m;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> coeffs;
        for (const auto& x : num.coeffs()) coeffs.push_back(x.coord(i));
        out.numerators[i] = QPoly(std::move(coeffs));
    }
    out.denominator = big_m;
    return out;
}

ReducedForm reduced_form(const MoebiusUnit& u) {
    const auto& [a, b, c, d] = std::tie(u.a(), u.b(), u.c(), u.d());
    if (c.is_zero()) return {MoebiusUnit::identity(u.field()), a / d, b / d};
    MoebiusUnit star(u.field(), NFElement(0), NFElement(1), NFElement(1), d / c);
    return {star, (b * c - a * d) / (c * c), a / c};
}

int hc_degree(const MoebiusUnit& u) {
    if (u.c().is_zero()) return 1;
    return min_poly_over_q(-u.d() / u.c()).degree();
}

bool is_line(const MoebiusUnit& u) { return hc_degree(u) == 1; }

bool is_primitive(const MoebiusUnit& u, const FieldPtr& field) {
    const FieldPtr f = field_of(u, field);
    return hc_degree(u) == static_cast<int>(f->degree());
}

ProjectivePoint points_at_infinity_principal(const FieldPtr& field) {
    const std::size_t n = field->degree();
    if (n < 2) throw MathError("points at infinity need a field of degree at least 2");
    LPoly m = exact_div(lift(field->minpoly()), LPoly({-NFElement::generator(field), NFElement(1)}));
    std::vector<NFElement> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(in_field(field, m.coeff(i)));
    c.push_back(NFElement::from_rational(field, 0));
    return ProjectivePoint(std::move(c));
}

NFElement inverse_point_map(const MoebiusUnit& u, const std::vector<NFElement>& point) {
    const FieldPtr f = field_of(u, nullptr);
    if (point.size() != f->degree()) throw MathError("point dimension does not match the field degree");
    NFElement s = NFElement::from_rational(f, 0), a = NFElement::from_rational(f, 1);
    for (const auto& x : point) {
        s = s + x * a;
        a = a * NFElement::generator(f);
    }
    NFElement den = u.c() * s - u.a();
    if (den.is_zero()) throw MathError("the exception point a/c is not reached by the parametrization");
    return (-u.d() * s + u.b()) / den;
}

LRatFunc inverse_point_map(const MoebiusUnit& u, const Parametrization& phi) {
    LPoly n = phi.recombined_numerator();
    LPoly m = lift(phi.denominator);
    LPoly num = n.scaled(-u.d()) + m.scaled(u.b());
    LPoly den = n.scaled(u.c()) - m.scaled(u.a());
    if (den.is_zero()) throw MathError("parametrization is constantly the exception point");
    return LRatFunc(num, den);
}

MoebiusUnit unit_through_three_points(const NFElement& y1, const NFElement& y2, const NFElement& y3) {
    if (y1 == y2 || y2 == y3 || y1 == y3) throw MathError("three distinct points are required");
    return MoebiusUnit(y1 * y3 - y3 * y2, y1 * y2 - y1 * y3, y1 - y2, y2 - y3);
}

MoebiusUnit unit_through_three_points(const FieldPtr& field, const std::vector<std::vector<Rational>>& points) {
    if (points.size() != 3) throw MathError("exactly three points are required");
    return unit_through_three_points(from_coords(field, points[0]), from_coords(field, points[1]),
                                     from_coords(field, points[2]));
}

std::optional<MoebiusUnit> same_hypercircle(const Parametrization& phi, const Parametrization& psi) {
    if (!psi.unit) throw MathError("the second parametrization needs its generating unit");
    if (phi.dim() != psi.dim()) return std::nullopt;
    Parametrization phi_in_psi = phi;
    phi_in_psi.field = psi.field;
    LRatFunc tau;
    try {
        tau = inverse_point_map(*psi.unit, phi_in_psi);
    } catch (const MathError&) {
        return std::nullopt;
    }
    if (tau.num().degree() > 1 || tau.den().degree() > 1 || tau.degree() < 1) return std::nullopt;
    auto rational = [](const LPoly& p) {
        return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const NFElement& x) { return x.is_rational(); });
    };
    if (!rational(tau.num()) || !rational(tau.den())) return std::nullopt;
    MoebiusUnit t(tau.num().coeff(1).to_rational(), tau.num().coeff(0).to_rational(), tau.den().coeff(1).to_rational(),
                  tau.den().coeff(0).to_rational());
    QRatFunc qt(QPoly({t.b().to_rational(), t.a().to_rational()}), QPoly({t.d().to_rational(), t.c().to_rational()}));
    for (std::size_t i = 0; i < phi.dim(); ++i)
        if (!(compose(psi.component(i), qt) == phi.component(i))) return std::nullopt;
    return t;
}

bool tangent_infinity_check(const Parametrization& phi) {
    const QPoly& m = phi.denominator;
    const QPoly& p = phi.numerators.back();
    QPoly w = derivative(m) * p - m * derivative(p);
    return gcd(w, m).degree() == 0;
}

}  // namespace hc
