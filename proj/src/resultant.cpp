#include "hypercircle/resultant.hpp"

namespace hc {

Rationalized rationalize_denominator(const LMulti& den, const FieldPtr& field) {
    if (den.is_zero()) throw MathError("zero denominator");
    const std::size_t nv = den.nvars();
    bool rational = true;
    for (const auto& [e, c] : den.terms()) rational = rational && c.is_rational();
    if (rational || !field) {
        QMulti q = den.map([](const NFElement& c) { return c.to_rational(); });
        return {q, LMulti(nv, NFElement(1))};
    }

    const std::size_t n = field->degree();
    // D with alpha replaced by y, as a polynomial in y over Q[x].
    auto comps = alpha_split(den, n);
    UniPoly<QMulti> dy(std::move(comps));
    UniPoly<QMulti> my = field->minpoly().map([nv](const Rational& c) { return QMulti(nv, c); });
    QMulti norm = sylvester_resultant(my, dy);
    if (norm.is_zero()) throw MathError("denominator is a zero divisor");
    LMulti cofactor = exact_div(lift(norm).promoted(nv), den);
    return {norm, cofactor};
}

std::vector<QRatFunc> alpha_components(const LRatFunc& f, const FieldPtr& field) {
    const std::size_t n = field ? field->degree() : 1;
    auto r = rationalize_denominator(to_multi(f.den()), field);
    LMulti num = to_multi(f.num()) * r.cofactor;
    auto parts = alpha_split(num, n);
    QPoly den = to_uni(r.norm);
    std::vector<QRatFunc> out;
    out.reserve(n);
    for (const auto& p : parts) out.emplace_back(to_uni(p), den);
    return out;
}

}  // namespace hc
