#include "hypercircle/multipoly.hpp"

#include <sstream>

namespace hc {

std::pair<QMulti, Rational> normalized(const QMulti& p) {
    if (p.is_zero()) return {p, Rational(1)};
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational s(g, l);
    if (p.leading_coeff().sign() < 0) s = -s;
    return {p.scaled(s.inverse()), s};
}

std::vector<QMulti> alpha_split(const LMulti& p, std::size_t n) {
    std::vector<QMulti> out(n, QMulti(p.nvars(), Rational(0)));
    for (const auto& [e, c] : p.terms())
        for (std::size_t j = 0; j < n; ++j) out[j].add_term(e, c.coord(j));
    return out;
}

LMulti recombine(const std::vector<QMulti>& comps, const FieldPtr& field) {
    std::size_t nv = 0;
    for (const auto& q : comps) nv = std::max(nv, q.nvars());
    LMulti out(nv, NFElement(0));
    NFElement a = NFElement::from_rational(field, 1), gen = NFElement::generator(field);
    for (const auto& q : comps) {
        const QMulti comp = q.promoted(nv);
        for (const auto& [e, c] : comp.terms()) out.add_term(e, a * NFElement(c));
        a = a * gen;
    }
    return out;
}

LMulti lift(const QMulti& p) {
    return p.map([](const Rational& c) { return NFElement(c); });
}

std::vector<std::string> variable_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

namespace {

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string rational_text(const Rational& r) {
    return r.is_integer() ? r.numerator().get_str() : r.numerator().get_str() + "/" + r.denominator().get_str();
}

}  // namespace

std::string render(const QMulti& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mono = monomial_text(e, names);
        Rational mag = c.abs();
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (mono.empty())
            os << rational_text(mag);
        else if (mag.is_one())
            os << mono;
        else
            os << rational_text(mag) << "*" << mono;
        first = false;
    }
    return os.str();
}

std::string render(const LMulti& p, const std::vector<std::string>& names, const std::string& alpha) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mono = monomial_text(e, names);
        if (!first) os << "+";
        os << "(" << c.str(alpha) << ")";
        if (!mono.empty()) os << "*" << mono;
        first = false;
    }
    return os.str();
}

}  // namespace hc
