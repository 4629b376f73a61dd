#ifndef HC_TEST_SUPPORT_HPP
#define HC_TEST_SUPPORT_HPP

#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hypercircle/multipoly.hpp"
#include "hypercircle/number_field.hpp"
#include "hypercircle/ratfunc.hpp"

namespace hct {

using namespace hc;

inline Rational q(const char* s) { return Rational::parse(s); }

inline QPoly qp(std::initializer_list<Rational> c) { return QPoly(std::vector<Rational>(c)); }

inline FieldPtr field(std::initializer_list<Rational> minpoly) { return NumberField::create(qp(minpoly)); }

inline NFElement el(const FieldPtr& f, std::initializer_list<Rational> c) { return NFElement(f, std::vector<Rational>(c)); }

inline LPoly lp(std::initializer_list<NFElement> c) { return LPoly(std::vector<NFElement>(c)); }

// Certified random field of the given degree with small integer coefficients.
inline FieldPtr random_field(std::mt19937& rng, int degree, int height = 3) {
    std::uniform_int_distribution<int> dist(-height, height);
    while (true) {
        std::vector<Rational> c;
        for (int i = 0; i < degree; ++i) c.emplace_back(dist(rng));
        c.emplace_back(1);
        if (c[0].is_zero()) continue;
        auto cert = certify_irreducible(QPoly(c));
        if (cert.verdict == Verdict::Irreducible) return NumberField::create(QPoly(c));
    }
}

inline NFElement random_element(std::mt19937& rng, const FieldPtr& f, int height = 3) {
    std::uniform_int_distribution<int> dist(-height, height);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f->degree(); ++i) c.emplace_back(dist(rng));
    return NFElement(f, c);
}

inline NFElement random_nonzero(std::mt19937& rng, const FieldPtr& f, int height = 3) {
    while (true) {
        auto x = random_element(rng, f, height);
        if (!x.is_zero()) return x;
    }
}

}  // namespace hct

namespace hc {

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
inline std::ostream& operator<<(std::ostream& os, const NFElement& x) { return os << x.str(); }

template <class T>
std::ostream& operator<<(std::ostream& os, const UniPoly<T>& p) {
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p.coeffs()[i];
    return os << "]";
}

}  // namespace hc

#endif
