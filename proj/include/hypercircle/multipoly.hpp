#ifndef HYPERCIRCLE_MULTIPOLY_HPP
#define HYPERCIRCLE_MULTIPOLY_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hypercircle/errors.hpp"
#include "hypercircle/number_field.hpp"
#include "hypercircle/rational.hpp"

namespace hc {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lex with x0 > x1 > ...; the map iterates from the leading term down.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial. A polynomial with zero variables is a
/// constant and is promoted to the other operand's arity in mixed arithmetic.
template <class T>
class MultiPoly {
   public:
    using Terms = std::map<Exponent, T, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(T constant) {
        if (!constant.is_zero()) terms_.emplace(Exponent{}, std::move(constant));
    }
    template <std::integral I>
    MultiPoly(I v) : MultiPoly(T(v)) {}
    MultiPoly(std::size_t nvars, T constant) : nvars_(nvars) {
        if (!constant.is_zero()) terms_.emplace(Exponent(nvars, 0), std::move(constant));
    }

    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        Exponent e(nvars, 0);
        e.at(i) = 1;
        return monomial(std::move(e), T(1));
    }
    static MultiPoly monomial(Exponent e, T coeff) {
        MultiPoly p;
        p.nvars_ = e.size();
        if (!coeff.is_zero()) p.terms_.emplace(std::move(e), std::move(coeff));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && hc::total_degree(terms_.begin()->first) == 0); }
    T constant_term() const {
        for (const auto& [e, c] : terms_)
            if (hc::total_degree(e) == 0) return c;
        return T(0);
    }
    int total_degree() const { return terms_.empty() ? -1 : hc::total_degree(terms_.begin()->first); }
    int degree_in(std::size_t i) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }
    const Exponent& leading_exponent() const {
        if (terms_.empty()) throw MathError("leading term of the zero polynomial");
        return terms_.begin()->first;
    }
    const T& leading_coeff() const {
        if (terms_.empty()) throw MathError("leading term of the zero polynomial");
        return terms_.begin()->second;
    }

    /// Same polynomial viewed in `n` variables (n >= nvars, or nvars == 0).
    MultiPoly promoted(std::size_t n) const {
        if (n == nvars_) return *this;
        if (nvars_ != 0) throw MathError("multivariate arity mismatch");
        MultiPoly p;
        p.nvars_ = n;
        for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent(n, 0), c);
        return p;
    }

    void add_term(const Exponent& e, const T& c) {
        if (c.is_zero()) return;
        if (terms_.empty() && nvars_ == 0) nvars_ = e.size();
        if (e.size() != nvars_) throw MathError("multivariate arity mismatch");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        MultiPoly<U> out = MultiPoly<U>(nvars_, U(0));
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        if (&o == this) return *this = *this + MultiPoly(o);
        align(o);
        if (o.nvars_ == nvars_) {
            for (const auto& [e, c] : o.terms_) add_term(e, c);
        } else {
            const MultiPoly other = o.promoted(nvars_);
            for (const auto& [e, c] : other.terms_) add_term(e, c);
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        if (&o == this) return *this = *this - MultiPoly(o);
        align(o);
        if (o.nvars_ == nvars_) {
            for (const auto& [e, c] : o.terms_) add_term(e, -c);
        } else {
            const MultiPoly other = o.promoted(nvars_);
            for (const auto& [e, c] : other.terms_) add_term(e, -c);
        }
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        const std::size_t n = std::max(a.nvars_, b.nvars_);
        MultiPoly r(n, T(0));
        if (a.is_zero() || b.is_zero()) return r;
        const MultiPoly& x = a.nvars_ == n ? a : a.promoted(n);
        const MultiPoly& y = b.nvars_ == n ? b : b.promoted(n);
        Exponent e(n);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const T& s) const {
        MultiPoly r(nvars_, T(0));
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.nvars_ != b.nvars_ && a.nvars_ != 0 && b.nvars_ != 0) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->second == ib->second)) return false;
            if (hc::total_degree(ia->first) != hc::total_degree(ib->first)) return false;
            if (hc::total_degree(ia->first) != 0 && ia->first != ib->first) return false;
        }
        return true;
    }

    /// Value at a point; U must be constructible from T and support ring ops.
    template <class U>
    U evaluate(const std::vector<U>& x) const {
        if (x.size() < nvars_) throw MathError("evaluation point has too few coordinates");
        U acc = U(0);
        std::vector<std::vector<U>> powers(nvars_);
        for (const auto& [e, c] : terms_) {
            U term = U(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(U(1));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * x[i]);
                term = term * pw[static_cast<std::size_t>(e[i])];
            }
            acc = acc + term;
        }
        return acc;
    }

   private:
    void align(const MultiPoly& o) {
        if (nvars_ == o.nvars_ || o.nvars_ == 0) return;
        *this = promoted(o.nvars_);
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Exact quotient a / b over a field; throws MathError unless b divides a.
template <class T>
MultiPoly<T> exact_div(const MultiPoly<T>& a, const MultiPoly<T>& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    const std::size_t n = std::max(a.nvars(), b.nvars());
    MultiPoly<T> rem = a.promoted(n), quo(n, T(0));
    const MultiPoly<T> div = b.promoted(n);
    const Exponent& lb = div.leading_exponent();
    const T lb_inv = T(1) / div.leading_coeff();
    Exponent e(n);
    while (!rem.is_zero()) {
        const Exponent& lr = rem.leading_exponent();
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0) throw MathError("inexact polynomial division");
        }
        auto q = MultiPoly<T>::monomial(e, rem.leading_coeff() * lb_inv);
        rem -= q * div;
        quo += q;
    }
    return quo;
}

template <class T>
MultiPoly<T> pow(const MultiPoly<T>& p, unsigned k) {
    MultiPoly<T> r(p.nvars(), T(1)), base = p;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

using QMulti = MultiPoly<Rational>;
using LMulti = MultiPoly<NFElement>;

/// Returns (p / s, s) where p / s has coprime integer coefficients and a
/// positive leading coefficient. For p = 0 returns (0, 1).
std::pair<QMulti, Rational> normalized(const QMulti& p);

/// Coordinate split of an L-coefficient polynomial: component j collects the
/// alpha^j coordinates. Always returns n polynomials.
std::vector<QMulti> alpha_split(const LMulti& p, std::size_t n);

/// Sum_j comps[j] * alpha^j.
LMulti recombine(const std::vector<QMulti>& comps, const FieldPtr& field);

LMulti lift(const QMulti& p);

/// Rendering in grlex order, e.g. "X0^2+X3*X1-1".
std::string render(const QMulti& p, const std::vector<std::string>& names);
std::string render(const LMulti& p, const std::vector<std::string>& names, const std::string& alpha = "a");

std::vector<std::string> variable_names(const std::string& prefix, std::size_t n);

}  // namespace hc

#endif  // HYPERCIRCLE_MULTIPOLY_HPP
