#ifndef HYPERCIRCLE_UNIPOLY_HPP
#define HYPERCIRCLE_UNIPOLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hypercircle/errors.hpp"

namespace hc {

/// Dense univariate polynomial, coefficients stored low to high.
///
/// T must provide value semantics, T(0), T(1), is_zero() and the ring
/// operators. Division-based algorithms (divmod, gcd, ...) additionally
/// require T to be a field. The representation is trimmed: the leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
template <class T>
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(T constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(T coeff, std::size_t k) {
        if (coeff.is_zero()) return {};
        std::vector<T> c(k + 1, T(0));
        c[k] = std::move(coeff);
        return UniPoly(std::move(c));
    }
    static UniPoly x() { return monomial(T(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const {
        if (c_.empty()) throw MathError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return UniPoly<U>(std::move(out));
    }

    /// Horner evaluation at a value of a possibly different type.
    template <class U>
    U operator()(const U& x) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const T& s) const {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
UniPoly<T> derivative(const UniPoly<T>& p) {
    if (p.degree() < 1) return {};
    std::vector<T> r;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) r.push_back(p.coeffs()[i] * T(static_cast<long>(i)));
    return UniPoly<T>(std::move(r));
}

template <class T>
UniPoly<T> pow(const UniPoly<T>& p, unsigned k) {
    UniPoly<T> r(T(1)), base = p;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

/// Quotient and remainder over a field.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<T>(), a};
    std::vector<T> rem = a.coeffs();
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
    const T lead_inv = T(1) / b.leading();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        T q = rem[k + db] * lead_inv;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * bc[j];
        quo[k] = std::move(q);
    }
    rem.resize(db);
    return {UniPoly<T>(std::move(quo)), UniPoly<T>(std::move(rem))};
}

/// a / b, throwing when b does not divide a.
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

template <class T>
UniPoly<T> monic(const UniPoly<T>& p) {
    if (p.is_zero()) return p;
    return p.scaled(T(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        auto r = monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
struct XgcdResult {
    UniPoly<T> g, s, t;
};

template <class T>
XgcdResult<T> xgcd(const UniPoly<T>& a, const UniPoly<T>& b) {
    UniPoly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// p(q(t)).
template <class T>
UniPoly<T> compose(const UniPoly<T>& p, const UniPoly<T>& q) {
    UniPoly<T> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + UniPoly<T>(*it);
    return acc;
}

}  // namespace hc

#endif  // HYPERCIRCLE_UNIPOLY_HPP
