#ifndef HYPERCIRCLE_RATFUNC_HPP
#define HYPERCIRCLE_RATFUNC_HPP

#include <algorithm>
#include <utility>

#include "hypercircle/errors.hpp"
#include "hypercircle/number_field.hpp"
#include "hypercircle/unipoly.hpp"

namespace hc {

/// Univariate rational function over a field, kept in lowest terms with a
/// monic denominator.
template <class T>
class RatFunc {
   public:
    RatFunc() : den_(T(1)) {}
    RatFunc(UniPoly<T> num) : num_(std::move(num)), den_(T(1)) {}
    RatFunc(UniPoly<T> num, UniPoly<T> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    RatFunc(T c) : RatFunc(UniPoly<T>(std::move(c))) {}
    template <std::integral I>
    RatFunc(I v) : RatFunc(UniPoly<T>(T(v))) {}

    static RatFunc t() { return RatFunc(UniPoly<T>::x()); }

    const UniPoly<T>& num() const { return num_; }
    const UniPoly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// max(deg num, deg den)
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        return RatFunc<U>(num_.map(f), den_.map(f));
    }

    /// Throws MathError at a pole.
    template <class U>
    U operator()(const U& x) const {
        U d = den_(x);
        if (d.is_zero()) throw MathError("evaluation at a pole");
        return num_(x) / d;
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, Trusted{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw MathError("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    struct Trusted {};
    RatFunc(UniPoly<T> num, UniPoly<T> den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw MathError("zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<T>(T(1));
            return;
        }
        if (den_.degree() > 0) {
            UniPoly<T> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        T lc = den_.leading();
        if (!lc.is_one()) {
            T inv = T(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    UniPoly<T> num_, den_;
};

/// f(g(t)), computed by homogenizing f to degree max(deg num, deg den).
template <class T>
RatFunc<T> compose(const RatFunc<T>& f, const RatFunc<T>& g) {
    const int k = f.degree();
    if (k <= 0) return f;
    const UniPoly<T>& gn = g.num();
    const UniPoly<T>& gd = g.den();
    std::vector<UniPoly<T>> np(static_cast<std::size_t>(k) + 1), dp(static_cast<std::size_t>(k) + 1);
    np[0] = UniPoly<T>(T(1));
    dp[0] = UniPoly<T>(T(1));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
        np[i] = np[i - 1] * gn;
        dp[i] = dp[i - 1] * gd;
    }
    auto homog = [&](const UniPoly<T>& p) {
        UniPoly<T> acc;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i].is_zero()) continue;
            acc += (np[i] * dp[static_cast<std::size_t>(k) - i]).scaled(p.coeffs()[i]);
        }
        return acc;
    };
    return RatFunc<T>(homog(f.num()), homog(f.den()));
}

using QRatFunc = RatFunc<Rational>;
using LRatFunc = RatFunc<NFElement>;

inline LRatFunc lift(const QRatFunc& f) {
    return f.map([](const Rational& c) { return NFElement(c); });
}

}  // namespace hc

#endif  // HYPERCIRCLE_RATFUNC_HPP
