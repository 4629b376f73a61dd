#ifndef HYPERCIRCLE_RATIONAL_HPP
#define HYPERCIRCLE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace hc {

/// Exact rational number in canonical form: reduced, positive denominator,
/// zero represented as 0/1.
class Rational {
   public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class& num, const mpz_class& den = 1);
    explicit Rational(mpq_class v);

    /// Accepts "p", "-p", "p/q" with optional sign on either part.
    static Rational parse(std::string_view text);

    /// Always "p/q", e.g. "2/1", "-1/2", "0/1".
    std::string str() const;

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational inverse() const;
    Rational abs() const { return Rational(::abs(v_)); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class v_{0};
};

/// Fixed-point decimal rendering with `digits` places, rounded half away
/// from zero. Lossy; used only for plotting output.
std::string to_decimal(const Rational& x, int digits);

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace hc

#endif  // HYPERCIRCLE_RATIONAL_HPP
