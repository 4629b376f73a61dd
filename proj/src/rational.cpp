#include "hypercircle/rational.hpp"

#include <cctype>

#include "hypercircle/errors.hpp"

namespace hc {

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw SchemaError("empty integer in rational literal");
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw SchemaError("sign without digits in rational literal");
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw SchemaError("invalid character in rational literal: " + std::string(s));
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash)), den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw SchemaError("zero denominator in rational literal: " + std::string(text));
    return Rational(num, den);
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string to_decimal(const Rational& x, int digits) {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(x.numerator()) * scale;
    mpz_class den = x.denominator();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class q = (2 * num + den) / (2 * den);
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    if (x.sign() < 0 && q != 0) s.insert(0, "-");
    return s;
}

}  // namespace hc
