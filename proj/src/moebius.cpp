#include "hypercircle/moebius.hpp"

namespace hc {

namespace {

NFElement rebind(const FieldPtr& f, const NFElement& x) {
    if (!f) {
        if (x.has_field() && !x.is_rational()) throw MathError("unit coefficient outside the base field");
        return NFElement(x.coord(0));
    }
    if (x.has_field() && !same_field(x.field(), f)) throw FieldMismatch();
    return NFElement(f, x.coords(f->degree()));
}

FieldPtr pick_field(std::initializer_list<const NFElement*> xs) {
    FieldPtr f;
    for (const auto* x : xs) {
        if (!x->has_field()) continue;
        if (!f)
            f = x->field();
        else if (!same_field(f, x->field()))
            throw FieldMismatch();
    }
    return f;
}

}  // namespace

MoebiusUnit::MoebiusUnit(NFElement a, NFElement b, NFElement c, NFElement d)
    : MoebiusUnit(pick_field({&a, &b, &c, &d}), a, b, c, d) {}

MoebiusUnit::MoebiusUnit(const FieldPtr& field, const NFElement& a, const NFElement& b, const NFElement& c,
                         const NFElement& d)
    : a_(rebind(field, a)), b_(rebind(field, b)), c_(rebind(field, c)), d_(rebind(field, d)), field_(field) {
    if (determinant().is_zero()) throw MathError("degenerate unit: ad - bc = 0");
}

MoebiusUnit MoebiusUnit::identity(const FieldPtr& field) { return MoebiusUnit(field, 1, 0, 0, 1); }

bool MoebiusUnit::is_rational() const {
    return a_.is_rational() && b_.is_rational() && c_.is_rational() && d_.is_rational();
}

MoebiusUnit MoebiusUnit::inverse() const { return MoebiusUnit(field_, -d_, b_, c_, -a_); }

std::optional<NFElement> MoebiusUnit::operator()(const NFElement& t) const {
    NFElement den = c_ * t + d_;
    if (den.is_zero()) return std::nullopt;
    return (a_ * t + b_) / den;
}

std::optional<NFElement> MoebiusUnit::at_infinity() const {
    if (c_.is_zero()) return std::nullopt;
    return a_ / c_;
}

LRatFunc MoebiusUnit::as_ratfunc() const { return LRatFunc(LPoly({b_, a_}), LPoly({d_, c_})); }

MoebiusUnit MoebiusUnit::normalized() const {
    NFElement s = c_.is_zero() ? d_.inverse() : c_.inverse();
    return MoebiusUnit(field_, a_ * s, b_ * s, c_ * s, d_ * s);
}

bool operator==(const MoebiusUnit& u, const MoebiusUnit& w) {
    if (u.field_ && w.field_ && !same_field(u.field_, w.field_)) return false;
    // [a:b:c:d] proportional
    return u.a_ * w.b_ == u.b_ * w.a_ && u.a_ * w.c_ == u.c_ * w.a_ && u.a_ * w.d_ == u.d_ * w.a_ &&
           u.b_ * w.c_ == u.c_ * w.b_ && u.b_ * w.d_ == u.d_ * w.b_ && u.c_ * w.d_ == u.d_ * w.c_;
}

MoebiusUnit compose(const MoebiusUnit& u, const MoebiusUnit& w) {
    FieldPtr f = u.field() ? u.field() : w.field();
    if (u.field() && w.field() && !same_field(u.field(), w.field())) throw FieldMismatch();
    return MoebiusUnit(f, u.a() * w.a() + u.b() * w.c(), u.a() * w.b() + u.b() * w.d(), u.c() * w.a() + u.d() * w.c(),
                       u.c() * w.b() + u.d() * w.d());
}

}  // namespace hc
