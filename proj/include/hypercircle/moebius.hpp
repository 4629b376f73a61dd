#ifndef HYPERCIRCLE_MOEBIUS_HPP
#define HYPERCIRCLE_MOEBIUS_HPP

#include <optional>

#include "hypercircle/number_field.hpp"
#include "hypercircle/ratfunc.hpp"

namespace hc {

/// u(t) = (a t + b) / (c t + d) with ad - bc != 0. The field may be null when
/// all four coefficients are rational.
class MoebiusUnit {
   public:
    /// Throws MathError when ad - bc = 0, FieldMismatch on mixed fields.
    MoebiusUnit(NFElement a, NFElement b, NFElement c, NFElement d);
    MoebiusUnit(const FieldPtr& field, const NFElement& a, const NFElement& b, const NFElement& c, const NFElement& d);

    static MoebiusUnit identity(const FieldPtr& field = nullptr);

    const NFElement& a() const { return a_; }
    const NFElement& b() const { return b_; }
    const NFElement& c() const { return c_; }
    const NFElement& d() const { return d_; }
    const FieldPtr& field() const { return field_; }

    NFElement determinant() const { return a_ * d_ - b_ * c_; }
    bool is_polynomial() const { return c_.is_zero(); }
    bool is_rational() const;

    /// (-d t + b) / (c t - a)
    MoebiusUnit inverse() const;

    /// nullopt at the pole.
    std::optional<NFElement> operator()(const NFElement& t) const;
    /// a/c, or nullopt (the point at infinity) when c = 0.
    std::optional<NFElement> at_infinity() const;

    LRatFunc as_ratfunc() const;

    /// Projective representative with c = 1, or d = 1 when c = 0.
    MoebiusUnit normalized() const;

    /// Equality as rational functions (projective equality of coefficients).
    friend bool operator==(const MoebiusUnit& u, const MoebiusUnit& w);

   private:
    NFElement a_, b_, c_, d_;
    FieldPtr field_;
};

/// u o w, i.e. the matrix product of the coefficient matrices.
MoebiusUnit compose(const MoebiusUnit& u, const MoebiusUnit& w);

}  // namespace hc

#endif  // HYPERCIRCLE_MOEBIUS_HPP
