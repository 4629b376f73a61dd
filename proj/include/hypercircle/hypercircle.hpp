#ifndef HYPERCIRCLE_HYPERCIRCLE_HPP
#define HYPERCIRCLE_HYPERCIRCLE_HPP

#include <optional>
#include <vector>

#include "hypercircle/moebius.hpp"
#include "hypercircle/number_field.hpp"
#include "hypercircle/ratfunc.hpp"

namespace hc {

using QCurve = std::vector<QRatFunc>;
using LCurve = std::vector<LRatFunc>;

/// (p_0/M, ..., p_{n-1}/M) over Q with a monic common denominator.
struct Parametrization {
    FieldPtr field;
    std::vector<QPoly> numerators;
    QPoly denominator;
    std::optional<MoebiusUnit> unit;

    std::size_t dim() const { return numerators.size(); }
    /// max(deg p_i, deg M)
    int degree() const;
    QRatFunc component(std::size_t i) const { return QRatFunc(numerators.at(i), denominator); }
    QCurve components() const;
    /// Throws MathError at a root of the denominator.
    std::vector<Rational> at(const Rational& t) const;
    /// sum_i p_i alpha^i as a polynomial over L (the numerator of u).
    LPoly recombined_numerator() const;

    friend bool operator==(const Parametrization& a, const Parametrization& b) {
        return same_field(a.field, b.field) && a.numerators == b.numerators && a.denominator == b.denominator;
    }
};

/// Builds a Parametrization from arbitrary components by putting them over a
/// common monic denominator.
Parametrization from_components(const FieldPtr& field, const QCurve& comps);

/// Homogeneous coordinates over L, not all zero.
class ProjectivePoint {
   public:
    explicit ProjectivePoint(std::vector<NFElement> coords);
    const std::vector<NFElement>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    /// First nonzero coordinate scaled to 1.
    ProjectivePoint normalized() const;
    friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q);

   private:
    std::vector<NFElement> coords_;
};

Parametrization parametrize_unit(const MoebiusUnit& u, const FieldPtr& field = nullptr);

struct ReducedForm {
    MoebiusUnit reduced;
    NFElement lambda1, lambda2;  // u = lambda1 * reduced + lambda2
};
ReducedForm reduced_form(const MoebiusUnit& u);

bool is_line(const MoebiusUnit& u);
int hc_degree(const MoebiusUnit& u);
bool is_primitive(const MoebiusUnit& u, const FieldPtr& field = nullptr);

/// [l_0 : ... : l_{n-2} : 1 : 0] with M_alpha(t) / (t - alpha) = sum l_i t^i.
ProjectivePoint points_at_infinity_principal(const FieldPtr& field);

/// (-d S + b) / (c S - a) with S = sum X_i alpha^i. Throws MathError at the
/// unreachable point S = a/c.
NFElement inverse_point_map(const MoebiusUnit& u, const std::vector<NFElement>& point);
/// The same map applied to a parametrization, as a rational function of t.
LRatFunc inverse_point_map(const MoebiusUnit& u, const Parametrization& phi);

/// The unit with u(0) = Y1, u(1) = Y2, u(infinity) = Y3.
MoebiusUnit unit_through_three_points(const NFElement& y1, const NFElement& y2, const NFElement& y3);
MoebiusUnit unit_through_three_points(const FieldPtr& field, const std::vector<std::vector<Rational>>& points);

/// A Q-unit tau with psi(tau(t)) = phi(t), when both parametrize the same
/// hypercircle; requires psi.unit.
std::optional<MoebiusUnit> same_hypercircle(const Parametrization& phi, const Parametrization& psi);

/// gcd(M' p_{n-1} - M p'_{n-1}, M) = 1
bool tangent_infinity_check(const Parametrization& phi);

/// Element of L with coordinates x.
NFElement from_coords(const FieldPtr& field, const std::vector<Rational>& x);

}  // namespace hc

#endif  // HYPERCIRCLE_HYPERCIRCLE_HPP
