#ifndef HYPERCIRCLE_WEIL_HPP
#define HYPERCIRCLE_WEIL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypercircle/geometry.hpp"
#include "hypercircle/hypercircle.hpp"
#include "hypercircle/multipoly.hpp"

namespace hc {

/// eta_i(sum_j t_j alpha^j) = sum_j components[i][j] / denominator * alpha^j
struct WeilSystem {
    FieldPtr field;
    std::vector<std::vector<QMulti>> components;
    QMulti denominator;

    /// The q_ij with j >= 1.
    std::vector<QMulti> delta_set() const;
};

WeilSystem descente(const LCurve& eta, const FieldPtr& field);

/// True iff every polynomial vanishes identically on the curve.
bool verify_vanishing(const std::vector<QMulti>& polys, const QCurve& curve);
bool verify_vanishing(const std::vector<QMulti>& polys, const LCurve& curve);

/// Distinct affine points phi(t) for rationals t of height <= h, in that order.
std::vector<std::vector<Rational>> find_rational_points(const Parametrization& phi, int height);
/// Rational points psi(t) for t = sum c_j alpha^j with every c_j in the grid,
/// in lexicographic order of (c_0, ..., c_{n-1}).
std::vector<std::vector<Rational>> find_rational_points(const LCurve& psi, const FieldPtr& field,
                                                        const std::vector<Rational>& grid);

/// eta(u(t)) over Q; throws MathError when some component keeps an algebraic coefficient.
QCurve reparametrize(const LCurve& eta, const MoebiusUnit& u);

struct StageReport {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

struct PipelineResult {
    bool ok = false;
    std::vector<StageReport> stages;
    std::optional<MoebiusUnit> unit;
    QCurve eta_q;
    std::vector<std::vector<Rational>> points;
};

struct PipelineOptions {
    std::vector<Rational> grid = rationals_by_height(2);
};

/// Descente check of psi, three rational points, the unit through them (put in a
/// canonical form), certification of its hypercircle, and the reparametrization.
PipelineResult pipeline(const LCurve& eta, const LCurve& psi, const FieldPtr& field, const PipelineOptions& opts = {});

/// The representative Y3 + w/(t + e) of u's class under affine changes of
/// parameter, with e_0 = 0 and the first nonzero coordinate of w equal to 1.
/// Units with rational coefficients become t.
MoebiusUnit canonical_unit(const MoebiusUnit& u, const FieldPtr& field);

}  // namespace hc

#endif  // HYPERCIRCLE_WEIL_HPP
