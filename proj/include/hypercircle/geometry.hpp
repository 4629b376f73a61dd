#ifndef HYPERCIRCLE_GEOMETRY_HPP
#define HYPERCIRCLE_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypercircle/hypercircle.hpp"
#include "hypercircle/linalg.hpp"
#include "hypercircle/multipoly.hpp"

namespace hc {

enum class TransformKind { Affine, Projective, Embedding };

std::string to_string(TransformKind k);

struct TransformWitness {
    TransformKind kind;
    Matrix<Rational> matrix;
    /// Coordinates picked as the independent block, in order.
    std::vector<std::size_t> pivots;
};

/// Linear map Q with Q (p_0, ..., p_{n-1})^T = (1, t, ..., t^{r-1}, 0, ..., 0)^T
/// for the parametrization of a reduced unit 1/(t+d).
TransformWitness normal_curve_affine_map(const MoebiusUnit& u, const FieldPtr& field = nullptr);

/// (n+1)x(n+1) matrix with Q (p_0, ..., p_{n-1}, M)^T = (1, t, ..., t^r, 0, ..., 0)^T.
TransformWitness normal_curve_projective_map(const MoebiusUnit& u, const FieldPtr& field = nullptr);

/// Coefficient vectors of polynomials in the basis 1, t, ..., t^k, one row each.
Matrix<Rational> coefficient_rows(const std::vector<QPoly>& polys, std::size_t k);

struct QuadricSystem {
    FieldPtr field;
    std::size_t n = 0;
    std::vector<QMulti> homogeneous;  // in X_0..X_n, X_n the homogenizing variable
    std::vector<QMulti> affine;       // X_n = 1
};

/// Generators Y_i Y_{j+1} - Y_{i+1} Y_j (0 <= i < j < n) pulled back along Y = Q X,
/// where Q carries {q_0, ..., q_{n-1}, N} onto {1, t, ..., t^n}.
QuadricSystem implicitize_normal(const Parametrization& phi);
/// Same for a parametrization with coefficients in an extension K(beta); the
/// generators are split into their beta-components.
QuadricSystem implicitize_normal(const FieldPtr& field, const std::vector<LPoly>& numerators, const LPoly& denominator);

struct InverseUnitEquations {
    std::vector<QMulti> r;  // r_1, ..., r_{n-1}
    QMulti r0;
    QMulti s;
};

/// v(sum alpha^i X_i) = sum r_i / s alpha^i for the inverse v of u, jointly
/// normalized so that s has coprime integer coefficients and positive leading term.
InverseUnitEquations inverse_unit_equations(const MoebiusUnit& u, const FieldPtr& field = nullptr);

struct AffineEquivalence {
    std::optional<MoebiusUnit> tau;  // over Q, tau = tau1 t + tau0
    /// False when a negative answer may come from restricting the search to affine tau.
    bool complete = true;
};

/// Affine tau with M_2(tau(t)) = tau1^r M_1(t), mapping the pole -d_1/c_1 to a
/// root of M_2 (to -d_2/c_2 itself when such a tau exists).
AffineEquivalence affine_equivalence_witness(const MoebiusUnit& u1, const MoebiusUnit& u2);

struct Embedding {
    TransformWitness witness;  // n x r, columns are the coordinates of d^j
    FieldPtr subfield;         // Q(d) with generator d
    MoebiusUnit unit;          // 1/(t + d) over the subfield
    Parametrization sub_parametrization;
};

Embedding embed_nonprimitive(const MoebiusUnit& u, const FieldPtr& field = nullptr);

struct HypercircleCheck {
    std::optional<MoebiusUnit> witness;
    std::string stage;  // "ok" or the first stage that failed
    std::vector<std::vector<Rational>> points;
};

/// Staged check that phi (over Q) parametrizes a primitive hypercircle of the
/// given field: three rational points, the unit through them, same curve,
/// and vanishing of the implicit equations at the principal point at infinity.
HypercircleCheck verify_hypercircle(const Parametrization& phi, const FieldPtr& field);

/// Rational parameters 0, 1, -1, 2, -2, 1/2, -1/2, ... of height at most h.
std::vector<Rational> rationals_by_height(int h);

}  // namespace hc

#endif  // HYPERCIRCLE_GEOMETRY_HPP
