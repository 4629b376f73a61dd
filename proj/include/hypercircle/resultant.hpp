#ifndef HYPERCIRCLE_RESULTANT_HPP
#define HYPERCIRCLE_RESULTANT_HPP

#include <vector>

#include "hypercircle/linalg.hpp"
#include "hypercircle/multipoly.hpp"
#include "hypercircle/ratfunc.hpp"
#include "hypercircle/unipoly.hpp"

namespace hc {

/// Determinant of the Sylvester matrix of p and q (Bareiss, fraction free).
/// Res(p, p) = 0; a constant operand c of the other's degree m gives c^m.
template <class T>
T sylvester_resultant(const UniPoly<T>& p, const UniPoly<T>& q) {
    if (p.is_zero() || q.is_zero()) return T(0);
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    if (size == 0) return T(1);
    Matrix<T> s(size, size);
    // Rows hold coefficients from the highest power down.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = p.coeffs()[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = q.coeffs()[n - k];
    return determinant(std::move(s));
}

struct Rationalized {
    QMulti norm;      // lies in Q[x]
    LMulti cofactor;  // norm = den * cofactor in L[x]
};

/// Clears the algebraic part of a denominator: norm = Res_y(M_alpha(y), D_y),
/// the product of D over all conjugates, and cofactor = norm / D exactly.
/// A denominator with rational coefficients is returned unchanged with
/// cofactor 1. Throws MathError when D is zero or a zero divisor.
Rationalized rationalize_denominator(const LMulti& den, const FieldPtr& field);

/// Components of f on the power basis: f = sum_i c_i alpha^i with c_i in Q(t).
std::vector<QRatFunc> alpha_components(const LRatFunc& f, const FieldPtr& field);

/// Univariate conversions to and from one-variable multivariate polynomials.
template <class T>
MultiPoly<T> to_multi(const UniPoly<T>& p) {
    MultiPoly<T> r(1, T(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term({static_cast<int>(i)}, p.coeffs()[i]);
    return r;
}

template <class T>
UniPoly<T> to_uni(const MultiPoly<T>& p) {
    if (p.nvars() > 1) throw MathError("expected a univariate polynomial");
    std::vector<T> c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, T(0));
    for (const auto& [e, v] : p.terms()) c[e.empty() ? 0 : static_cast<std::size_t>(e[0])] = v;
    return UniPoly<T>(std::move(c));
}

}  // namespace hc

#endif  // HYPERCIRCLE_RESULTANT_HPP
