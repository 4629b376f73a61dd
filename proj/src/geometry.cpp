#include "hypercircle/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "hypercircle/resultant.hpp"

namespace hc {

namespace {

FieldPtr field_for(const MoebiusUnit& u, const FieldPtr& given) {
    FieldPtr f = given ? given : u.field();
    if (!f) throw MathError("no number field given for the unit");
    return f;
}

// u = 1/(t + d) up to a common factor of the coefficients
void require_reduced(const MoebiusUnit& u) {
    if (u.c().is_zero()) throw MathError("polynomial unit: the hypercircle is a line");
    if (!u.a().is_zero() || !(u.b() / u.c()).is_one()) throw MathError("unit is not in reduced form 1/(t+d)");
}

// Greedy lex-first set of independent rows.
std::vector<std::size_t> independent_rows(const Matrix<Rational>& p) {
    std::vector<std::size_t> piv;
    std::vector<std::vector<Rational>> kept;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        kept.push_back(p.row(i));
        if (rank(Matrix<Rational>::from_rows(kept)) == kept.size())
            piv.push_back(i);
        else
            kept.pop_back();
    }
    return piv;
}

// Q with Q P = [I; 0] where P has full column rank; pivot rows map to the identity block.
TransformWitness block_transform(const Matrix<Rational>& p, TransformKind kind) {
    const std::size_t rows = p.rows(), cols = p.cols();
    auto piv = independent_rows(p);
    if (piv.size() != cols) throw MathError("coefficient rows do not span the expected space");
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < rows; ++i)
        if (!std::binary_search(piv.begin(), piv.end(), i)) rest.push_back(i);

    Matrix<Rational> b(cols, cols), c(rest.size(), cols);
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t j = 0; j < cols; ++j) b(k, j) = p(piv[k], j);
    for (std::size_t m = 0; m < rest.size(); ++m)
        for (std::size_t j = 0; j < cols; ++j) c(m, j) = p(rest[m], j);
    const Matrix<Rational> binv = inverse(b);
    const Matrix<Rational> cb = c * binv;

    Matrix<Rational> q(rows, rows);
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t j = 0; j < cols; ++j) q(k, piv[j]) = binv(k, j);
    for (std::size_t m = 0; m < rest.size(); ++m) {
        q(cols + m, rest[m]) = Rational(1);
        for (std::size_t j = 0; j < cols; ++j) q(cols + m, piv[j]) = -cb(m, j);
    }
    return {kind, std::move(q), std::move(piv)};
}

template <class T>
Matrix<T> power_basis_columns(const std::vector<UniPoly<T>>& polys, std::size_t k) {
    Matrix<T> m(k + 1, polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].degree() > static_cast<int>(k)) throw MathError("polynomial degree exceeds the basis");
        for (std::size_t j = 0; j <= k; ++j) m(j, i) = polys[i].coeff(j);
    }
    return m;
}

template <class T>
std::vector<MultiPoly<T>> normal_curve_pullback(const std::vector<UniPoly<T>>& numerators, const UniPoly<T>& den) {
    const std::size_t n = numerators.size();
    std::vector<UniPoly<T>> polys = numerators;
    polys.push_back(den);
    Matrix<T> cm = power_basis_columns(polys, n);
    Matrix<T> q;
    try {
        q = inverse(cm.transpose());
    } catch (const MathError&) {
        throw MathError("numerators and denominator are linearly dependent: not a primitive hypercircle parametrization");
    }
    std::vector<MultiPoly<T>> y;
    for (std::size_t k = 0; k <= n; ++k) {
        MultiPoly<T> acc(n + 1, T(0));
        for (std::size_t j = 0; j <= n; ++j)
            if (!q(k, j).is_zero()) acc += MultiPoly<T>::variable(n + 1, j).scaled(q(k, j));
        y.push_back(std::move(acc));
    }
    std::vector<MultiPoly<T>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(y[i] * y[j + 1] - y[i + 1] * y[j]);
    return out;
}

QMulti dehomogenize(const QMulti& p, std::size_t n) {
    QMulti out(n, Rational(0));
    for (const auto& [e, c] : p.terms()) out.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(n)), c);
    return out;
}

void finish(QuadricSystem& sys, const std::vector<QMulti>& raw) {
    for (const auto& g : raw) {
        if (g.is_zero()) continue;
        QMulti h = normalized(g).first;
        if (std::find(sys.homogeneous.begin(), sys.homogeneous.end(), h) != sys.homogeneous.end()) continue;
        sys.homogeneous.push_back(h);
        sys.affine.push_back(normalized(dehomogenize(h, sys.n)).first);
    }
}

}  // namespace

std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::Affine: return "affine";
        case TransformKind::Projective: return "projective";
        case TransformKind::Embedding: return "embedding";
    }
    return "";
}

Matrix<Rational> coefficient_rows(const std::vector<QPoly>& polys, std::size_t k) {
    return power_basis_columns(polys, k).transpose();
}

TransformWitness normal_curve_affine_map(const MoebiusUnit& u, const FieldPtr& field) {
    require_reduced(u);
    const int r = hc_degree(u);
    if (r == 1) throw MathError("the hypercircle is a line");
    auto phi = parametrize_unit(u, field_for(u, field));
    return block_transform(coefficient_rows(phi.numerators, static_cast<std::size_t>(r) - 1), TransformKind::Affine);
}

TransformWitness normal_curve_projective_map(const MoebiusUnit& u, const FieldPtr& field) {
    require_reduced(u);
    const int r = hc_degree(u);
    if (r == 1) throw MathError("the hypercircle is a line");
    auto phi = parametrize_unit(u, field_for(u, field));
    std::vector<QPoly> polys = phi.numerators;
    polys.push_back(phi.denominator);
    return block_transform(coefficient_rows(polys, static_cast<std::size_t>(r)), TransformKind::Projective);
}

QuadricSystem implicitize_normal(const Parametrization& phi) {
    QuadricSystem sys{phi.field, phi.dim(), {}, {}};
    finish(sys, normal_curve_pullback(phi.numerators, phi.denominator));
    return sys;
}

QuadricSystem implicitize_normal(const FieldPtr& field, const std::vector<LPoly>& numerators, const LPoly& denominator) {
    QuadricSystem sys{field, numerators.size(), {}, {}};
    std::vector<QMulti> raw;
    for (const auto& g : normal_curve_pullback(numerators, denominator))
        for (auto& part : alpha_split(g, field->degree())) raw.push_back(part.promoted(sys.n + 1));
    finish(sys, raw);
    return sys;
}

InverseUnitEquations inverse_unit_equations(const MoebiusUnit& u, const FieldPtr& field) {
    const FieldPtr f = field_for(u, field);
    const std::size_t n = f->degree();
    LMulti s(n, NFElement(0));
    NFElement a = NFElement::from_rational(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
        s += LMulti::variable(n, i).scaled(a);
        a = a * NFElement::generator(f);
    }
    const LMulti num = s.scaled(-u.d()) + LMulti(n, u.b());
    const LMulti den = s.scaled(u.c()) - LMulti(n, u.a());
    const Rationalized rz = rationalize_denominator(den, f);
    auto comps = alpha_split(num * rz.cofactor, n);
    auto [s_norm, scale] = normalized(rz.norm.promoted(n));
    const Rational inv = Rational(1) / scale;
    InverseUnitEquations out;
    out.s = s_norm;
    out.r0 = comps[0].promoted(n).scaled(inv);
    for (std::size_t i = 1; i < n; ++i) out.r.push_back(comps[i].promoted(n).scaled(inv));
    return out;
}

AffineEquivalence affine_equivalence_witness(const MoebiusUnit& u1, const MoebiusUnit& u2) {
    if (u1.c().is_zero() || u2.c().is_zero()) throw MathError("affine equivalence test needs non-polynomial units");
    const NFElement g1 = -u1.d() / u1.c(), g2 = -u2.d() / u2.c();
    const QPoly m1 = min_poly_over_q(g1), m2 = min_poly_over_q(g2);
    const int r = m1.degree();
    if (r != m2.degree()) return {std::nullopt, true};

    auto maps_exactly = [&](const Rational& t1, const Rational& t0) {
        if (!same_field(g1.field(), g2.field()) && !(g1.is_rational() && g2.is_rational())) return false;
        return NFElement(t0) + g1 * NFElement(t1) == g2;
    };
    auto unit = [](const Rational& t1, const Rational& t0) {
        return MoebiusUnit(NFElement(t1), NFElement(t0), NFElement(0), NFElement(1));
    };

    if (r == 1) {
        Rational t0 = g2.to_rational() - g1.to_rational();
        return {unit(1, t0), true};
    }
    const FieldPtr f = g1.field();
    if (r == 2 && f && f->degree() == 2 && same_field(f, g2.field())) {
        // g_i = -(lambda_i + mu_i alpha)
        Rational l1 = -g1.coord(0), mu1 = -g1.coord(1), l2 = -g2.coord(0), mu2 = -g2.coord(1);
        return {unit(mu2 / mu1, (mu2 * l1 - mu1 * l2) / mu1), true};
    }

    // tau0 from the t^(r-1) coefficient, tau1 from the common roots of the rest
    const Rational rr(r);
    const QPoly tau0({-m2.coeff(static_cast<std::size_t>(r) - 1) / rr, m1.coeff(static_cast<std::size_t>(r) - 1) / rr});
    using BiPoly = UniPoly<QPoly>;
    const BiPoly x({tau0, QPoly::x()});
    BiPoly lhs;
    for (std::size_t k = m2.coeffs().size(); k-- > 0;) lhs = lhs * x + BiPoly(QPoly(m2.coeff(k)));
    const QPoly t1r = QPoly::monomial(Rational(1), static_cast<std::size_t>(r));
    QPoly cond;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(r); ++k) {
        QPoly ck = lhs.coeff(k) - t1r.scaled(m1.coeff(k));
        if (!ck.is_zero()) cond = cond.is_zero() ? ck : gcd(cond, ck);
    }
    if (cond.is_zero()) throw MathError("degenerate affine equivalence system");
    auto roots = rational_roots(cond);
    if (!roots) return {std::nullopt, false};

    std::optional<MoebiusUnit> best;
    for (const auto& t1 : *roots) {
        if (t1.is_zero()) continue;
        const Rational t0 = tau0(t1);
        Rational t1r_val(1);
        for (int k = 0; k < r; ++k) t1r_val *= t1;
        if (!(compose(m2, QPoly({t0, t1})) == m1.scaled(t1r_val))) continue;
        if (maps_exactly(t1, t0)) return {unit(t1, t0), true};
        if (!best) best = unit(t1, t0);
    }
    return {best, best.has_value()};
}

Embedding embed_nonprimitive(const MoebiusUnit& u, const FieldPtr& field) {
    require_reduced(u);
    const FieldPtr f = field_for(u, field);
    const std::size_t n = f->degree();
    const NFElement d = u.d() / u.c();
    const QPoly md = min_poly_over_q(d);
    const auto r = static_cast<std::size_t>(md.degree());
    if (r == 1) throw MathError("the hypercircle is a line");
    if (r == n) throw MathError("the hypercircle is primitive: nothing to embed");

    FieldPtr sub = NumberField::from_minimal_polynomial(md);
    MoebiusUnit w(sub, NFElement(0), NFElement(1), NFElement(1), NFElement::generator(sub));
    Parametrization psi = parametrize_unit(w);

    Matrix<Rational> dm(n, r);
    NFElement p = NFElement::from_rational(f, 1);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < n; ++i) dm(i, j) = p.coord(i);
        p = p * d;
    }

    Parametrization phi = parametrize_unit(u, f);
    if (!(phi.denominator == psi.denominator)) throw MathError("embedding check failed: denominators differ");
    for (std::size_t i = 0; i < n; ++i) {
        QPoly acc;
        for (std::size_t j = 0; j < r; ++j) acc += psi.numerators[j].scaled(dm(i, j));
        if (!(acc == phi.numerators[i])) throw MathError("embedding check failed");
    }
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    return {{TransformKind::Embedding, std::move(dm), std::move(cols)}, sub, w, std::move(psi)};
}

std::vector<Rational> rationals_by_height(int h) {
    std::vector<Rational> out;
    if (h < 0) return out;
    out.emplace_back(0);
    for (int H = 1; H <= h; ++H) {
        if (H == 1) {
            out.emplace_back(1);
            out.emplace_back(-1);
            continue;
        }
        for (int k = 1; k < H; ++k) {
            if (std::gcd(H, k) != 1) continue;
            Rational big{mpz_class(H), mpz_class(k)}, small{mpz_class(k), mpz_class(H)};
            out.push_back(big);
            out.push_back(-big);
            out.push_back(small);
            out.push_back(-small);
        }
    }
    return out;
}

HypercircleCheck verify_hypercircle(const Parametrization& phi, const FieldPtr& field) {
    HypercircleCheck res;
    const std::size_t n = field->degree();
    if (phi.dim() != n) {
        res.stage = "dimension";
        return res;
    }
    if (phi.degree() != static_cast<int>(n)) {
        res.stage = "degree";
        return res;
    }
    for (const auto& t : rationals_by_height(8)) {
        if (phi.denominator(t).is_zero()) continue;
        auto x = phi.at(t);
        if (std::find(res.points.begin(), res.points.end(), x) == res.points.end()) res.points.push_back(std::move(x));
        if (res.points.size() == 3) break;
    }
    if (res.points.size() < 3) {
        res.stage = "points";
        return res;
    }
    MoebiusUnit u = unit_through_three_points(field, res.points);
    if (hc_degree(u) != static_cast<int>(n)) {
        res.stage = "unit";
        return res;
    }
    Parametrization candidate = phi;
    candidate.field = field;
    if (!same_hypercircle(candidate, parametrize_unit(u))) {
        res.stage = "same-curve";
        return res;
    }
    QuadricSystem sys;
    try {
        sys = implicitize_normal(candidate);
    } catch (const MathError&) {
        res.stage = "implicitize";
        return res;
    }
    const ProjectivePoint inf = points_at_infinity_principal(field);
    for (const auto& g : sys.homogeneous) {
        if (!g.evaluate(inf.coords()).is_zero()) {
            res.stage = "infinity";
            return res;
        }
    }
    res.witness = u;
    res.stage = "ok";
    return res;
}

}  // namespace hc
