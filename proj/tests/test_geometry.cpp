#include <gtest/gtest.h>

#include "hypercircle/geometry.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hct;

namespace {

NFElement gen(const FieldPtr& f) { return NFElement::generator(f); }

MoebiusUnit reduced(const NFElement& d) { return MoebiusUnit(NFElement(0), NFElement(1), NFElement(1), d); }

// Q applied to a column of polynomials.
std::vector<QPoly> apply_rows(const Matrix<Rational>& q, const std::vector<QPoly>& v) {
    std::vector<QPoly> out(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) out[i] += v[j].scaled(q(i, j));
    return out;
}

std::vector<QPoly> powers(std::size_t r, std::size_t total) {
    std::vector<QPoly> out;
    for (std::size_t k = 0; k < total; ++k) out.push_back(k < r ? QPoly::monomial(Rational(1), k) : QPoly());
    return out;
}

Parametrization quartic_circle_phi() {
    auto f = field({1, 0, 0, 0, 1});
    auto a = gen(f);
    return parametrize_unit(MoebiusUnit(NFElement(1), -a, NFElement(1), a));
}

std::vector<QMulti> quartic_circle_quadrics() {
    return {parse_poly("X1X2-X3X0-X3", 4), parse_poly("X1^2+X3^2-2X2", 4), parse_poly("X1X0+X2X3-X1", 4),
            parse_poly("X0^2+X3X1-1", 4)};
}

}  // namespace

TEST(NormalCurve, AffineMapCubic) {
    auto f = field({2, 2, 0, 1});
    auto u = reduced(gen(f));
    auto w = normal_curve_affine_map(u);
    EXPECT_EQ(w.kind, TransformKind::Affine);
    auto phi = parametrize_unit(u);
    EXPECT_EQ(phi.denominator, qp({-2, 2, 0, 1}));
    EXPECT_EQ(apply_rows(w.matrix, phi.numerators), powers(3, 3));
    // r = n: the whole matrix is the inverse change of basis
    EXPECT_EQ(w.pivots, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(w.matrix * coefficient_rows(phi.numerators, 2), (Matrix<Rational>::identity(3)));
}

TEST(NormalCurve, AffineMapNonPrimitive) {
    auto f = field({1, 0, 0, 0, 1});
    auto u = reduced(gen(f) * gen(f));
    auto w = normal_curve_affine_map(u);
    auto phi = parametrize_unit(u);
    EXPECT_EQ(phi.denominator, qp({1, 0, 1}));
    EXPECT_EQ(apply_rows(w.matrix, phi.numerators), powers(2, 4));
    EXPECT_EQ(w.pivots.size(), 2u);
    EXPECT_NE(determinant(w.matrix), Rational(0));
}

TEST(NormalCurve, Preconditions) {
    auto f = field({2, 2, 0, 1});
    auto a = gen(f);
    EXPECT_THROW(normal_curve_affine_map(MoebiusUnit(NFElement(1), -a, NFElement(1), a)), MathError);
    EXPECT_THROW(normal_curve_affine_map(MoebiusUnit(f, 0, 1, 1, 3)), MathError);
    EXPECT_THROW(normal_curve_projective_map(MoebiusUnit(a, NFElement(1), NFElement(0), NFElement(1))), MathError);
}

TEST(NormalCurve, ProjectiveMapCubic) {
    auto f = field({2, 2, 0, 1});
    auto u = reduced(gen(f));
    auto w = normal_curve_projective_map(u);
    auto phi = parametrize_unit(u);
    auto polys = phi.numerators;
    polys.push_back(phi.denominator);
    EXPECT_EQ(w.matrix.rows(), 4u);
    EXPECT_EQ(apply_rows(w.matrix, polys), powers(4, 4));
    // r = n: inverse of the coefficient matrix of {p_0, ..., p_{n-1}, M}
    EXPECT_EQ(w.matrix, inverse(coefficient_rows(polys, 3)));
}

TEST(NormalCurve, ProjectiveMapSendsInfinityToTheNormalCurve) {
    auto f = field({2, 2, 0, 1});
    auto u = reduced(gen(f));
    auto w = normal_curve_projective_map(u);
    auto y = w.matrix.apply(points_at_infinity_principal(f).coords());
    ASSERT_FALSE(y[0].is_zero());
    NFElement g = y[1] / y[0];
    EXPECT_EQ(y[2] / y[0], g * g);
    EXPECT_EQ(y[3] / y[0], g * g * g);
    // g is a root of M
    EXPECT_TRUE(lift(parametrize_unit(u).denominator)(g).is_zero());
    // the affine point at t = infinity goes to [0:0:0:1]
    std::vector<Rational> origin{0, 0, 0, 1};
    EXPECT_EQ(w.matrix.apply(origin), (std::vector<Rational>{0, 0, 0, 1}));
}

TEST(NormalCurve, ProjectiveMapNonPrimitive) {
    auto f = field({1, 0, 0, 0, 1});
    auto u = reduced(gen(f) * gen(f));
    auto w = normal_curve_projective_map(u);
    auto phi = parametrize_unit(u);
    auto polys = phi.numerators;
    polys.push_back(phi.denominator);
    EXPECT_EQ(apply_rows(w.matrix, polys), powers(3, 5));
}

TEST(Implicitize, FourDimensionalCircle) {
    auto phi = quartic_circle_phi();
    auto sys = implicitize_normal(phi);
    EXPECT_EQ(sys.homogeneous.size(), 6u);
    EXPECT_EQ(span_rank(sys.affine), 6u);
    for (const auto& g : sys.homogeneous) EXPECT_TRUE(homogeneous_substitution(g, phi.numerators, phi.denominator).is_zero());
    for (const auto& g : sys.affine) EXPECT_TRUE(cleared_substitution(g, phi.numerators, phi.denominator).is_zero());
    for (const auto& q : quartic_circle_quadrics()) {
        EXPECT_TRUE(in_span(sys.affine, q));
        EXPECT_TRUE(cleared_substitution(q, phi.numerators, phi.denominator).is_zero());
    }
    for (const auto& g : sys.affine) EXPECT_TRUE(in_ideal_up_to_degree(quartic_circle_quadrics(), g, 3));
}

TEST(Implicitize, OtherPrimitiveElementIsOffTheCurve) {
    auto sys = implicitize_normal(quartic_circle_phi());
    std::vector<Rational> x{1, -2, 2, -1};
    EXPECT_EQ(parse_poly("X0^2+X3X1-1", 4).evaluate(x), Rational(2));
    bool some_nonzero = false;
    for (const auto& g : sys.affine) some_nonzero = some_nonzero || !g.evaluate(x).is_zero();
    EXPECT_TRUE(some_nonzero);
}

TEST(Implicitize, QuarticFieldsDisplayed) {
    std::vector<Parametrization> cases;
    cases.push_back({nullptr,
                     {qp({-195, 101, 22, 15, 1}), qp({-114, 65, -73, -11}), qp({-59, -25, 57, 2}), qp({-56, 17, 4, -6, -1})},
                     qp({233, -366, -17, 10, 1}),
                     std::nullopt});
    cases.push_back({nullptr,
                     {qp({72, 95, 47, 11, 1}), qp({9, 17, 15, 7, 1}), qp({0, -23, -31, -10, -1}), qp({36, 42, 13, 1})},
                     qp({81, 126, 62, 13, 1}),
                     std::nullopt});
    for (const auto& phi : cases) {
        auto sys = implicitize_normal(phi);
        EXPECT_EQ(sys.homogeneous.size(), 6u);
        for (const auto& g : sys.homogeneous) EXPECT_TRUE(homogeneous_substitution(g, phi.numerators, phi.denominator).is_zero());
        for (const auto& g : sys.affine) EXPECT_TRUE(cleared_substitution(g, phi.numerators, phi.denominator).is_zero());
    }
}

TEST(Implicitize, ExtensionCoefficientsAreSplit) {
    auto phi = parametrize_unit(MoebiusUnit(NFElement(1), -gen(field({2, 2, 0, 1})), NFElement(1), gen(field({2, 2, 0, 1}))));
    auto g = field({1, 0, 1});
    NFElement lambda = gen(g) + 1;
    std::vector<LPoly> nums;
    for (const auto& p : phi.numerators) nums.push_back(lift(p).scaled(lambda));
    auto sys = implicitize_normal(g, nums, lift(phi.denominator).scaled(lambda));
    auto plain = implicitize_normal(phi);
    EXPECT_FALSE(sys.homogeneous.empty());
    for (const auto& h : sys.homogeneous) {
        EXPECT_TRUE(homogeneous_substitution(h, phi.numerators, phi.denominator).is_zero());
        EXPECT_TRUE(in_span(plain.homogeneous, h));
    }
}

TEST(Implicitize, DependentInputRejected) {
    Parametrization line{nullptr, {qp({0, 1}), qp({0, 2}), qp({0})}, qp({1}), std::nullopt};
    EXPECT_THROW(implicitize_normal(line), MathError);
}

TEST(InverseUnit, CubicExample) {
    auto f = field({-3, 0, 1, 1});
    auto a = gen(f);
    MoebiusUnit u(a + 2, a, NFElement(1), -a + 1);
    auto phi = parametrize_unit(u);
    EXPECT_EQ(phi.denominator, qp({-1, 5, 4, 1}));
    EXPECT_EQ(phi.numerators[0], qp({3, 7, 6, 2}));
    EXPECT_EQ(phi.numerators[1], qp({2, 9, 6, 1}));
    EXPECT_EQ(phi.numerators[2], qp({1, 4, 1}));

    auto eq = inverse_unit_equations(u);
    ASSERT_EQ(eq.r.size(), 2u);
    QMulti r1 = parse_poly(
        "2-8x2+4x2x0+6x2^2x0+17x2x1+x2x0^2+3x1-3x1^2x2+x0^3-x0^2x1+4x0x1-12x2^2-8x1^2+9x2^3+3x1^3-3x0^2-9x0x1x2", 3);
    QMulti r2 = parse_poly("-2-7x2+4x2x0-x2x1+8x1-2x0-2x0x1+6x2^2-2x1^2+x0^2", 3);
    QMulti s = parse_poly(
        "9x2^3+6x2^2x0-12x2^2+5x2x0-17x2-3x1^2x2-9x0x1x2+x2x0^2+24x2x1+3x1^3+8x0+4x0x1-5x0^2-x0^2x1+5x1-9x1^2-7+x0^3", 3);
    // one common scalar
    Rational k = s.leading_coeff() / eq.s.leading_coeff();
    EXPECT_EQ(eq.s.scaled(k), s);
    EXPECT_EQ(eq.r[0].scaled(k), r1);
    EXPECT_EQ(eq.r[1].scaled(k), r2);
    for (const auto& r : eq.r) EXPECT_TRUE(cleared_substitution(r, phi.numerators, phi.denominator).is_zero());
}

TEST(InverseUnit, IdentityUnit) {
    auto f = field({2, 2, 0, 1});
    auto eq = inverse_unit_equations(MoebiusUnit::identity(f), f);
    EXPECT_EQ(eq.s, QMulti(3, Rational(1)));
    EXPECT_EQ(eq.r0, QMulti::variable(3, 0));
    EXPECT_EQ(eq.r[0], QMulti::variable(3, 1));
    EXPECT_EQ(eq.r[1], QMulti::variable(3, 2));
}

TEST(InverseUnit, RecombinationAtRationalPoints) {
    auto f = field({2, 2, 0, 1});
    auto a = gen(f);
    MoebiusUnit u(a * a + 1, a, NFElement(2), -a + 3);
    auto eq = inverse_unit_equations(u);
    auto v = u.inverse();
    for (int i = -2; i <= 2; ++i)
        for (int j = -1; j <= 1; ++j) {
            std::vector<Rational> x{Rational(i), Rational(j), Rational(1, 2)};
            Rational sv = eq.s.evaluate(x);
            if (sv.is_zero()) continue;
            NFElement lhs = NFElement(eq.r0.evaluate(x)) + a * NFElement(eq.r[0].evaluate(x)) +
                            a * a * NFElement(eq.r[1].evaluate(x));
            auto expected = v(NFElement(f, x));
            ASSERT_TRUE(expected);
            EXPECT_EQ(lhs / NFElement(sv), *expected);
        }
}

TEST(AffineEquivalence, QuadraticClosedForm) {
    auto f = field({1, 0, 1});
    auto a = gen(f);
    auto res = affine_equivalence_witness(reduced(a), reduced(a * 2 + 1));
    ASSERT_TRUE(res.tau);
    EXPECT_TRUE(res.complete);
    EXPECT_EQ(*res.tau, MoebiusUnit(2, -1, 0, 1));
    EXPECT_EQ(*(*res.tau)(-a), -a * 2 - 1);
}

TEST(AffineEquivalence, TrivialCases) {
    auto f = field({2, 2, 0, 1});
    auto a = gen(f);
    auto same = affine_equivalence_witness(reduced(a), reduced(a));
    ASSERT_TRUE(same.tau);
    EXPECT_EQ(*same.tau, MoebiusUnit::identity());
    auto mismatch = affine_equivalence_witness(reduced(a), reduced(NFElement(f, {3})));
    EXPECT_FALSE(mismatch.tau);
    EXPECT_TRUE(mismatch.complete);
    EXPECT_THROW(affine_equivalence_witness(MoebiusUnit::identity(f), reduced(a)), MathError);
}

TEST(AffineEquivalence, CubicSearch) {
    auto f = field({2, 2, 0, 1});
    auto a = gen(f);
    auto res = affine_equivalence_witness(reduced(a), MoebiusUnit(NFElement(3), NFElement(1), NFElement(1), a * 2 + 1));
    ASSERT_TRUE(res.tau);
    EXPECT_EQ(*res.tau, MoebiusUnit(2, -1, 0, 1));
    // a different cubic subfield generator with no affine relation
    auto other = affine_equivalence_witness(reduced(a), reduced(a * a));
    if (other.tau) {
        auto t1 = other.tau->a().to_rational(), t0 = other.tau->b().to_rational();
        QPoly m1 = min_poly_over_q(-a), m2 = min_poly_over_q(-a * a);
        EXPECT_EQ(compose(m2, QPoly({t0, t1})), m1.scaled(t1 * t1 * t1));
    } else {
        EXPECT_FALSE(other.complete);
    }
}

TEST(Embedding, QuarticThroughQuadratic) {
    auto f = field({1, 0, 0, 0, 1});
    auto a = gen(f);
    auto u = reduced(a * a);
    auto e = embed_nonprimitive(u);
    EXPECT_EQ(e.subfield->minpoly(), qp({1, 0, 1}));
    EXPECT_EQ(e.witness.matrix, Matrix<Rational>::from_rows({{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
    EXPECT_EQ(rank(e.witness.matrix), 2u);
    EXPECT_EQ(e.sub_parametrization.denominator, qp({1, 0, 1}));
    // sum psi_j d^j = u
    LPoly num;
    NFElement p = NFElement::from_rational(f, 1);
    for (const auto& psi_j : e.sub_parametrization.numerators) {
        num += lift(psi_j).scaled(p);
        p = p * a * a;
    }
    EXPECT_EQ(LRatFunc(num, lift(e.sub_parametrization.denominator)), u.as_ratfunc());
}

TEST(Embedding, Preconditions) {
    auto f = field({1, 0, 0, 0, 1});
    auto a = gen(f);
    EXPECT_THROW(embed_nonprimitive(reduced(a)), MathError);
    EXPECT_THROW(embed_nonprimitive(MoebiusUnit(f, 0, 1, 1, 2)), MathError);
}

TEST(VerifyHypercircle, CubicCandidate) {
    auto f = field({2, 0, 0, 1});
    // (2t^2, -1, -t) / (2t^3 + 1)
    Parametrization phi{f, {qp({0, 0, 1}), qp({q("-1/2")}), qp({0, q("-1/2")})}, qp({q("1/2"), 0, 0, 1}), std::nullopt};
    auto res = verify_hypercircle(phi, f);
    ASSERT_TRUE(res.witness) << res.stage;
    EXPECT_EQ(res.stage, "ok");
    auto a = gen(f);
    auto ref = parametrize_unit(MoebiusUnit(NFElement(0), NFElement(2), NFElement(2), a * a));
    EXPECT_TRUE(same_hypercircle(ref, parametrize_unit(*res.witness)));
}

TEST(VerifyHypercircle, NegativeControls) {
    auto f = field({2, 0, 0, 1});
    Parametrization line{f, {qp({0, 1}), qp({0}), qp({0})}, qp({1}), std::nullopt};
    EXPECT_FALSE(verify_hypercircle(line, f).witness);
    Parametrization cubic{f, {qp({1, 0, 0, 1}), qp({0, 1, 1}), qp({2, 0, 1})}, qp({1, 1, 0, 1}), std::nullopt};
    auto r = verify_hypercircle(cubic, f);
    EXPECT_FALSE(r.witness);
    EXPECT_NE(r.stage, "ok");
    auto g = field({1, 0, 1});
    Parametrization parabola{g, {qp({0, 1}), qp({0, 0, 1})}, qp({1}), std::nullopt};
    EXPECT_FALSE(verify_hypercircle(parabola, g).witness);
}

TEST(Heights, Order) {
    auto h = rationals_by_height(2);
    EXPECT_EQ(h, (std::vector<Rational>{0, 1, -1, 2, -2, q("1/2"), q("-1/2")}));
    EXPECT_EQ(rationals_by_height(3).size(), 15u);
}
