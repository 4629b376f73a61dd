#include <gtest/gtest.h>

#include "hypercircle/moebius.hpp"
#include "hypercircle/multipoly.hpp"
#include "hypercircle/ratfunc.hpp"
#include "hypercircle/resultant.hpp"
#include "support.hpp"

using namespace hct;

namespace {

QMulti qvar(std::size_t n, std::size_t i) { return QMulti::variable(n, i); }
LMulti lvar(std::size_t n, std::size_t i) { return LMulti::variable(n, i); }

MoebiusUnit random_unit(std::mt19937& rng, const FieldPtr& f) {
    while (true) {
        auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f),
             d = random_element(rng, f);
        if (!(a * d - b * c).is_zero()) return MoebiusUnit(a, b, c, d);
    }
}

}  // namespace

TEST(UniPolyOverField, ExactDivisionByLinearFactor) {
    auto f = field({2, 2, 0, 1});
    auto a = NFElement::generator(f);
    LPoly num = lift(qp({-2, 2, 0, 1}));
    LPoly m = exact_div(num, lp({a, NFElement(1)}));
    EXPECT_EQ(m, lp({a * a + 2, -a, NFElement(1)}));
    EXPECT_EQ(m * lp({a, NFElement(1)}), num);
    EXPECT_THROW(exact_div(num, lp({a + 1, NFElement(1)})), MathError);
}

TEST(MultiPoly, ArithmeticAndOrder) {
    auto x = qvar(2, 0), y = qvar(2, 1);
    QMulti p = x * x + y * x * Rational(3) - QMulti(2, Rational(1));
    EXPECT_EQ(render(p, {"x", "y"}), "x^2+3*x*y-1");
    EXPECT_EQ(p.total_degree(), 2);
    QMulti prod = p * (x - y);
    EXPECT_EQ(exact_div(prod, x - y), p);
    EXPECT_THROW(exact_div(prod + x, x - y), MathError);
    EXPECT_EQ(render(pow(x + y, 2), {"x", "y"}), "x^2+2*x*y+y^2");
    // constants promote
    EXPECT_EQ(QMulti(Rational(2)) * x, x + x);
    EXPECT_EQ(p.evaluate(std::vector<Rational>{2, 3}), Rational(21));
}

TEST(MultiPoly, NormalizationScalar) {
    auto x = qvar(2, 0), y = qvar(2, 1);
    QMulti p = x.scaled(q("-2/3")) + y.scaled(q("4/9"));
    auto [np, s] = normalized(p);
    EXPECT_EQ(render(np, {"x", "y"}), "3*x-2*y");
    EXPECT_EQ(np.scaled(s), p);
    EXPECT_EQ(normalized(QMulti(2, Rational(0))).second, Rational(1));
}

TEST(MultiPoly, AlphaSplitRoundTrip) {
    auto f = field({-2, 0, 1});
    auto a = NFElement::generator(f);
    LMulti p = lvar(2, 0).scaled(a + 1) + lvar(2, 1).scaled(a * 3) + LMulti(2, NFElement(5));
    auto comps = alpha_split(p, 2);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(render(comps[0], {"x", "y"}), "x+5");
    EXPECT_EQ(render(comps[1], {"x", "y"}), "x+3*y");
    EXPECT_EQ(recombine(comps, f), p);
}

TEST(Resultant, GaussianNorm) {
    using QP = UniPoly<QMulti>;
    auto X = qvar(1, 0);
    QP p({QMulti(1, Rational(1)), QMulti(1, Rational(0)), QMulti(1, Rational(1))});  // y^2+1
    QP lin({X, QMulti(1, Rational(-1))});                                            // X - y
    EXPECT_EQ(sylvester_resultant(p, lin), X * X + QMulti(1, Rational(1)));
    EXPECT_TRUE(sylvester_resultant(p, p).is_zero());
}

TEST(Resultant, RationalCoefficients) {
    // Oracle: Res(x^2-3x+2, x-5) = (5-1)(5-2) up to sign (-1)^(2*1) = 12.
    EXPECT_EQ(sylvester_resultant(qp({2, -3, 1}), qp({-5, 1})), Rational(12));
    EXPECT_EQ(sylvester_resultant(qp({2, -3, 1}), qp({7})), Rational(49));
    EXPECT_EQ(sylvester_resultant(qp({2, -3, 1}), qp({-1, 1})), Rational(0));
}

TEST(Resultant, PureCubicNormMatchesClosedForm) {
    using QP = UniPoly<QMulti>;
    auto t0 = qvar(3, 0), t1 = qvar(3, 1), t2 = qvar(3, 2);
    QP m({QMulti(3, Rational(2)), QMulti(3, Rational(0)), QMulti(3, Rational(0)), QMulti(3, Rational(1))});
    QP s({t0, t1, t2});
    QMulti res = sylvester_resultant(m, s);
    // Oracle: N(a + b y + c y^2) for y^3 = k is a^3 + k b^3 + k^2 c^3 - 3 k a b c, k = -2.
    QMulti oracle = pow(t0, 3) + pow(t1, 3).scaled(-2) + pow(t2, 3).scaled(4) + (t0 * t1 * t2).scaled(6);
    EXPECT_EQ(res, oracle);
}

TEST(Rationalize, NormIsDenominatorTimesCofactor) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        auto f = random_field(rng, 2 + trial % 3);
        LMulti d = lvar(2, 0).scaled(random_nonzero(rng, f)) + lvar(2, 1).scaled(random_element(rng, f)) +
                   LMulti(2, random_nonzero(rng, f));
        auto r = rationalize_denominator(d, f);
        EXPECT_EQ(lift(r.norm), d * r.cofactor);
        EXPECT_EQ(r.norm.total_degree(), static_cast<int>(f->degree()));
    }
    auto f = field({2, 0, 0, 1});
    auto rat = rationalize_denominator(lvar(1, 0) + LMulti(1, NFElement(3)), f);
    EXPECT_EQ(rat.norm, qvar(1, 0) + QMulti(1, Rational(3)));
    EXPECT_THROW(rationalize_denominator(LMulti(1, NFElement(0)), f), MathError);
}

TEST(RatFunc, LowestTermsAndMonicDenominator) {
    QRatFunc r(qp({-1, 0, 1}), qp({-2, 2}));
    EXPECT_EQ(r.num(), qp({q("1/2"), q("1/2")}));
    EXPECT_EQ(r.den(), qp({1}));
    QRatFunc s(qp({1}), qp({1, 1}));
    QRatFunc sum = s + s;
    EXPECT_EQ(sum.num(), qp({2}));
    EXPECT_EQ((s - s).den(), qp({1}));
    EXPECT_THROW(QRatFunc(qp({1}), QPoly()), MathError);
    EXPECT_EQ(s(Rational(1)), q("1/2"));
    EXPECT_THROW(s(Rational(-1)), MathError);
}

TEST(RatFunc, Composition) {
    QRatFunc f(qp({0, 0, 1}));
    QRatFunc g(qp({1, 1}));
    EXPECT_EQ(compose(f, g), QRatFunc(qp({1, 2, 1})));
    QRatFunc inv(qp({1}), qp({0, 1}));
    EXPECT_EQ(compose(inv, inv), QRatFunc::t());
}

TEST(Moebius, InverseOfCubicUnit) {
    auto f = field({-3, 0, 1, 1});
    auto a = NFElement::generator(f);
    MoebiusUnit u(a + 2, a, NFElement(1), -a + 1);
    MoebiusUnit v = u.inverse();
    EXPECT_EQ(v.a(), a - 1);
    EXPECT_EQ(v.b(), a);
    EXPECT_EQ(v.c(), NFElement::from_rational(f, 1));
    EXPECT_EQ(v.d(), -a - 2);
    EXPECT_EQ(compose(u, v), MoebiusUnit::identity(f));
}

TEST(Moebius, DegenerateRejected) {
    EXPECT_THROW(MoebiusUnit(1, 2, 2, 4), MathError);
    auto f = field({1, 0, 1});
    auto a = NFElement::generator(f);
    EXPECT_THROW(MoebiusUnit(a, a * a, NFElement(1), a), MathError);
}

TEST(Moebius, CompositionOfAffineMaps) {
    MoebiusUnit shift(1, 5, 0, 1), scale(3, 0, 0, 1);
    EXPECT_EQ(compose(shift, scale), MoebiusUnit(3, 5, 0, 1));
    EXPECT_EQ(compose(shift, MoebiusUnit::identity()), shift);
}

TEST(Moebius, ChainThroughReciprocal) {
    // (at+b)/(ct+d) = a/c + ((bc-ad)/c^2) * 1/(t + d/c), built from translations, 1/t and scalings.
    auto f = field({2, 2, 0, 1});
    auto al = NFElement::generator(f);
    NFElement a = al + 1, b = al * al, c = al - 2, d = NFElement(3);
    MoebiusUnit u(a, b, c, d);
    MoebiusUnit shift_in(NFElement(1), d / c, NFElement(0), NFElement(1));
    MoebiusUnit recip(NFElement(0), NFElement(1), NFElement(1), NFElement(0));
    MoebiusUnit scale((b * c - a * d) / (c * c), NFElement(0), NFElement(0), NFElement(1));
    MoebiusUnit shift_out(NFElement(1), a / c, NFElement(0), NFElement(1));
    EXPECT_EQ(compose(shift_out, compose(scale, compose(recip, shift_in))), u);
}

TEST(MoebiusProperty, GroupLaws) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = random_field(rng, 2 + trial % 4);
        auto u = random_unit(rng, f), v = random_unit(rng, f), w = random_unit(rng, f);
        EXPECT_EQ(compose(u, u.inverse()), MoebiusUnit::identity(f));
        EXPECT_EQ(compose(u.inverse(), u), MoebiusUnit::identity(f));
        EXPECT_EQ(u.inverse().inverse(), u);
        EXPECT_EQ(compose(compose(u, v), w), compose(u, compose(v, w)));
        EXPECT_EQ(compose(u, v).determinant(), u.determinant() * v.determinant());
        // as rational functions
        EXPECT_EQ(compose(u.as_ratfunc(), v.as_ratfunc()), compose(u, v).as_ratfunc());
    }
}

TEST(AlphaComponents, BilinearUnitOverCubicField) {
    auto f = field({2, 2, 0, 1});
    auto a = NFElement::generator(f);
    LRatFunc u(lp({-a, NFElement(1)}), lp({a, NFElement(1)}));
    auto c = alpha_components(u, f);
    ASSERT_EQ(c.size(), 3u);
    QPoly den = qp({-2, 2, 0, 1});
    EXPECT_EQ(c[0], QRatFunc(qp({2, 2, 0, 1}), den));
    EXPECT_EQ(c[1], QRatFunc(qp({0, 0, -2}), den));
    EXPECT_EQ(c[2], QRatFunc(qp({0, 2}), den));
}

TEST(AlphaComponents, TrivialInputs) {
    auto f = field({2, 2, 0, 1});
    QRatFunc g(qp({1, 2}), qp({3, 0, 1}));
    auto c = alpha_components(lift(g), f);
    EXPECT_EQ(c[0], g);
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_TRUE(c[2].is_zero());
    auto ca = alpha_components(LRatFunc(NFElement::generator(f)), f);
    EXPECT_TRUE(ca[0].is_zero());
    EXPECT_EQ(ca[1], QRatFunc(1));
    EXPECT_TRUE(ca[2].is_zero());
}

TEST(AlphaComponentsProperty, RecombinationRecoversInput) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = random_field(rng, 2 + trial % 4);
        LPoly num({random_element(rng, f), random_element(rng, f), random_element(rng, f)});
        LPoly den({random_nonzero(rng, f), random_element(rng, f), NFElement::from_rational(f, 1)});
        LRatFunc r(num, den);
        auto comps = alpha_components(r, f);
        // Cross-multiplied check over a common rational denominator.
        QPoly common(Rational(1));
        for (auto& c : comps) common = exact_div(common * c.den(), gcd(common, c.den()));
        LPoly total;
        auto p = NFElement::from_rational(f, 1);
        for (auto& c : comps) {
            total += lift(c.num() * exact_div(common, c.den())).scaled(p);
            p = p * NFElement::generator(f);
        }
        EXPECT_EQ(total * r.den(), r.num() * lift(common));
        for (auto& c : comps) EXPECT_EQ(gcd(c.num(), c.den()).degree(), 0);
    }
}
