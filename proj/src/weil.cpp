#include "hypercircle/weil.hpp"

#include <algorithm>
#include <chrono>

#include "hypercircle/resultant.hpp"

namespace hc {

namespace {

template <class T>
UniPoly<T> poly_lcm(const UniPoly<T>& a, const UniPoly<T>& b) {
    return monic(exact_div(a, gcd(a, b)) * b);
}

// sum_j t_j alpha^j in n variables
LMulti generic_element(const FieldPtr& f) {
    const std::size_t n = f->degree();
    LMulti s(n, NFElement(0));
    NFElement a = NFElement::from_rational(f, 1);
    for (std::size_t j = 0; j < n; ++j) {
        s += LMulti::variable(n, j).scaled(a);
        a = a * NFElement::generator(f);
    }
    return s;
}

LMulti substitute(const LPoly& p, const LMulti& s) {
    LMulti acc(s.nvars(), NFElement(0));
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * s + LMulti(s.nvars(), p.coeffs()[k]);
    return acc;
}

// den^D p(x_0, ..., x_{m-1}) with every x_i = num_i / den.
template <class T>
bool vanishes(const QMulti& p, const std::vector<RatFunc<T>>& curve) {
    if (p.is_zero()) return true;
    if (p.nvars() > curve.size()) throw MathError("polynomial has more variables than the curve has coordinates");
    UniPoly<T> den(T(1));
    for (const auto& c : curve) den = poly_lcm(den, c.den());
    std::vector<UniPoly<T>> num;
    for (const auto& c : curve) num.push_back(c.num() * exact_div(den, c.den()));
    const int deg = p.total_degree();
    std::vector<UniPoly<T>> den_pow{UniPoly<T>(T(1))};
    for (int k = 1; k <= deg; ++k) den_pow.push_back(den_pow.back() * den);
    std::vector<std::vector<UniPoly<T>>> num_pow(num.size());
    UniPoly<T> acc;
    for (const auto& [e, c] : p.terms()) {
        UniPoly<T> term{T(c)};
        int used = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = num_pow[i];
            if (pw.empty()) pw.push_back(UniPoly<T>(T(1)));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * num[i]);
            term = term * pw[static_cast<std::size_t>(e[i])];
            used += e[i];
        }
        acc += term * den_pow[static_cast<std::size_t>(deg - used)];
    }
    return acc.is_zero();
}

bool all_rational(const LPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const NFElement& x) { return x.is_rational(); });
}

QPoly to_q(const LPoly& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.to_rational());
    return QPoly(std::move(c));
}

NFElement in_field(const FieldPtr& f, const NFElement& x) { return NFElement(f, x.coords(f->degree())); }

using Clock = std::chrono::steady_clock;

}  // namespace

std::vector<QMulti> WeilSystem::delta_set() const {
    std::vector<QMulti> out;
    for (const auto& row : components)
        for (std::size_t j = 1; j < row.size(); ++j) out.push_back(row[j]);
    return out;
}

WeilSystem descente(const LCurve& eta, const FieldPtr& field) {
    const std::size_t n = field->degree();
    LPoly den(NFElement(1));
    for (const auto& e : eta) den = poly_lcm(den, e.den());
    const LMulti s = generic_element(field);
    const Rationalized rz = rationalize_denominator(substitute(den, s), field);
    auto [norm, scale] = normalized(rz.norm.promoted(n));
    const Rational inv = Rational(1) / scale;
    WeilSystem w{field, {}, norm};
    for (const auto& e : eta) {
        LMulti num = substitute(e.num() * exact_div(den, e.den()), s) * rz.cofactor;
        std::vector<QMulti> row;
        for (auto& q : alpha_split(num, n)) row.push_back(q.promoted(n).scaled(inv));
        w.components.push_back(std::move(row));
    }
    return w;
}

bool verify_vanishing(const std::vector<QMulti>& polys, const QCurve& curve) {
    return std::all_of(polys.begin(), polys.end(), [&](const QMulti& p) { return vanishes(p, curve); });
}

bool verify_vanishing(const std::vector<QMulti>& polys, const LCurve& curve) {
    return std::all_of(polys.begin(), polys.end(), [&](const QMulti& p) { return vanishes(p, curve); });
}

std::vector<std::vector<Rational>> find_rational_points(const Parametrization& phi, int height) {
    std::vector<std::vector<Rational>> out;
    for (const auto& t : rationals_by_height(height)) {
        if (phi.denominator(t).is_zero()) continue;
        auto x = phi.at(t);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
    return out;
}

std::vector<std::vector<Rational>> find_rational_points(const LCurve& psi, const FieldPtr& field,
                                                        const std::vector<Rational>& grid) {
    std::vector<std::vector<Rational>> out;
    const std::size_t n = field->degree();
    if (grid.empty()) return out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Rational> c;
        for (auto i : idx) c.push_back(grid[i]);
        const NFElement t(field, c);
        std::vector<Rational> x;
        for (const auto& f : psi) {
            NFElement d = in_field(field, f.den()(t));
            if (d.is_zero()) break;
            NFElement v = in_field(field, f.num()(t)) / d;
            if (!v.is_rational()) break;
            x.push_back(v.to_rational());
        }
        if (x.size() == psi.size() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
        std::size_t k = n;
        while (k > 0 && ++idx[k - 1] == grid.size()) idx[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

QCurve reparametrize(const LCurve& eta, const MoebiusUnit& u) {
    const LRatFunc g = u.as_ratfunc();
    QCurve out;
    for (const auto& e : eta) {
        LRatFunc c = compose(e, g);
        if (!all_rational(c.num()) || !all_rational(c.den())) throw MathError("unit does not rationalize this curve");
        out.emplace_back(to_q(c.num()), to_q(c.den()));
    }
    return out;
}

MoebiusUnit canonical_unit(const MoebiusUnit& u, const FieldPtr& field) {
    if (u.is_rational()) return MoebiusUnit::identity(field);
    const std::size_t n = field->degree();
    auto first_nonzero = [n](const NFElement& x) {
        for (std::size_t i = 0; i < n; ++i)
            if (!x.coord(i).is_zero()) return i;
        return n;
    };
    if (u.c().is_zero()) {
        // A t + B, normalized so that A has leading coordinate 1 and B vanishes there
        NFElement A = u.a() / u.d(), B = u.b() / u.d();
        std::size_t i = first_nonzero(A);
        Rational k1 = Rational(1) / A.coord(i);
        A = A * NFElement(k1);
        Rational k0 = -B.coord(i);
        B = B + A * NFElement(k0);
        return MoebiusUnit(field, A, B, NFElement(0), NFElement(1));
    }
    const NFElement y3 = u.a() / u.c(), e = u.d() / u.c();
    const NFElement w = (u.b() - y3 * u.d()) / u.c();
    const Rational k0 = -e.coord(0);
    const Rational k1 = w.coord(first_nonzero(w));
    const NFElement w2 = w / NFElement(k1), e2 = (e + NFElement(k0)) / NFElement(k1);
    return MoebiusUnit(field, y3, y3 * e2 + w2, NFElement(1), e2);
}

PipelineResult pipeline(const LCurve& eta, const LCurve& psi, const FieldPtr& field, const PipelineOptions& opts) {
    PipelineResult res;
    auto stage = [&](const std::string& name, auto&& body) {
        StageReport rep{name, false, "", 0};
        const auto start = Clock::now();
        try {
            rep.detail = body();
            rep.ok = true;
        } catch (const MathError& e) {
            rep.detail = e.what();
        }
        rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        res.stages.push_back(rep);
        return rep.ok;
    };
    const std::size_t n = field->degree();

    if (!stage("descente", [&] {
            if (psi.size() != n) throw MathError("candidate must have one coordinate per field degree");
            WeilSystem w = descente(eta, field);
            if (!verify_vanishing(w.delta_set(), psi)) throw MathError("candidate does not satisfy the descente equations");
            return std::to_string(w.delta_set().size()) + " equations vanish on the candidate";
        }))
        return res;

    if (!stage("points", [&] {
            res.points = find_rational_points(psi, field, opts.grid);
            if (res.points.size() < 3) throw MathError("fewer than three rational points on the candidate");
            res.points.resize(3);
            return std::string("3 rational points");
        }))
        return res;

    MoebiusUnit u = MoebiusUnit::identity(field);
    if (!stage("unit", [&] {
            const auto& p = res.points;
            u = canonical_unit(unit_through_three_points(field, {p[1], p[2], p[0]}), field);
            return std::string("unit through the points, canonical form");
        }))
        return res;

    if (!stage("certify", [&] {
            Parametrization phi = parametrize_unit(u, field);
            const LRatFunc g = u.as_ratfunc();
            for (std::size_t i = 0; i < n; ++i)
                if (!(compose(psi[i], g) == lift(phi.component(i)))) throw MathError("candidate composed with the unit is not the hypercircle of the unit");
            if (u == MoebiusUnit::identity(field)) return std::string("candidate is the base axis");
            auto check = verify_hypercircle(phi, field);
            if (!check.witness) throw MathError("hypercircle verification failed at stage " + check.stage);
            return std::string("hypercircle verified");
        }))
        return res;

    if (!stage("reparametrize", [&] {
            res.eta_q = reparametrize(eta, u);
            return std::string("curve is defined over Q");
        }))
        return res;

    res.unit = u;
    res.ok = true;
    return res;
}

}  // namespace hc
