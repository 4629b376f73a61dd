#include "hypercircle/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace hc {

namespace {

const FieldPtr& common_field(const NFElement& x, const NFElement& y) {
    if (!x.has_field()) return y.field();
    if (!y.has_field() || x.field() == y.field()) return x.field();
    if (!(*x.field() == *y.field())) throw FieldMismatch();
    return x.field();
}

std::size_t width(const FieldPtr& f) { return f ? f->degree() : 1; }

// Divisors of |v| (v != 0), or nullopt when trial division would exceed `limit`.
std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& v, unsigned long limit) {
    mpz_class n = abs(v);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root > limit) return std::nullopt;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d <= root; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// q(x) evaluated at an integer; q has integer coefficients.
mpz_class eval_int(const std::vector<mpz_class>& q, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool divides_int(const std::vector<mpz_class>& g, std::vector<mpz_class> r) {
    // g monic; long division in Z.
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = r.size(); k-- > dg;) {
        const mpz_class c = r[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= c * g[j];
    }
    return std::all_of(r.begin(), r.end(), [](const mpz_class& c) { return c == 0; });
}

// Converts an integer factor g(x) of q(x) = D^n p(x/D) back to a monic factor of p.
QPoly factor_from_scaled(const std::vector<mpz_class>& g, const mpz_class& D) {
    const std::size_t k = g.size() - 1;
    std::vector<Rational> c(k + 1);
    // g(D t) / D^k
    mpz_class dpow = 1;
    for (std::size_t j = 0; j <= k; ++j) {
        c[j] = Rational(mpz_class(g[j] * dpow));
        dpow *= D;
    }
    Rational lead = c[k];
    for (auto& x : c) x /= lead;
    return QPoly(std::move(c));
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const QPoly& poly, unsigned long budget) {
    if (poly.is_zero()) throw MathError("roots of the zero polynomial");
    QPoly p = monic(poly);
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0) roots.emplace_back(0);
    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (n == low) return roots;

    mpz_class D = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.denominator().get_mpz_t());
    // q(x) = D^(n-low) p(x/D) / x^low, monic with integer coefficients
    std::vector<mpz_class> q(n - low + 1);
    mpz_class dpow = 1;
    for (std::size_t i = n + 1; i-- > low;) {
        q[i - low] = mpq_class(p.coeff(i).value() * dpow).get_num();
        dpow *= D;
    }
    auto divs = positive_divisors(q[0], budget);
    if (!divs) return std::nullopt;
    for (const auto& d : *divs)
        for (int s : {1, -1}) {
            mpz_class r = d * s;
            if (eval_int(q, r) == 0) roots.emplace_back(Rational(r, D));
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------- certify

Irreducibility certify_irreducible(const QPoly& p, unsigned long budget) {
    if (p.degree() < 1) throw MathError("irreducibility of a constant polynomial");
    if (!p.leading().is_one()) throw MathError("irreducibility test expects a monic polynomial");
    const auto n = static_cast<std::size_t>(p.degree());
    if (n == 1) return {Verdict::Irreducible, std::nullopt};

    QPoly g = gcd(p, derivative(p));
    if (g.degree() > 0) return {Verdict::Reducible, g};

    mpz_class D = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> q(n + 1);
    {
        mpz_class dpow = 1;
        for (std::size_t i = n + 1; i-- > 0;) {
            q[i] = mpq_class(p.coeff(i).value() * dpow).get_num();
            dpow *= D;
        }
    }

    if (q[0] == 0) return {Verdict::Reducible, QPoly::x()};
    auto divs = positive_divisors(q[0], budget);
    if (!divs) return {Verdict::Unknown, std::nullopt};

    for (const auto& d : *divs)
        for (int s : {1, -1}) {
            mpz_class r = d * s;
            if (eval_int(q, r) == 0) return {Verdict::Reducible, factor_from_scaled({-r, 1}, D)};
        }
    if (n <= 3) return {Verdict::Irreducible, std::nullopt};

    mpz_class norm2 = 0;
    for (const auto& c : q) norm2 += c * c;
    const mpz_class q_at_one = eval_int(q, 1), q_at_minus_one = eval_int(q, -1);

    bool exhausted = true;
    for (std::size_t k = 2; k <= n / 2; ++k) {
        std::vector<mpz_class> bound(k);
        mpz_class total = 2 * mpz_class(static_cast<unsigned long>(divs->size()));
        for (std::size_t j = 1; j < k; ++j) {
            mpz_class b2 = binomial(k, j) * binomial(k, j) * norm2;
            mpz_sqrt(bound[j].get_mpz_t(), b2.get_mpz_t());
            total *= 2 * bound[j] + 1;
        }
        if (total > budget) {
            exhausted = false;
            continue;
        }
        std::vector<mpz_class> cand(k + 1);
        cand[k] = 1;
        bool found = false;
        // odometer over b_1..b_{k-1}
        for (const auto& d : *divs) {
            for (int s : {1, -1}) {
                cand[0] = d * s;
                for (std::size_t j = 1; j < k; ++j) cand[j] = -bound[j];
                while (true) {
                    mpz_class g1 = eval_int(cand, 1), gm1 = eval_int(cand, -1);
                    bool plausible = g1 != 0 && gm1 != 0 && q_at_one % g1 == 0 && q_at_minus_one % gm1 == 0;
                    if (plausible && divides_int(cand, q)) {
                        found = true;
                        break;
                    }
                    std::size_t j = 1;
                    while (j < k && cand[j] == bound[j]) {
                        cand[j] = -bound[j];
                        ++j;
                    }
                    if (j >= k) break;
                    ++cand[j];
                }
                if (found) return {Verdict::Reducible, factor_from_scaled(cand, D)};
            }
        }
    }
    return {exhausted ? Verdict::Irreducible : Verdict::Unknown, std::nullopt};
}

// ---------------------------------------------------------------- field

NumberField::NumberField(QPoly minpoly) : minpoly_(std::move(minpoly)), n_(static_cast<std::size_t>(minpoly_.degree())) {
    if (n_ == 0) return;
    std::vector<Rational> cur(n_);
    for (std::size_t i = 0; i < n_; ++i) cur[i] = -minpoly_.coeff(i);
    for (std::size_t k = n_; k + 1 < 2 * n_; ++k) {
        high_powers_.push_back(cur);
        // multiply by alpha
        Rational top = cur[n_ - 1];
        for (std::size_t i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1] - top * minpoly_.coeff(i);
        cur[0] = -top * minpoly_.coeff(0);
    }
}

FieldPtr NumberField::from_minimal_polynomial(const QPoly& minpoly) {
    if (minpoly.degree() < 1) throw MathError("number field needs a polynomial of degree >= 1");
    if (!minpoly.leading().is_one()) throw MathError("minimal polynomial must be monic");
    if (gcd(minpoly, derivative(minpoly)).degree() > 0) throw MathError("minimal polynomial must be squarefree");
    return FieldPtr(new NumberField(minpoly));
}

FieldPtr NumberField::create(const QPoly& minpoly) {
    if (minpoly.degree() < 1) throw MathError("number field needs a polynomial of degree >= 1");
    if (!minpoly.leading().is_one()) throw MathError("minimal polynomial must be monic");
    auto cert = certify_irreducible(minpoly);
    if (cert.verdict == Verdict::Reducible) throw MathError("minimal polynomial is reducible");
    if (cert.verdict == Verdict::Unknown) throw Inconclusive("could not certify irreducibility of the minimal polynomial");
    return FieldPtr(new NumberField(minpoly));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------- element

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
    if (!field_) {
        if (coords.size() > 1 && std::any_of(coords.begin() + 1, coords.end(), [](const Rational& c) { return !c.is_zero(); }))
            throw MathError("field-free element must be rational");
        coords_ = {coords.empty() ? Rational(0) : coords[0]};
        return;
    }
    const std::size_t n = field_->degree();
    if (coords.size() <= n) {
        coords.resize(n);
        coords_ = std::move(coords);
    } else {
        auto r = divmod(QPoly(std::move(coords)), field_->minpoly()).second;
        coords_.assign(n, Rational(0));
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) coords_[i] = r.coeffs()[i];
    }
}

NFElement NFElement::generator(const FieldPtr& field) {
    std::vector<Rational> c(field->degree());
    if (field->degree() == 1)
        c[0] = -field->minpoly().coeff(0);
    else
        c[1] = 1;
    return NFElement(field, std::move(c));
}

NFElement NFElement::from_rational(const FieldPtr& field, const Rational& v) { return NFElement(field, {v}); }

NFElement NFElement::from_poly(const FieldPtr& field, const QPoly& p) { return NFElement(field, p.coeffs()); }

std::vector<Rational> NFElement::coords(std::size_t n) const {
    std::vector<Rational> c = coords_;
    if (c.size() < n) c.resize(n);
    return c;
}

bool NFElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool NFElement::is_one() const { return coords_[0].is_one() && is_rational(); }

bool NFElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational NFElement::to_rational() const {
    if (!is_rational()) throw MathError("element is not rational");
    return coords_[0];
}

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

NFElement operator+(const NFElement& x, const NFElement& y) {
    const FieldPtr& f = common_field(x, y);
    std::vector<Rational> c(width(f));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coord(i) + y.coord(i);
    NFElement r;
    r.field_ = f;
    r.coords_ = std::move(c);
    return r;
}

NFElement operator-(const NFElement& x, const NFElement& y) {
    const FieldPtr& f = common_field(x, y);
    std::vector<Rational> c(width(f));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coord(i) - y.coord(i);
    NFElement r;
    r.field_ = f;
    r.coords_ = std::move(c);
    return r;
}

NFElement operator*(const NFElement& x, const NFElement& y) {
    const FieldPtr& f = common_field(x, y);
    NFElement r;
    r.field_ = f;
    if (!x.has_field() || !y.has_field() || x.is_rational() || y.is_rational()) {
        const NFElement& scalar_side = x.is_rational() ? x : y;
        const NFElement& other = x.is_rational() ? y : x;
        const Rational s = scalar_side.coords_[0];
        r.coords_.resize(width(f));
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = other.coord(i) * s;
        return r;
    }
    const std::size_t n = f->degree();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += x.coords_[i] * y.coords_[j];
    }
    const auto& table = f->reduction_table();
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& row = table[k - n];
        for (std::size_t i = 0; i < n; ++i) prod[i] += prod[k] * row[i];
    }
    prod.resize(n);
    r.coords_ = std::move(prod);
    return r;
}

bool operator==(const NFElement& x, const NFElement& y) {
    if (x.has_field() && y.has_field() && !same_field(x.field(), y.field())) return false;
    const std::size_t n = std::max(x.coords_.size(), y.coords_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!(x.coord(i) == y.coord(i))) return false;
    return true;
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (is_rational()) {
        NFElement r = *this;
        r.coords_.assign(coords_.size(), Rational(0));
        r.coords_[0] = coords_[0].inverse();
        return r;
    }
    auto [g, s, t] = xgcd(as_poly(), field_->minpoly());
    if (g.degree() != 0) throw MathError("element is a zero divisor");
    return NFElement(field_, s.coeffs());
}

NFElement NFElement::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    NFElement r = NFElement::from_rational(field_, 1), base = *this;
    if (!field_) r = NFElement(1);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::string NFElement::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coords_.size(); i-- > 0;) {
        const Rational& c = coords_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        std::string m = mag.is_integer() ? mag.numerator().get_str() : mag.numerator().get_str() + "/" + mag.denominator().get_str();
        if (i == 0)
            os << m;
        else {
            if (!mag.is_one()) os << m << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

LPoly lift(const QPoly& p) {
    return p.map([](const Rational& c) { return NFElement(c); });
}

// ---------------------------------------------------------------- minpoly

QPoly min_poly_over_q(const NFElement& beta) {
    if (!beta.has_field() || beta.is_rational()) return QPoly({-beta.coord(0), Rational(1)});
    const FieldPtr& f = beta.field();
    const std::size_t n = f->degree();
    std::vector<std::vector<Rational>> powers{NFElement::from_rational(f, 1).coords(n)};
    NFElement cur = NFElement::from_rational(f, 1);
    for (std::size_t r = 1; r <= n; ++r) {
        cur = cur * beta;
        Matrix<Rational> m(n, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = powers[j][i];
        auto target = cur.coords(n);
        if (auto sol = solve(m, target)) {
            std::vector<Rational> c(r + 1);
            for (std::size_t j = 0; j < r; ++j) c[j] = -(*sol)[j];
            c[r] = 1;
            return QPoly(std::move(c));
        }
        powers.push_back(std::move(target));
    }
    throw MathError("no linear dependency among powers; field degree inconsistent");
}

Matrix<Rational> multiplication_matrix(const NFElement& x) {
    const FieldPtr& f = x.field();
    const std::size_t n = f ? f->degree() : 1;
    Matrix<Rational> m(n, n);
    NFElement basis = f ? NFElement::from_rational(f, 1) : NFElement(1);
    NFElement alpha = f ? NFElement::generator(f) : NFElement(1);
    for (std::size_t j = 0; j < n; ++j) {
        auto c = (x * basis).coords(n);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
        basis = basis * alpha;
    }
    return m;
}

// ---------------------------------------------------------------- basis change

BasisChange::BasisChange(const NFElement& beta) : source_(beta.field()) {
    if (!source_) throw MathError("basis change needs an element of a number field");
    const std::size_t n = source_->degree();
    QPoly mp = min_poly_over_q(beta);
    if (static_cast<std::size_t>(mp.degree()) != n) throw MathError("element is not primitive");
    target_ = NumberField::from_minimal_polynomial(mp);
    to_alpha_ = Matrix<Rational>(n, n);
    NFElement p = NFElement::from_rational(source_, 1);
    for (std::size_t k = 0; k < n; ++k) {
        auto c = p.coords(n);
        for (std::size_t i = 0; i < n; ++i) to_alpha_(i, k) = c[i];
        p = p * beta;
    }
    to_beta_ = inverse(to_alpha_);
}

NFElement BasisChange::forward(const NFElement& x) const {
    if (x.has_field() && !same_field(x.field(), source_)) throw FieldMismatch();
    return NFElement(target_, to_beta_.apply(x.coords(source_->degree())));
}

NFElement BasisChange::backward(const NFElement& y) const {
    if (y.has_field() && !same_field(y.field(), target_)) throw FieldMismatch();
    return NFElement(source_, to_alpha_.apply(y.coords(target_->degree())));
}

}  // namespace hc
