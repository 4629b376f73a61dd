#ifndef HYPERCIRCLE_NUMBER_FIELD_HPP
#define HYPERCIRCLE_NUMBER_FIELD_HPP

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypercircle/linalg.hpp"
#include "hypercircle/rational.hpp"
#include "hypercircle/unipoly.hpp"

namespace hc {

using QPoly = UniPoly<Rational>;

enum class Verdict { Irreducible, Reducible, Unknown };

struct Irreducibility {
    Verdict verdict = Verdict::Unknown;
    std::optional<QPoly> factor;  // monic proper factor when Reducible
};

/// Squarefree test, rational-root test, then a bounded search for monic
/// integer factors of degree <= deg/2 with coefficients inside the Mignotte
/// bound. Returns Unknown once more than `budget` candidates would be tried.
/// Throws MathError on non-monic or constant input.
Irreducibility certify_irreducible(const QPoly& p, unsigned long budget = 2'000'000);

/// Distinct rational roots in increasing order, or nullopt when the divisor
/// search would exceed the budget.
std::optional<std::vector<Rational>> rational_roots(const QPoly& p, unsigned long budget = 2'000'000);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// L = Q[x]/(minpoly) with a certified irreducible monic minpoly.
class NumberField {
   public:
    /// Certifies the polynomial; throws MathError when reducible and
    /// Inconclusive when certification gives up.
    static FieldPtr create(const QPoly& minpoly);
    /// For polynomials already known to be minimal polynomials (output of
    /// min_poly_over_q); only monicity and squarefreeness are checked.
    static FieldPtr from_minimal_polynomial(const QPoly& minpoly);

    const QPoly& minpoly() const { return minpoly_; }
    std::size_t degree() const { return n_; }

    /// Coordinates of alpha^k for k in [n, 2n-2], used for reduction.
    const std::vector<std::vector<Rational>>& reduction_table() const { return high_powers_; }

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

   private:
    explicit NumberField(QPoly minpoly);

    QPoly minpoly_;
    std::size_t n_;
    std::vector<std::vector<Rational>> high_powers_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a number field in the power basis of the generator.
///
/// An element without a field is a field-free rational constant; it adopts
/// the field of the other operand in mixed arithmetic. This is what T(0)
/// and T(1) produce in generic polynomial code.
class NFElement {
   public:
    NFElement() : coords_{Rational(0)} {}
    template <std::integral I>
    NFElement(I v) : coords_{Rational(v)} {}
    NFElement(Rational v) : coords_{std::move(v)} {}
    NFElement(FieldPtr field, std::vector<Rational> coords);

    static NFElement generator(const FieldPtr& field);
    static NFElement from_rational(const FieldPtr& field, const Rational& v);
    /// Value of a rational polynomial at the generator, reduced.
    static NFElement from_poly(const FieldPtr& field, const QPoly& p);

    const FieldPtr& field() const { return field_; }
    bool has_field() const { return static_cast<bool>(field_); }

    /// Coordinates; for a field-free constant this is padded to `n`.
    std::vector<Rational> coords(std::size_t n) const;
    const std::vector<Rational>& raw_coords() const { return coords_; }
    Rational coord(std::size_t i) const { return i < coords_.size() ? coords_[i] : Rational(0); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws MathError unless is_rational().
    Rational to_rational() const;
    QPoly as_poly() const { return QPoly(coords_); }

    NFElement inverse() const;
    NFElement pow(long k) const;

    /// Human-readable, e.g. "2*a^2-a+1".
    std::string str(const std::string& var = "a") const;

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& x, const NFElement& y);
    friend NFElement operator-(const NFElement& x, const NFElement& y);
    friend NFElement operator*(const NFElement& x, const NFElement& y);
    friend NFElement operator/(const NFElement& x, const NFElement& y) { return x * y.inverse(); }
    NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
    NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
    NFElement& operator*=(const NFElement& o) { return *this = *this * o; }
    friend bool operator==(const NFElement& x, const NFElement& y);

   private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline NFElement exact_div(const NFElement& a, const NFElement& b) { return a / b; }

using LPoly = UniPoly<NFElement>;

/// Lift a rational polynomial into L[t].
LPoly lift(const QPoly& p);

/// Monic polynomial of least degree vanishing at beta, found as the first
/// linear dependency among 1, beta, beta^2, ...
QPoly min_poly_over_q(const NFElement& beta);

/// Matrix of multiplication by x on the power basis (column j = coords of
/// x * alpha^j).
Matrix<Rational> multiplication_matrix(const NFElement& x);

/// Change of primitive element: L = Q(alpha) = Q(beta).
class BasisChange {
   public:
    /// Throws MathError when beta is not a primitive element.
    explicit BasisChange(const NFElement& beta);

    const FieldPtr& source() const { return source_; }
    const FieldPtr& target() const { return target_; }
    /// Columns are the alpha-coordinates of beta^k.
    const Matrix<Rational>& to_alpha() const { return to_alpha_; }
    const Matrix<Rational>& to_beta() const { return to_beta_; }

    NFElement forward(const NFElement& x) const;
    NFElement backward(const NFElement& y) const;

   private:
    FieldPtr source_, target_;
    Matrix<Rational> to_alpha_, to_beta_;
};

}  // namespace hc

#endif  // HYPERCIRCLE_NUMBER_FIELD_HPP
