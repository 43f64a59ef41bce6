#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperpi/rational.hpp"

namespace hyperpi {

/*
 * Dense univariate polynomials over Rational, stored as ascending
 * coefficients with no trailing zeros (the zero polynomial is the empty
 * vector). Degrees stay small in this project (the largest is 16, a
 * parametrization denominator), so dense representation and schoolbook
 * multiplication are the right tools.
 */
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& a);
    static Poly monomial(const Rational& a, int k);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const Rational& leading() const { return c.back(); }
    Rational coeff(int k) const;

    Rational operator()(const Rational& x) const; // Horner
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly operator*(const Rational& a, const Poly& f);
bool operator==(const Poly& f, const Poly& g);

Poly poly_pow(const Poly& f, int e);
Poly poly_derivative(const Poly& f);

// Euclidean division: f = q*g + r with deg r < deg g. Throws on g = 0.
struct PolyDivMod {
    Poly quot;
    Poly rem;
};
PolyDivMod poly_divmod(const Poly& f, const Poly& g);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly f, Poly g);

// f with squared factors removed: f / gcd(f, f'), made primitive. The root
// set is preserved, every root becomes simple. Used to close out branch
// tracking at a point where the curve has a multiple root.
Poly poly_squarefree_part(const Poly& f);

// Number of distinct real roots of f in the open interval (a, b), by a
// Sturm chain evaluated exactly. Requires a < b and f nonzero at both
// endpoints; throws NumericalError otherwise.
long sturm_count(const Poly& f, const Rational& a, const Rational& b);

/*
 * Rational function num/den in one variable, reduced so that
 * gcd(num, den) is constant, both parts have integer coefficients with
 * content 1, and den has positive leading coefficient. The normalization
 * makes serialization canonical.
 */
struct RationalFunction {
    Poly num;
    Poly den;

    RationalFunction() : num(), den(Poly::constant(1)) {}
    RationalFunction(Poly n, Poly d); // reduces and normalizes

    // Skips reduction. bipoly_substitute uses this for its possibly huge
    // intermediate quotients, where only numerator vanishing matters.
    static RationalFunction raw(Poly n, Poly d);

    bool is_zero() const { return num.is_zero(); }
    Rational operator()(const Rational& x) const; // throws on pole
};

RationalFunction rf_derivative(const RationalFunction& R); // quotient rule
bool operator==(const RationalFunction& a, const RationalFunction& b);

/*
 * Bivariate polynomial in (x, w): sparse map from (deg_x, deg_w) to a
 * nonzero Rational coefficient. The implicit curves are sparse in w and
 * dense-ish in x, so a sorted map keeps things simple and deterministic.
 */
struct BiPoly {
    std::map<std::pair<int, int>, Rational> t;

    bool is_zero() const { return t.empty(); }
    int deg_x() const;
    int deg_w() const;
    void add_term(int i, int j, const Rational& coeff);
    Rational coeff(int i, int j) const;

    Rational operator()(const Rational& x, const Rational& w) const;
};

BiPoly operator+(const BiPoly& P, const BiPoly& Q);
BiPoly operator*(const Rational& a, const BiPoly& P);
bool operator==(const BiPoly& P, const BiPoly& Q);

BiPoly bipoly_dx(const BiPoly& P);
BiPoly bipoly_dw(const BiPoly& P);

// P(x0, w) as a univariate polynomial in w.
Poly bipoly_at_x(const BiPoly& P, const Rational& x0);

// Substitutes rational functions for both variables:
//   P(X(p), W(p)) = N(p) / (Bx(p)^dx * Bw(p)^dw)
// assembled over the common denominator, with
//   N = sum c_ij * Ax^i * Bx^(dx-i) * Aw^j * Bw^(dw-j).
// The result is intentionally not reduced (see RationalFunction::raw);
// callers test identical vanishing via is_zero().
RationalFunction bipoly_substitute(const BiPoly& P, const RationalFunction& X,
                                   const RationalFunction& W);

} // namespace hyperpi
