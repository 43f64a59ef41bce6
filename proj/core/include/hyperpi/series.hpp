#pragma once

#include <vector>

#include "hyperpi/poly.hpp"
#include "hyperpi/rational.hpp"

namespace hyperpi {

/*
 * Formal power series over Rational, truncated after x^order. Exactly
 * order+1 coefficients are stored and every one of them is exact: an
 * operation that cannot guarantee a coefficient drops it by lowering the
 * order instead. Binary operations truncate to the smaller operand order,
 * so a result's order never overstates what was actually computed.
 */
struct TruncatedSeries {
    std::vector<Rational> c;
    int order = 0;

    TruncatedSeries() : c(1, Rational(0)) {}
    TruncatedSeries(std::vector<Rational> coeffs, int order);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(const Rational& a, int order);
    static TruncatedSeries identity(int order); // x

    const Rational& operator[](int k) const { return c[k]; }
    Rational& operator[](int k) { return c[k]; }

    // Smallest k with c[k] != 0, or order+1 when all stored coefficients
    // vanish (meaning: valuation is at least order+1).
    int valuation() const;
    bool is_zero() const { return valuation() > order; }

    TruncatedSeries truncated(int new_order) const; // new_order <= order
};

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_neg(const TruncatedSeries& f);
TruncatedSeries series_scale(const Rational& a, const TruncatedSeries& f);
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// Requires g(0) != 0.
TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g);

// f(g(x)) for g with g(0) = 0, exact to min(f.order, g.order).
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

// Compositional inverse: g with f(g(x)) = x, for f(0) = 0, f'(0) != 0.
TruncatedSeries series_reversion(const TruncatedSeries& f);

// d/dx; the top coefficient's image is no longer certain, so order drops
// by one.
TruncatedSeries series_derivative(const TruncatedSeries& f);

// x * d/dx. Purely coefficientwise (c_n -> n*c_n), so the order is kept.
TruncatedSeries series_theta(const TruncatedSeries& f);

// Multiplication by x^k: known coefficients shift up, so order rises by k.
TruncatedSeries series_shift_up(const TruncatedSeries& f, int k);

// Division by x^k, requiring valuation >= k. Order drops by k.
TruncatedSeries series_shift_down(const TruncatedSeries& f, int k);

// Taylor expansion of a rational function at 0. Requires den(0) != 0.
TruncatedSeries ratfunc_expand(const RationalFunction& R, int order);

// P(x, f(x)) truncated at f.order (or `order` if given and smaller), by
// Horner in the w variable.
TruncatedSeries bipoly_eval_series(const BiPoly& P, const TruncatedSeries& f);
TruncatedSeries bipoly_eval_series(const BiPoly& P, const TruncatedSeries& f,
                                   int order);

/*
 * Newton lifting of an algebraic branch. Given P(x, w) and a seed series
 * already satisfying P(x, seed) = 0 mod x^(k+1), returns the unique branch
 * W with P(x, W) = 0 mod x^(N+1) extending the seed.
 *
 * The classical regularity condition is dP/dw(0, seed(0)) != 0. That is the
 * v = 0 case of the condition actually enforced here: with
 *     v  = val dP/dw(x, seed)   and   m0 = val P(x, seed),
 * lifting requires  m0 >= k+1,  m0 >= 2v+1,  m0 - v >= k+1,
 * and each step  w -> w - [P(x,w)/x^v] / [P_w(x,w)/x^v]  (series division
 * after cancelling x^v) raises the excess m - 2v geometrically. This
 * handles branches that pass tangentially through the expansion point,
 * such as a quartic whose branch starts at x^3.
 *
 * Throws NumericalError when the seed is not a root to its stated order or
 * when the valuation conditions fail (singular branch).
 */
TruncatedSeries series_newton_root(const BiPoly& P, const TruncatedSeries& seed,
                                   int N);

} // namespace hyperpi
