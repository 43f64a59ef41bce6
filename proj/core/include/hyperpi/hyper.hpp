#pragma once

#include <vector>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/rational.hpp"
#include "hyperpi/series.hpp"

namespace hyperpi {

// Parameters of a generalized hypergeometric series
//
//   F(x) = sum_{n>=0} c_n x^n,   c_0 = 1,
//   c_{n+1} / c_n = prod_j (upper_j + n) / ( prod_j (lower_j + n) * (n+1) ).
//
// There is one more upper than lower parameter; the trailing (n+1) is the
// implicit factorial. Lower parameters must not be nonpositive integers,
// otherwise some coefficient divides by zero.
struct HypergeometricSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
};

bool operator==(const HypergeometricSpec& a, const HypergeometricSpec& b);

// Shape and definedness checks. Throws ParseError naming the problem.
void hyper_validate(const HypergeometricSpec& s);

// c_0 .. c_{count-1} by the ratio recurrence, exact.
std::vector<Rational> hyper_coeffs(const HypergeometricSpec& s, long count);

// Single coefficient (runs the recurrence from zero; prefer hyper_coeffs in
// loops).
Rational hyper_coeff(const HypergeometricSpec& s, long n);

// The series truncated after x^order.
TruncatedSeries hyper_series(const HypergeometricSpec& s, int order);

/*
 * F(x) for |x| < 1 with a rigorous tail: terms are summed exactly until the
 * ratio bound
 *   |t_{k+1}/t_k| <= rho = |x| * prod_j max((n+a_j)/(n+beta_j), 1) < 1
 * (beta = lower parameters plus the implicit 1) certifies
 * |tail| <= |t_n| rho/(1-rho) below 2^-(prec+4); one rounding at the end.
 * Throws NumericalError for |x| >= 1.
 */
BigReal hyper_evaluate(const HypergeometricSpec& s, const Rational& x,
                       mpfr_prec_t prec);

// Ball arguments use the same tail bound driven by an exact upper bound on
// |x|, which must sit strictly below 1.
BigReal hyper_evaluate(const HypergeometricSpec& s, const BigReal& x,
                       mpfr_prec_t prec);

// How a weighted evaluation certified its tail.
struct EvalReport {
    BigReal value;
    long terms = 0;
    // True when the alternating-series acceleration produced the value; its
    // tail bound rests on a monotonicity property checked only to low order,
    // so the radius is heuristic rather than proven.
    bool accelerated = false;
};

/*
 * sum_n (a + b n) c_n x^n, the left-hand side shape of the 1/pi identities.
 *
 * |x| < 1: single exact pass accumulating sum c_n x^n and sum n c_n x^n with
 * a combined geometric tail bound. x = -1: the series is summed by
 * alternating-series acceleration (terms must alternate strictly), and the
 * report is flagged accelerated. x = 1 and |x| > 1 are refused.
 */
EvalReport hyper_evaluate_weighted(const HypergeometricSpec& s,
                                   const Rational& a, const Rational& b,
                                   const Rational& x, mpfr_prec_t prec);

EvalReport hyper_evaluate_weighted(const HypergeometricSpec& s,
                                   const Rational& a, const Rational& b,
                                   const BigReal& x, mpfr_prec_t prec);

/*
 * The hypergeometric differential operator
 *   L = theta * prod_j (theta + lower_j - 1)  -  x * prod_j (theta + upper_j)
 * with theta = x d/dx, applied to f. Every returned coefficient is exact;
 * the order matches f's. L annihilates the series with these parameters.
 */
TruncatedSeries hyper_ode_apply(const HypergeometricSpec& s,
                                const TruncatedSeries& f);

// True iff L applied to the spec's own series vanishes through x^order.
bool hyper_check_ode(const HypergeometricSpec& s, int order);

} // namespace hyperpi
