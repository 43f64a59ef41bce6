#pragma once

#include <functional>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/poly.hpp"
#include "hyperpi/rational.hpp"

namespace hyperpi {

// pi as a ball with radius below 2^(1-prec). Machin's arctangent combination
// 16*atan(1/5) - 4*atan(1/239), each arctangent summed as an exact rational
// alternating partial sum whose tail is bounded by the first omitted term,
// so the enclosure needs no floating-point error analysis beyond one final
// rounding.
BigReal pi_value(mpfr_prec_t prec);

// Independent cross-check of pi_value built on Stormer's combination
// 24*atan(1/8) + 8*atan(1/57) + 4*atan(1/239). Same contract.
BigReal pi_value_stormer(mpfr_prec_t prec);

/*
 * Accelerated evaluation of an alternating series sum_{k>=0} t_k where the
 * signs of t_k strictly alternate. Uses Chebyshev-weighted summation: with
 * d = T_n(3) the weights are exact integers and the estimate converges like
 * (3 + sqrt 8)^-n, about 1.31 decimal digits per term, even though the raw
 * series may converge arbitrarily slowly.
 *
 * The tail bound |estimate - S| <= |t_0| / T_n(3) is PROVEN only when the
 * term moduli form a totally monotone sequence (all iterated forward
 * differences nonnegative). An oracle cannot certify that globally, so the
 * implementation checks strict sign alternation plus the first four
 * difference orders and reports the bound as heuristic. Callers that need a
 * fully rigorous enclosure must confirm total monotonicity themselves or use
 * a different evaluation route.
 */
struct AccelResult {
    BigReal value;        // estimate inflated by tail_bound
    long terms = 0;       // number of series terms consumed
    Rational tail_bound;  // |t_0| / T_n(3), already folded into value's radius
    bool heuristic_tail = true;
};

// term(k) returns the signed k-th term exactly. Throws NumericalError when
// the signs fail to alternate or the moduli fail the low-order monotonicity
// screen. Callers must return a materialized Rational: returning a raw
// gmpxx expression template dangles its temporaries once the lambda exits.
AccelResult alt_accel_sum(const std::function<Rational(long)>& term,
                          mpfr_prec_t prec);

// Ball-oracle variant for terms with no exact rational form. term(k, wprec)
// must return an enclosure of the k-th signed term computed at working
// precision wprec; enclosures too wide to pin the sign are rejected.
AccelResult alt_accel_sum_ball(
    const std::function<BigReal(long, mpfr_prec_t)>& term, mpfr_prec_t prec);

// Shrink a sign-change bracket [lo, hi] of p by exact rational bisection
// until the returned ball has radius at most 2^-(prec+2). The endpoint
// signs must be nonzero and opposite; otherwise NumericalError.
BigReal refine_real_root(const Poly& p, const Rational& lo,
                         const Rational& hi, mpfr_prec_t prec);

// Same loop with a caller-supplied exact sign oracle (-1, 0, +1). A zero
// from the oracle is taken as an exact root hit.
BigReal refine_real_root(const std::function<int(const Rational&)>& sign_at,
                         const Rational& lo, const Rational& hi,
                         mpfr_prec_t prec);

} // namespace hyperpi
