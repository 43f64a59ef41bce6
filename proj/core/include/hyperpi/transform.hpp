#pragma once

#include <optional>
#include <string>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/hyper.hpp"
#include "hyperpi/poly.hpp"
#include "hyperpi/radical.hpp"
#include "hyperpi/series.hpp"

namespace hyperpi {

// Rational functions x(p), y(p), r(p) of a common parameter, giving a
// simultaneous parametrization of both curve branches.
struct RationalParametrization {
    RationalFunction x, y, r;
};

/*
 * An algebraic transformation between two hypergeometric series: the claim
 *
 *   F(x) = r(x) * G(y(x))
 *
 * where F has the `target` parameters, G the `source` parameters, and y, r
 * are algebraic functions cut out by the bivariate curves curve_y(x, y) = 0
 * and curve_r(x, r) = 0. The seeds pin down which branch through x = 0 is
 * meant (y(0) = 0, r(0) = 1). An optional rational parametrization of the
 * same branches supports evaluation at points where the implicit curves are
 * singular.
 */
struct AlgebraicTransformation {
    std::string name;
    HypergeometricSpec source, target;
    BiPoly curve_y, curve_r;
    TruncatedSeries seed_y, seed_r;
    std::optional<RationalParametrization> param;
    std::optional<RadicalExpr> p0; // parameter value of the evaluation point
    // Singular-value theory the transformation lives in; identities being
    // translated through it must carry the same tag.
    Integer field_disc = 0;
};

// The branch of P(x, w) = 0 through the seed, as an exact series lifted to
// the requested order by valuation-aware Newton steps.
TruncatedSeries series_solution(const BiPoly& P, const TruncatedSeries& seed,
                                int order);

// Exact check of F = r * G(y) through x^order. Both algebraic prefactor and
// argument series are lifted from their curves first.
bool verify_series_identity(const AlgebraicTransformation& t, int order);

/*
 * Exact consistency of the parametrization with the curves: both composed
 * polynomials curve_y(x(p), y(p)) and curve_r(x(p), r(p)) must vanish
 * identically, and reverting x(p) must reproduce the seed branches,
 *   y(x) = y(p(x)), r(x) = r(p(x)), through x^order.
 * False when no parametrization is attached.
 */
bool verify_param_consistency(const AlgebraicTransformation& t, int order);

// Ball evaluation helpers used by branch certification (and by tests).
BigReal poly_eval_ball(const Poly& f, const BigReal& x);
BigReal rf_eval_ball(const RationalFunction& f, const BigReal& x);
BigReal bipoly_eval_ball(const BiPoly& P, const BigReal& x, const BigReal& w);

/*
 * Certified continuation of the branch of P(x, w) = 0 from a point enclosure
 * w_start at x_start toward x_target. Each step encloses the branch over an
 * x-interval with an interval Newton contraction, which certifies existence,
 * uniqueness and continuity through the tube; failed contractions halve the
 * step. Tracking stops short of x_target when the step underflows, which is
 * what happens when the branch runs into a singular point of the curve.
 */
struct TrackResult {
    Rational x_reached;
    BigReal w;     // certified enclosure of the branch at x_reached
    bool reached = false;
};
TrackResult track_branch(const BiPoly& P, const Rational& x_start,
                         const BigReal& w_start, const Rational& x_target,
                         mpfr_prec_t prec);

// Branch value and x-derivative of one curve at a target point.
struct CurvePointData {
    BigReal value;
    BigReal slope;
    bool singular_point = false; // slope came from the tangent cone at a node
};

// How transform_eval_at reaches the point.
enum class EvalRoute {
    Parametric, // evaluate x, y, r and their derivatives at p0
    Implicit,   // launch from the seed series and track both curves
};

struct TransformPointData {
    Rational x0;
    CurvePointData y, r;
    EvalRoute route = EvalRoute::Parametric;
};

/*
 * Branch data of both curves at x0.
 *
 * The parametric route needs param and p0; it checks that x(p0) really
 * encloses x0 and that x'(p0) is bounded away from zero, then pushes balls
 * through the rational functions. This route stays rigorous even when x0 is
 * a singular point of the curves, which is exactly why the parametrization
 * is carried.
 *
 * The implicit route isolates the branch near zero with a Sturm count,
 * tracks both curves to x0, and at a singular endpoint closes with the
 * squarefree part of P(x0, .): the branch limit is bracketed, confirmed
 * unique in a window, and refined by exact bisection. At a node the slope
 * comes from the tangent-cone quadratic, picking the root consistent with
 * the approach secant. The closure step ties the tracked branch to the
 * nearest root of the squarefree polynomial; unlike everything else in this
 * routine that association rests on the window's uniqueness count, not on a
 * global argument, so the parametric route is the one quoted in reports.
 */
TransformPointData transform_eval_at(const AlgebraicTransformation& t,
                                     const Rational& x0, mpfr_prec_t prec,
                                     EvalRoute route);

} // namespace hyperpi
