#include "hyperpi/transform.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hyperpi/error.hpp"
#include "hyperpi/numerics.hpp"

namespace hyperpi {

TruncatedSeries series_solution(const BiPoly& P, const TruncatedSeries& seed,
                                int order) {
    return series_newton_root(P, seed, order);
}

bool verify_series_identity(const AlgebraicTransformation& t, int order) {
    TruncatedSeries y = series_solution(t.curve_y, t.seed_y, order);
    TruncatedSeries r = series_solution(t.curve_r, t.seed_r, order);
    if (y[0] != 0) return false; // composition needs y(0) = 0
    TruncatedSeries F = hyper_series(t.target, order);
    TruncatedSeries G = hyper_series(t.source, order);
    TruncatedSeries rhs = series_mul(r, series_compose(G, y));
    return series_sub(F, rhs).is_zero();
}

bool verify_param_consistency(const AlgebraicTransformation& t, int order) {
    if (!t.param) return false;
    const RationalParametrization& pr = *t.param;

    // The substitutions must vanish as polynomial identities, not merely to
    // some order: bipoly_substitute clears denominators exactly.
    if (bipoly_substitute(t.curve_y, pr.x, pr.y).num.degree() >= 0)
        return false;
    if (bipoly_substitute(t.curve_r, pr.x, pr.r).num.degree() >= 0)
        return false;

    // Cross-check against the implicit branches: revert x(p) and compose.
    TruncatedSeries xs = ratfunc_expand(pr.x, order);
    if (xs[0] != 0 || xs[1] == 0) return false;
    TruncatedSeries pinv = series_reversion(xs);
    TruncatedSeries y_of_x = series_compose(ratfunc_expand(pr.y, order), pinv);
    TruncatedSeries r_of_x = series_compose(ratfunc_expand(pr.r, order), pinv);
    TruncatedSeries yb = series_solution(t.curve_y, t.seed_y, order);
    TruncatedSeries rb = series_solution(t.curve_r, t.seed_r, order);
    return series_sub(y_of_x, yb).is_zero() && series_sub(r_of_x, rb).is_zero();
}

BigReal poly_eval_ball(const Poly& f, const BigReal& x) {
    BigReal acc(x.precision());
    for (int i = f.degree(); i >= 0; --i)
        acc = shift_rational(acc * x, f.coeff(i));
    return acc;
}

BigReal rf_eval_ball(const RationalFunction& f, const BigReal& x) {
    BigReal den = poly_eval_ball(f.den, x);
    if (den.contains_zero())
        throw NumericalError(
            "rational function denominator enclosure contains zero");
    return poly_eval_ball(f.num, x) / den;
}

BigReal bipoly_eval_ball(const BiPoly& P, const BigReal& x, const BigReal& w) {
    mpfr_prec_t wp = std::max(x.precision(), w.precision());
    if (P.is_zero()) return BigReal(wp);
    int dx = P.deg_x(), dw = P.deg_w();
    BigReal acc(wp);
    for (int j = dw; j >= 0; --j) {
        std::vector<Rational> row(dx + 1);
        for (int i = 0; i <= dx; ++i) row[i] = P.coeff(i, j);
        acc = acc * w + poly_eval_ball(Poly(std::move(row)), x);
    }
    return acc;
}

namespace {

struct RatInterval {
    Rational lo, hi;
};

RatInterval to_interval(const BigReal& b) {
    Rational m = b.mid_rational(), r = b.rad_rational();
    return {m - r, m + r};
}

BigReal ball_hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    return BigReal((lo + hi) / 2, prec).inflated((hi - lo) / 2);
}

BigReal ball_meet(const BigReal& a, const BigReal& b, mpfr_prec_t prec) {
    RatInterval ia = to_interval(a), ib = to_interval(b);
    Rational lo = std::max(ia.lo, ib.lo);
    Rational hi = std::min(ia.hi, ib.hi);
    if (lo > hi) throw NumericalError("certified enclosures do not intersect");
    return ball_hull(lo, hi, prec);
}

bool strictly_inside(const BigReal& inner, const BigReal& outer) {
    RatInterval ii = to_interval(inner), io = to_interval(outer);
    return io.lo < ii.lo && ii.hi < io.hi;
}

// bipoly_eval_ball rebuilds its row polynomials from the coefficient map on
// every call; that dominates tight tracking loops. Cache the rows once.
struct CurveEvaluator {
    std::vector<Poly> rows; // rows[j]: coefficient of w^j as a poly in x

    explicit CurveEvaluator(const BiPoly& P) {
        if (P.is_zero()) return;
        int dx = P.deg_x(), dw = P.deg_w();
        rows.reserve(dw + 1);
        for (int j = 0; j <= dw; ++j) {
            std::vector<Rational> row(dx + 1);
            for (int i = 0; i <= dx; ++i) row[i] = P.coeff(i, j);
            rows.emplace_back(std::move(row));
        }
    }

    BigReal operator()(const BigReal& x, const BigReal& w) const {
        mpfr_prec_t wp = std::max(x.precision(), w.precision());
        BigReal acc(wp);
        for (int j = (int)rows.size() - 1; j >= 0; --j)
            acc = acc * w + poly_eval_ball(rows[j], x);
        return acc;
    }
};

} // namespace

TrackResult track_branch(const BiPoly& P, const Rational& x_start,
                         const BigReal& w_start, const Rational& x_target,
                         mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 64;
    BiPoly Pw = bipoly_dw(P), Px = bipoly_dx(P);
    CurveEvaluator evP(P);
    CurveEvaluator evPw(Pw);
    CurveEvaluator evPx(Px);
    CurveEvaluator evPwx(bipoly_dx(Pw));
    CurveEvaluator evPww(bipoly_dw(Pw));

    TrackResult st;
    st.x_reached = x_start;
    st.w = w_start;
    st.reached = (x_start == x_target);
    if (st.reached) return st;

    Rational span = x_target - x_start;
    Rational step = span / 8;
    Rational min_step = abs(span) * rat_pow2(-80);

    long iterations = 0;
    while (!st.reached) {
        if (++iterations > 200000)
            throw NumericalError("branch tracking exceeded its step budget");

        Rational remaining = x_target - st.x_reached;
        if (abs(step) > abs(remaining)) step = remaining;
        Rational x_next = st.x_reached + step;

        BigReal X = ball_hull(std::min(st.x_reached, x_next),
                              std::max(st.x_reached, x_next), wp);

        // Size the trial tube by how far the branch actually moves over the
        // step, estimated from the point slope -Px/Pw. Sizing it by the raw
        // step instead makes the zero test on Pw fail long before the branch
        // geometry requires it: approaching a near-singular abscissa with a
        // flat branch, steps collapse proportionally to the residual slope
        // and the crawl takes ~1000x more iterations than needed.
        Rational slope_mag(1);
        {
            BigReal xa(st.x_reached, wp);
            BigReal wm0(st.w.mid_rational(), wp);
            BigReal pwp = evPw(xa, wm0);
            if (!pwp.contains_zero())
                slope_mag = (evPx(xa, wm0) / pwp).abs_upper();
        }
        Rational base = st.w.rad_rational() + slope_mag * abs(step) +
                        abs(step) * rat_pow2(-30);

        // Interval Newton over the x-interval: contraction into the trial
        // tube certifies a unique continuous branch through it. Try a few
        // tube widths before shrinking the step.
        // Centered forms throughout: a direct ball Horner over the x-interval
        // loses the cancellation between the w-rows and comes out orders of
        // magnitude wider than |P_x| * step, freezing the crawl near a
        // singular target. Mean-value enclosures keep the true slope scaling:
        //   P(X, wm)  in  P(xc, wm) + P_x(X, wm) * (X - xc)
        //   P_w(X, T) in  P_w(xc, wc) + P_wx(X, T) * (X - xc)
        //                              + P_ww(X, T) * (T - wc)
        Rational xc = st.x_reached + step / 2;
        BigReal Xc(xc, wp);
        BigReal DX = BigReal(wp).inflated(abs(step) / 2);

        bool advanced = false;
        BigReal w_next(wp);
        for (int widen = 0; widen < 4 && !advanced; ++widen) {
            Rational extra = base * rat_pow2(2 * widen);
            BigReal tube = st.w.inflated(extra);
            BigReal wm(tube.mid_rational(), wp);
            BigReal DW = BigReal(wp).inflated(tube.rad_rational());
            BigReal pw = evPw(Xc, wm) + evPwx(X, tube) * DX + evPww(X, tube) * DW;
            if (pw.contains_zero()) continue;
            BigReal num = evP(Xc, wm) + evPx(X, wm) * DX;
            BigReal contracted = wm - num / pw;
            if (strictly_inside(contracted, tube)) {
                w_next = ball_meet(contracted, tube, wp);
                advanced = true;
            }
        }
        if (!advanced) {
            step /= 2;
            if (abs(step) < min_step) return st; // stalled short of target
            continue;
        }

        // Sharpen at the exact new abscissa; the meet keeps soundness even
        // if an iteration fails to help.
        BigReal xe(x_next, wp);
        for (int it = 0; it < 2; ++it) {
            BigReal pw = evPw(xe, w_next);
            if (pw.contains_zero()) break;
            BigReal wm(w_next.mid_rational(), wp);
            BigReal refined = wm - evP(xe, wm) / pw;
            w_next = ball_meet(refined, w_next, wp);
        }

        st.x_reached = x_next;
        st.w = w_next;
        st.reached = (x_next == x_target);
        step *= 2;
        Rational cap = abs(span) / 4;
        if (abs(step) > cap) step = (step > 0) ? cap : Rational(-cap);
    }
    return st;
}

namespace {

// Certified enclosure of the seeded branch at a small regular abscissa x1:
// the extended series picks the branch, a Sturm count plus sign change
// isolates exactly one root of the exact fiber polynomial around it, and
// bisection tightens the bracket.
BigReal launch_branch(const BiPoly& P, const TruncatedSeries& seed,
                      const Rational& x1, mpfr_prec_t prec) {
    int order = std::max(seed.order, 12);
    TruncatedSeries branch = series_newton_root(P, seed, order);
    Rational est;
    for (int i = order; i >= 0; --i) est = est * x1 + branch[i];

    Poly fiber = poly_squarefree_part(bipoly_at_x(P, x1));
    Rational h(1, 256);
    for (int tries = 0; tries < 200; ++tries, h /= 2) {
        Rational lo = est - h, hi = est + h;
        if (fiber(lo) == 0 || fiber(hi) == 0) continue;
        if (sgn(fiber(lo)) == sgn(fiber(hi))) continue;
        if (sturm_count(fiber, lo, hi) != 1) continue;
        return refine_real_root(fiber, lo, hi, prec + 16);
    }
    throw NumericalError("cannot isolate the branch at the launch point");
}

CurvePointData curve_point(const BiPoly& P, const TruncatedSeries& seed,
                           const Rational& x0, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 64;
    BiPoly Px = bipoly_dx(P), Pw = bipoly_dw(P);
    CurvePointData out;

    Rational x1 = x0 / 64;
    BigReal w1 = launch_branch(P, seed, x1, prec);
    TrackResult tr = track_branch(P, x1, w1, x0, prec);
    BigReal x0b(x0, wp);

    if (tr.reached) {
        BigReal pw = bipoly_eval_ball(Pw, x0b, tr.w);
        if (!pw.contains_zero()) {
            out.value = tr.w;
            out.slope = -(bipoly_eval_ball(Px, x0b, tr.w) / pw);
            return out;
        }
        // Reached the abscissa but the curve is singular there anyway; fall
        // through to the closure path with a zero gap.
    }

    // The branch limit at x0 is a root of the squarefree fiber polynomial.
    // Bracket it from the last certified enclosure, confirm there is no
    // second root in a much wider window, and bisect.
    Poly S = poly_squarefree_part(bipoly_at_x(P, x0));
    Rational wt = tr.w.mid_rational();
    Rational h = 4 * (tr.w.rad_rational() + abs(x0 - tr.x_reached));
    if (h == 0) h = rat_pow2(-(long)prec);

    BigReal ystar(wp);
    bool isolated = false;
    for (int tries = 0; tries < 60 && !isolated; ++tries, h *= 4) {
        Rational lo = wt - h, hi = wt + h;
        if (S(lo) == 0 || S(hi) == 0) continue;
        if (sgn(S(lo)) == sgn(S(hi))) continue;
        if (sturm_count(S, lo, hi) != 1) continue;
        Rational big = 1024 * h;
        if (S(wt - big) == 0 || S(wt + big) == 0) continue;
        if (sturm_count(S, wt - big, wt + big) != 1) continue;
        ystar = refine_real_root(S, lo, hi, prec + 16);
        isolated = true;
    }
    if (!isolated)
        throw NumericalError(
            "branch limit could not be isolated at the singular point");
    out.value = ystar;

    BigReal pxv = bipoly_eval_ball(Px, x0b, ystar);
    BigReal pwv = bipoly_eval_ball(Pw, x0b, ystar);
    if (!pwv.contains_zero()) {
        out.slope = -(pxv / pwv);
        return out;
    }
    if (!pxv.contains_zero())
        throw NumericalError(
            "vertical tangent: the branch has no finite slope here");

    // Node. Second-order Taylor along direction (1, m) gives the tangent
    // cone  P_ww m^2 + 2 P_xw m + P_xx = 0; the branch takes the root the
    // approach secant points at.
    BigReal A = bipoly_eval_ball(bipoly_dw(Pw), x0b, ystar);
    BigReal B = bipoly_eval_ball(bipoly_dw(Px), x0b, ystar);
    BigReal C = bipoly_eval_ball(bipoly_dx(Px), x0b, ystar);
    if (A.contains_zero())
        throw NumericalError("degenerate tangent cone at the singular point");
    BigReal disc = B * B - A * C;
    if (!disc.definitely_positive())
        throw NumericalError(
            "tangent cone does not split into two real directions");
    BigReal sq = sqrt_ball(disc);
    BigReal m1 = ((-B) + sq) / A;
    BigReal m2 = ((-B) - sq) / A;

    BigReal dx0(tr.x_reached - x0, wp);
    BigReal secant = (tr.w - ystar) / dx0;
    BigReal d1 = secant - m1, d2 = secant - m2;
    if (d1.abs_upper() < d2.abs_lower())
        out.slope = m1;
    else if (d2.abs_upper() < d1.abs_lower())
        out.slope = m2;
    else
        throw NumericalError(
            "cannot attribute the approach direction to a tangent-cone "
            "branch");
    out.singular_point = true;
    return out;
}

} // namespace

TransformPointData transform_eval_at(const AlgebraicTransformation& t,
                                     const Rational& x0, mpfr_prec_t prec,
                                     EvalRoute route) {
    TransformPointData out;
    out.x0 = x0;
    out.route = route;

    if (route == EvalRoute::Parametric) {
        if (!t.param || !t.p0)
            throw NumericalError("transformation '" + t.name +
                                 "' carries no parametrization");
        mpfr_prec_t wp = prec + 64;
        BigReal p0 = radical_eval(*t.p0, wp);
        const RationalParametrization& pr = *t.param;

        BigReal xv = rf_eval_ball(pr.x, p0);
        if (!xv.contains(x0))
            throw NumericalError(
                "x(p0) does not enclose the requested point");

        BigReal dxv = rf_eval_ball(rf_derivative(pr.x), p0);
        if (dxv.contains_zero())
            throw NumericalError(
                "x'(p0) cannot be bounded away from zero; no chain rule "
                "through a critical parameter");

        out.y.value = rf_eval_ball(pr.y, p0);
        out.r.value = rf_eval_ball(pr.r, p0);
        out.y.slope = rf_eval_ball(rf_derivative(pr.y), p0) / dxv;
        out.r.slope = rf_eval_ball(rf_derivative(pr.r), p0) / dxv;
        return out;
    }

    out.y = curve_point(t.curve_y, t.seed_y, x0, prec);
    out.r = curve_point(t.curve_r, t.seed_r, x0, prec);
    return out;
}

} // namespace hyperpi
