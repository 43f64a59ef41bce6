#include "hyperpi/series.hpp"

#include <algorithm>

#include "hyperpi/error.hpp"

namespace hyperpi {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int ord)
    : c(std::move(coeffs)), order(ord) {
    if (order < 0) throw NumericalError("series order must be >= 0");
    c.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Rational>(), order);
}

TruncatedSeries TruncatedSeries::constant(const Rational& a, int order) {
    TruncatedSeries f = zero(order);
    f.c[0] = a;
    return f;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries f = zero(order);
    if (order >= 1) f.c[1] = 1;
    return f;
}

int TruncatedSeries::valuation() const {
    for (int k = 0; k <= order; ++k)
        if (c[k] != 0) return k;
    return order + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order)
        throw NumericalError("cannot extend a truncated series");
    return TruncatedSeries(
        std::vector<Rational>(c.begin(), c.begin() + new_order + 1), new_order);
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f.order == g.order && f.c == g.c;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    int n = std::min(f.order, g.order);
    TruncatedSeries r = TruncatedSeries::zero(n);
    for (int k = 0; k <= n; ++k) r.c[k] = f.c[k] + g.c[k];
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return series_add(f, series_neg(g));
}

TruncatedSeries series_neg(const TruncatedSeries& f) {
    TruncatedSeries r = f;
    for (auto& a : r.c) a = -a;
    return r;
}

TruncatedSeries series_scale(const Rational& a, const TruncatedSeries& f) {
    TruncatedSeries r = f;
    for (auto& x : r.c) x *= a;
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    int n = std::min(f.order, g.order);
    TruncatedSeries r = TruncatedSeries::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (f.c[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.c[j] == 0) continue;
            r.c[i + j] += f.c[i] * g.c[j];
        }
    }
    return r;
}

TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.c[0] == 0)
        throw NumericalError("series division by a series with zero constant term");
    int n = std::min(f.order, g.order);
    TruncatedSeries r = TruncatedSeries::zero(n);
    for (int k = 0; k <= n; ++k) {
        Rational s = f.c[k];
        for (int j = 0; j < k; ++j) s -= r.c[j] * g.c[k - j];
        r.c[k] = s / g.c[0];
    }
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.c[0] != 0)
        throw NumericalError("series composition requires g(0) = 0");
    int n = std::min(f.order, g.order);
    // Horner: acc = f_n, acc = acc*g + f_k. With g(0) = 0 every truncation
    // at order n is exact.
    TruncatedSeries acc = TruncatedSeries::zero(n);
    TruncatedSeries gt = g.truncated(n);
    for (int k = std::min(f.order, n); k >= 0; --k) {
        acc = series_mul(acc, gt);
        acc.c[0] += f.c[k];
    }
    return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& f) {
    if (f.c[0] != 0 || f.order < 1 || f.c[1] == 0)
        throw NumericalError("series reversion requires f(0) = 0, f'(0) != 0");
    int n = f.order;
    // Split f = f1*x + h with val(h) >= 2 and iterate g <- (x - h(g))/f1.
    // If g is exact to order c then h(g) is exact to order c+1 (every term
    // of h is quadratic or higher in its argument), so each pass gains one
    // order; n-1 passes reach order n.
    Rational inv_f1 = Rational(1) / f.c[1];
    TruncatedSeries h = f;
    h.c[1] = 0;
    TruncatedSeries g = TruncatedSeries::zero(n);
    g.c[1] = inv_f1;
    for (int pass = 1; pass < n; ++pass) {
        TruncatedSeries t = series_compose(h, g);
        for (int k = 0; k <= n; ++k)
            g.c[k] = ((k == 1 ? Rational(1) : Rational(0)) - t.c[k]) * inv_f1;
    }
    TruncatedSeries back = series_compose(f, g);
    for (int k = 0; k <= n; ++k) {
        if (back.c[k] != (k == 1 ? Rational(1) : Rational(0)))
            throw NumericalError("series reversion failed to converge");
    }
    return g;
}

TruncatedSeries series_derivative(const TruncatedSeries& f) {
    if (f.order == 0) return TruncatedSeries::zero(0);
    TruncatedSeries r = TruncatedSeries::zero(f.order - 1);
    for (int k = 1; k <= f.order; ++k) r.c[k - 1] = Rational(k) * f.c[k];
    return r;
}

TruncatedSeries series_theta(const TruncatedSeries& f) {
    TruncatedSeries r = f;
    for (int k = 0; k <= f.order; ++k) r.c[k] *= k;
    return r;
}

TruncatedSeries series_shift_up(const TruncatedSeries& f, int k) {
    TruncatedSeries r = TruncatedSeries::zero(f.order + k);
    for (int i = 0; i <= f.order; ++i) r.c[i + k] = f.c[i];
    return r;
}

TruncatedSeries series_shift_down(const TruncatedSeries& f, int k) {
    if (f.valuation() < k)
        throw NumericalError("series_shift_down: valuation below shift");
    if (f.order < k) throw NumericalError("series_shift_down: order below shift");
    TruncatedSeries r = TruncatedSeries::zero(f.order - k);
    for (int i = k; i <= f.order; ++i) r.c[i - k] = f.c[i];
    return r;
}

TruncatedSeries ratfunc_expand(const RationalFunction& R, int order) {
    if (R.den.coeff(0) == 0)
        throw NumericalError("ratfunc_expand: pole at the expansion point");
    auto to_series = [order](const Poly& p) {
        TruncatedSeries s = TruncatedSeries::zero(order);
        for (int k = 0; k <= std::min(order, p.degree()); ++k) s.c[k] = p.coeff(k);
        return s;
    };
    return series_div(to_series(R.num), to_series(R.den));
}

TruncatedSeries bipoly_eval_series(const BiPoly& P, const TruncatedSeries& f) {
    return bipoly_eval_series(P, f, f.order);
}

TruncatedSeries bipoly_eval_series(const BiPoly& P, const TruncatedSeries& f,
                                   int order) {
    int n = std::min(order, f.order);
    TruncatedSeries ft = f.truncated(n);
    // Horner in w over series-in-x coefficients.
    int dw = P.deg_w();
    TruncatedSeries acc = TruncatedSeries::zero(n);
    for (int j = dw; j >= 0; --j) {
        acc = series_mul(acc, ft);
        for (const auto& [k, v] : P.t) {
            if (k.second == j && k.first <= n) acc.c[k.first] += v;
        }
    }
    return acc;
}

TruncatedSeries series_newton_root(const BiPoly& P, const TruncatedSeries& seed,
                                   int N) {
    int k = seed.order;
    if (N < k) return seed.truncated(N);

    BiPoly Pw = bipoly_dw(P);

    // Precondition checks, driven by the valuations on the seed.
    {
        TruncatedSeries pw_seed = bipoly_eval_series(Pw, seed, k);
        int v = pw_seed.valuation();
        if (v > k)
            throw NumericalError(
                "series_newton_root: dP/dw vanishes on the seed to its whole "
                "order (singular branch)");
        TruncatedSeries res0 = bipoly_eval_series(
            P, TruncatedSeries(seed.c, k + v + 1), k + v + 1);
        int m0 = res0.valuation();
        if (m0 <= k)
            throw NumericalError("series_newton_root: seed is not a root to its "
                                 "stated order");
        if (m0 < 2 * v + 1 || m0 - v <= k)
            throw NumericalError(
                "series_newton_root: branch too singular to lift (valuation "
                "conditions m0 >= 2v+1 and m0-v > k fail)");
    }

    int work = N; // current working order
    TruncatedSeries w(seed.c, work);
    // Newton iteration at full order: each pass at least doubles the excess
    // of correctness beyond 2v, so ceil(log2(N)) + 2 passes always suffice.
    // The loop instead runs until the exact residual vanishes, which is the
    // real postcondition anyway.
    for (int pass = 0; pass < 64; ++pass) {
        TruncatedSeries pw = bipoly_eval_series(Pw, w, work);
        int v = pw.valuation();
        if (v > work)
            throw NumericalError("series_newton_root: singular branch during lift");
        // Both evaluations run to order work+v so that after dividing out x^v
        // the correction still covers every index up to work. At order work
        // alone the top v correction coefficients would be cut off and the
        // iteration could stall one step short of the target order.
        if (v > 0)
            pw = bipoly_eval_series(Pw, TruncatedSeries(w.c, work + v), work + v);
        TruncatedSeries res =
            bipoly_eval_series(P, TruncatedSeries(w.c, work + v), work + v);
        if (res.is_zero()) return w.truncated(N);
        TruncatedSeries corr = series_div(series_shift_down(res, v),
                                          series_shift_down(pw, v));
        bool changed = false;
        for (int i = 0; i <= work; ++i) {
            if (i <= corr.order && corr.c[i] != 0) {
                w.c[i] -= corr.c[i];
                changed = true;
            }
        }
        if (!changed)
            throw NumericalError("series_newton_root: stalled without converging");
    }
    throw NumericalError("series_newton_root: did not converge");
}

} // namespace hyperpi
