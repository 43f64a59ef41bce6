#include "hyperpi/hyper.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "hyperpi/error.hpp"
#include "hyperpi/numerics.hpp"

namespace hyperpi {

bool operator==(const HypergeometricSpec& a, const HypergeometricSpec& b) {
    return a.upper == b.upper && a.lower == b.lower;
}

void hyper_validate(const HypergeometricSpec& s) {
    if (s.upper.empty())
        throw ParseError("hypergeometric spec has no upper parameters");
    if (s.upper.size() != s.lower.size() + 1)
        throw ParseError(
            "hypergeometric spec needs exactly one more upper parameter "
            "than lower (got " + std::to_string(s.upper.size()) + " upper, " +
            std::to_string(s.lower.size()) + " lower)");
    for (const auto& b : s.lower)
        if (is_nonpositive_integer(b))
            throw ParseError("lower parameter " + rat_str(b) +
                             " is a nonpositive integer; the series is "
                             "undefined");
}

namespace {

// One step of the ratio recurrence: c_{n+1} from c_n.
Rational coeff_step(const HypergeometricSpec& s, long n, const Rational& cn) {
    Rational num(1), den(1);
    for (const auto& a : s.upper) num *= a + n;
    for (const auto& b : s.lower) den *= b + n;
    den *= n + 1;
    return cn * num / den;
}

// t_{n+1} = t_n * x * prod(a+n) / (prod(b+n) * (n+1)), the term recurrence.
Rational coeff_step_term(const HypergeometricSpec& s, long n,
                         const Rational& tn, const Rational& x) {
    Rational num(1), den(1);
    for (const auto& a : s.upper) num *= a + n;
    for (const auto& b : s.lower) den *= b + n;
    den *= n + 1;
    return tn * x * num / den;
}

// Smallest n making every n + p strictly positive, so that from n on the
// term ratio is a product of positive factors each monotone toward 1.
long tail_start_index(const HypergeometricSpec& s) {
    long start = 1;
    auto consider = [&start](const Rational& p) {
        if (p > 0) return;
        Rational mp = -p;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), mpq_numref(mp.get_mpq_t()),
                   mpq_denref(mp.get_mpq_t()));
        long candidate = f.get_si() + 1;
        start = std::max(start, candidate);
    };
    for (const auto& a : s.upper) consider(a);
    for (const auto& b : s.lower) consider(b);
    return start;
}

// For n at or beyond the tail start, every later term ratio modulus is at
// most X * prod_j max((n+a_j)/(n+beta_j), 1), beta = lower + {1}: factors
// above 1 only shrink with n and factors below 1 stay below 1.
Rational ratio_bound(const HypergeometricSpec& s, const Rational& X, long n) {
    Rational rho = X;
    std::vector<Rational> beta = s.lower;
    beta.push_back(Rational(1));
    // Pair in sorted order; any pairing is sound, this one is tighter.
    std::vector<Rational> up = s.upper;
    std::sort(up.begin(), up.end());
    std::sort(beta.begin(), beta.end());
    for (size_t j = 0; j < up.size(); ++j) {
        Rational num = up[j] + n;
        Rational den = beta[j] + n;
        if (num > den) rho *= num / den;
    }
    return rho;
}

constexpr long kTermCap = 4000000;

// Shared exact-argument core: S = sum c_n x^n and W = sum n c_n x^n with a
// combined tail bound |a| tail(S) + |b| tail(W) pushed below 2^-(prec+4).
EvalReport weighted_geometric(const HypergeometricSpec& s, const Rational& a,
                              const Rational& b, const Rational& x,
                              mpfr_prec_t prec) {
    Rational X = abs(x);
    long start = tail_start_index(s);
    Rational tol = rat_pow2(-(long)prec - 4);

    Rational t(1); // c_n x^n, exact
    Rational S, W, tail;
    long n = 0;
    for (;; ++n) {
        S += t;
        if (n > 0) W += Rational(n) * t;
        if (n >= start) {
            Rational rho = ratio_bound(s, X, n);
            if (rho < 1) {
                Rational om = 1 - rho;
                Rational tail_s = abs(t) * rho / om;
                Rational tail_w =
                    abs(t) * (Rational(n) * rho / om + rho / (om * om));
                Rational bound = abs(a) * tail_s + abs(b) * tail_w;
                if (bound <= tol) {
                    tail = bound;
                    break;
                }
            }
        }
        t = coeff_step_term(s, n, t, x);
        if (t == 0) break; // terminating series: tail is exactly zero
        if (n >= kTermCap)
            throw NumericalError(
                "series evaluation passed " + std::to_string(kTermCap) +
                " terms without certifying a tail; |x| is too close to 1");
    }

    EvalReport out;
    out.value = BigReal(a * S + b * W, prec + 32).inflated(tail);
    out.terms = n + 1;
    return out;
}

} // namespace

std::vector<Rational> hyper_coeffs(const HypergeometricSpec& s, long count) {
    hyper_validate(s);
    std::vector<Rational> c;
    if (count <= 0) return c;
    c.reserve(count);
    c.push_back(Rational(1));
    for (long n = 0; n + 1 < count; ++n) c.push_back(coeff_step(s, n, c[n]));
    return c;
}

Rational hyper_coeff(const HypergeometricSpec& s, long n) {
    hyper_validate(s);
    Rational c(1);
    for (long k = 0; k < n; ++k) c = coeff_step(s, k, c);
    return c;
}

TruncatedSeries hyper_series(const HypergeometricSpec& s, int order) {
    return TruncatedSeries(hyper_coeffs(s, (long)order + 1), order);
}

BigReal hyper_evaluate(const HypergeometricSpec& s, const Rational& x,
                       mpfr_prec_t prec) {
    hyper_validate(s);
    if (abs(x) >= 1)
        throw NumericalError(
            "series evaluation needs |x| < 1; the weighted evaluator "
            "handles x = -1 by acceleration");
    return weighted_geometric(s, Rational(1), Rational(0), x, prec).value;
}

EvalReport hyper_evaluate_weighted(const HypergeometricSpec& s,
                                   const Rational& a, const Rational& b,
                                   const Rational& x, mpfr_prec_t prec) {
    hyper_validate(s);
    Rational X = abs(x);
    if (x == 1)
        throw NumericalError("x = 1 is refused: neither the geometric tail "
                             "nor alternating acceleration applies there");
    if (X > 1)
        throw NumericalError("series diverges for |x| > 1");
    if (X < 1) return weighted_geometric(s, a, b, x, prec);

    // x = -1: strictly alternating terms (a + b n) c_n (-1)^n summed by
    // acceleration. The tail certificate is heuristic; see numerics.hpp.
    auto cache = std::make_shared<std::vector<Rational>>(1, Rational(1));
    auto spec = std::make_shared<HypergeometricSpec>(s);
    auto term = [cache, spec, a, b](long k) {
        while ((long)cache->size() <= k) {
            long n = (long)cache->size() - 1;
            cache->push_back(coeff_step(*spec, n, cache->back()));
        }
        Rational t = (a + b * Rational(k)) * (*cache)[k];
        return (k % 2 == 0) ? t : Rational(-t);
    };
    AccelResult ar = alt_accel_sum(term, prec);
    EvalReport out;
    out.value = ar.value;
    out.terms = ar.terms;
    out.accelerated = true;
    return out;
}

BigReal hyper_evaluate(const HypergeometricSpec& s, const BigReal& x,
                       mpfr_prec_t prec) {
    hyper_validate(s);
    if (x.is_exact()) return hyper_evaluate(s, x.mid_rational(), prec);
    EvalReport r =
        hyper_evaluate_weighted(s, Rational(1), Rational(0), x, prec);
    return r.value;
}

EvalReport hyper_evaluate_weighted(const HypergeometricSpec& s,
                                   const Rational& a, const Rational& b,
                                   const BigReal& x, mpfr_prec_t prec) {
    hyper_validate(s);
    if (x.is_exact())
        return hyper_evaluate_weighted(s, a, b, x.mid_rational(), prec);

    Rational X = x.abs_upper();
    if (X >= 1)
        throw NumericalError(
            "cannot certify |x| < 1 from the given enclosure");

    long start = tail_start_index(s);
    Rational tol = rat_pow2(-(long)prec - 4);
    mpfr_prec_t wprec = prec + 64;

    Rational c(1); // exact coefficient
    Rational T(1); // exact bound on |c_n| X^n
    BigReal xpow(Rational(1), wprec);
    BigReal S(wprec), W(wprec);
    Rational tail;
    long n = 0;
    for (;; ++n) {
        BigReal t = scale_rational(xpow, c);
        S = S + t;
        if (n > 0) W = W + scale_rational(t, Rational(n));
        if (n >= start) {
            Rational rho = ratio_bound(s, X, n);
            if (rho < 1) {
                Rational om = 1 - rho;
                Rational bound = abs(a) * (T * rho / om) +
                                 abs(b) * T *
                                     (Rational(n) * rho / om + rho / (om * om));
                if (bound <= tol) {
                    tail = bound;
                    break;
                }
            }
        }
        // advance: T picks up |factors|, c the signed ones
        {
            Rational num(1), den(1), anum(1);
            for (const auto& u : s.upper) {
                num *= u + n;
                anum *= abs(u + n);
            }
            for (const auto& l : s.lower) den *= l + n;
            den *= n + 1;
            c = c * num / den;
            T = T * X * anum / abs(den);
        }
        if (c == 0) break;
        xpow = xpow * x;
        if (n >= kTermCap)
            throw NumericalError(
                "series evaluation passed " + std::to_string(kTermCap) +
                " terms without certifying a tail; |x| is too close to 1");
    }

    EvalReport out;
    out.value = (scale_rational(S, a) + scale_rational(W, b)).inflated(tail);
    out.terms = n + 1;
    return out;
}

TruncatedSeries hyper_ode_apply(const HypergeometricSpec& s,
                                const TruncatedSeries& f) {
    hyper_validate(s);
    TruncatedSeries g = f;
    for (const auto& bj : s.lower)
        g = series_add(series_theta(g), series_scale(bj - 1, g));
    g = series_theta(g);

    TruncatedSeries h = f;
    for (const auto& aj : s.upper)
        h = series_add(series_theta(h), series_scale(aj, h));
    h = series_shift_up(h, 1).truncated(f.order);

    return series_sub(g, h);
}

bool hyper_check_ode(const HypergeometricSpec& s, int order) {
    return hyper_ode_apply(s, hyper_series(s, order)).is_zero();
}

} // namespace hyperpi
