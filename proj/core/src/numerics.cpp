#include "hyperpi/numerics.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hyperpi/error.hpp"

namespace hyperpi {

namespace {

// ceil(log2 |q|) without conversion to floating point; 0 for |q| <= 1.
long bits_above_one(const Rational& q) {
    if (q == 0) return 0;
    long num = (long)mpz_sizeinbase(mpq_numref(q.get_mpq_t()), 2);
    long den = (long)mpz_sizeinbase(mpq_denref(q.get_mpq_t()), 2);
    long b = num - den + 1;
    return b > 0 ? b : 0;
}

// ---- arctangent partial sums ------------------------------------------

// atan(1/k) = sum_j (-1)^j / ((2j+1) k^(2j+1)). Alternating with strictly
// decreasing terms, so the truncation error is below the first omitted term.
struct AtanEnclosure {
    Rational sum;   // exact partial sum
    Rational tail;  // first omitted term, bounds |atan(1/k) - sum|
};

AtanEnclosure atan_recip(long k, const Rational& tol) {
    AtanEnclosure out;
    Rational kk(k);
    Rational p = 1 / kk;            // 1 / k^(2j+1)
    Rational inv_k2 = 1 / (kk * kk);
    for (long j = 0;; ++j) {
        Rational t = p / Rational(2 * j + 1);
        if (t <= tol) {
            out.tail = t;
            return out;
        }
        if (j % 2 == 0)
            out.sum += t;
        else
            out.sum -= t;
        p *= inv_k2;
    }
}

BigReal atan_combination(const std::vector<std::pair<long, long>>& combo,
                         mpfr_prec_t prec) {
    // combo holds (weight, k) pairs meaning weight * atan(1/k). Everything
    // is combined in exact rationals and rounded once at the end, so the
    // only radius contributions are the per-series tails and one ulp.
    Rational mid, bound;
    for (const auto& [w, k] : combo) {
        Rational tol = rat_pow2(-(long)prec - 6) / Rational(std::labs(w));
        AtanEnclosure a = atan_recip(k, tol);
        mid += Rational(w) * a.sum;
        bound += Rational(std::labs(w)) * a.tail;
    }
    return BigReal(mid, prec + 32).inflated(bound);
}

} // namespace

BigReal pi_value(mpfr_prec_t prec) {
    return atan_combination({{16, 5}, {-4, 239}}, prec);
}

BigReal pi_value_stormer(mpfr_prec_t prec) {
    return atan_combination({{24, 8}, {8, 57}, {4, 239}}, prec);
}

// ---- alternating-series acceleration -----------------------------------

namespace {

// Chebyshev value T_n(3) by the three-term recurrence; exact integer.
Integer cheb_t3(long n) {
    Integer t0 = 1, t1 = 3;
    if (n == 0) return t0;
    for (long i = 1; i < n; ++i) {
        Integer t = 6 * t1 - t0;
        t0 = t1;
        t1 = t;
    }
    return t1;
}

// Smallest term count (plus margin) making a0 / T_n(3) <= 2^-(prec+2),
// verified exactly against the computed Chebyshev value.
long pick_terms(const Rational& a0, mpfr_prec_t prec, Integer& d_out) {
    // log2(3 + sqrt 8) = 2.5431...; use a slight underestimate so the
    // first guess errs on the large side, then confirm exactly.
    long need = (long)prec + 4 + bits_above_one(a0);
    long n = (long)std::ceil((double)need / 2.54) + 4;
    if (n < 6) n = 6;
    Rational tol = rat_pow2(-(long)prec - 2);
    for (;;) {
        d_out = cheb_t3(n);
        if (a0 <= Rational(d_out) * tol) return n;
        n += 8;
    }
}

void check_low_order_monotonicity(const std::vector<Rational>& a) {
    // The T_n(3) tail bound is proven for totally monotone moduli. Checking
    // every difference order of a finite prefix proves nothing global, and
    // sequences that genuinely fail at a deep order can still satisfy the
    // bound with large margin, so screen the first four orders and leave
    // the certificate marked heuristic.
    std::vector<Rational> d = a;
    for (int order = 1; order <= 4 && d.size() >= 2; ++order) {
        for (size_t i = 0; i + 1 < d.size(); ++i) d[i] -= d[i + 1];
        d.pop_back();
        for (size_t i = 0; i < d.size(); ++i)
            if (d[i] < 0)
                throw NumericalError(
                    "accelerated sum: term moduli fail monotonicity at "
                    "difference order " + std::to_string(order) +
                    ", index " + std::to_string(i));
    }
}

// Shared Chebyshev weight loop. The weight c_k carries the alternating sign,
// so the caller passes unsigned moduli and receives an estimate of
// sum (-1)^k a_k, exact except for whatever error the a_k themselves carry.
template <class Acc, class AddWeighted>
void cvz_loop(long n, Acc& s, const AddWeighted& add) {
    Rational b(-1), c;
    {
        Integer d = cheb_t3(n);
        c = -Rational(d);
    }
    for (long k = 0; k < n; ++k) {
        c = b - c;
        add(s, k, c);
        Rational num = Rational(2) * Rational(k + n) * Rational(k - n);
        Rational den = Rational(2 * k + 1) * Rational(k + 1);
        b *= num / den;
    }
}

} // namespace

AccelResult alt_accel_sum(const std::function<Rational(long)>& term,
                          mpfr_prec_t prec) {
    Rational t0 = term(0);
    if (t0 == 0)
        throw NumericalError("accelerated sum: leading term is zero");
    int sigma = sgn(t0);
    Rational a0 = abs(t0);

    Integer d;
    long n = pick_terms(a0, prec, d);

    std::vector<Rational> a(n);
    a[0] = a0;
    for (long k = 1; k < n; ++k) {
        Rational tk = term(k);
        int want = (k % 2 == 0) ? sigma : -sigma;
        if (sgn(tk) != want)
            throw NumericalError(
                "accelerated sum: nonalternating signs detected at term " +
                std::to_string(k));
        a[k] = abs(tk);
    }
    check_low_order_monotonicity(a);

    Rational s;
    cvz_loop(n, s, [&a](Rational& acc, long k, const Rational& c) {
        acc += c * a[k];
    });
    Rational est = s / Rational(d);
    if (sigma < 0) est = -est;

    AccelResult out;
    out.tail_bound = a0 / Rational(d);
    out.value = BigReal(est, prec + 32).inflated(out.tail_bound);
    out.terms = n;
    return out;
}

AccelResult alt_accel_sum_ball(
    const std::function<BigReal(long, mpfr_prec_t)>& term, mpfr_prec_t prec) {
    BigReal probe = term(0, prec + 64);
    if (probe.contains_zero())
        throw NumericalError(
            "accelerated sum: leading term enclosure contains zero");
    int sigma = probe.sign();
    Rational a0_hi = probe.abs_upper();

    Integer d;
    long n = pick_terms(a0_hi, prec, d);

    // Weights reach T_n(3) but are exact integers, so they cost no radius of
    // their own; the working precision only has to absorb the sum length and
    // the leading term's magnitude.
    mpfr_prec_t wprec = prec + 64 + 2 * bits_above_one(Rational(n) + 2) +
                        bits_above_one(a0_hi);

    std::vector<BigReal> a;
    a.reserve(n);
    for (long k = 0; k < n; ++k) {
        BigReal tk = term(k, wprec);
        int want = (k % 2 == 0) ? sigma : -sigma;
        bool ok = want > 0 ? tk.definitely_positive() : tk.definitely_negative();
        if (!ok)
            throw NumericalError(
                "accelerated sum: term " + std::to_string(k) +
                " has the wrong sign or an enclosure too wide to certify it");
        a.push_back(want > 0 ? tk : -tk);
    }

    // Monotonicity screen on balls: only flag a violation the enclosures can
    // actually prove, since widths blur small differences.
    {
        std::vector<BigReal> diff = a;
        for (int order = 1; order <= 4 && diff.size() >= 2; ++order) {
            std::vector<BigReal> next;
            next.reserve(diff.size() - 1);
            for (size_t i = 0; i + 1 < diff.size(); ++i)
                next.push_back(diff[i] - diff[i + 1]);
            for (size_t i = 0; i < next.size(); ++i)
                if (next[i].definitely_negative())
                    throw NumericalError(
                        "accelerated sum: term moduli fail monotonicity at "
                        "difference order " + std::to_string(order) +
                        ", index " + std::to_string(i));
            diff = std::move(next);
        }
    }

    BigReal s(wprec);
    cvz_loop(n, s, [&a](BigReal& acc, long k, const Rational& c) {
        acc = acc + scale_rational(a[k], c);
    });
    BigReal est = scale_rational(s, Rational(1) / Rational(d));
    if (sigma < 0) est = -est;

    AccelResult out;
    out.tail_bound = a0_hi / Rational(d);
    out.value = est.inflated(out.tail_bound);
    out.terms = n;
    return out;
}

// ---- root refinement ----------------------------------------------------

BigReal refine_real_root(const std::function<int(const Rational&)>& sign_at,
                         const Rational& lo_in, const Rational& hi_in,
                         mpfr_prec_t prec) {
    Rational lo = lo_in, hi = hi_in;
    if (lo > hi) std::swap(lo, hi);

    // Enough midpoint precision that the final rounding ulp stays below the
    // bisection radius even for roots of large magnitude.
    mpfr_prec_t mprec =
        prec + 48 + bits_above_one(abs(lo) > abs(hi) ? lo : hi);

    int slo = sign_at(lo);
    int shi = sign_at(hi);
    if (slo == 0) return BigReal(lo, mprec);
    if (shi == 0) return BigReal(hi, mprec);
    if (slo == shi)
        throw NumericalError("bisection bracket does not straddle a root");

    Rational width_target = rat_pow2(-(long)prec - 1);
    while (hi - lo > width_target) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_at(mid);
        if (sm == 0) return BigReal(mid, mprec);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return BigReal((lo + hi) / 2, mprec).inflated((hi - lo) / 2);
}

BigReal refine_real_root(const Poly& p, const Rational& lo, const Rational& hi,
                         mpfr_prec_t prec) {
    return refine_real_root(
        [&p](const Rational& x) { return sgn(p(x)); }, lo, hi, prec);
}

} // namespace hyperpi
