#include "hyperpi/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "hyperpi/error.hpp"

namespace hyperpi {

namespace {

Rational dyadic_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    if (!mpfr_number_p(x)) throw NumericalError("non-finite value in ball");
    Integer z;
    mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
    Rational q(z);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return q;
}

// Converts an exact nonnegative bound into the radius register, rounding up.
void rad_from_rational(mpfr_t rad, const Rational& b) {
    mpfr_set_q(rad, b.get_mpq_t(), MPFR_RNDU);
}

} // namespace

BigReal::BigReal(mpfr_prec_t prec) {
    mpfr_init2(mid_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

BigReal::BigReal(const Rational& q, mpfr_prec_t prec) : BigReal(prec) {
    int t = mpfr_set_q(mid_, q.get_mpq_t(), MPFR_RNDN);
    bump_ulp(t);
}

BigReal::BigReal(long v, mpfr_prec_t prec) : BigReal(prec) {
    int t = mpfr_set_si(mid_, v, MPFR_RNDN);
    bump_ulp(t);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    return *this;
}

BigReal::~BigReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void BigReal::bump_ulp(int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid_)) return;
    // One full ulp of the midpoint, twice the worst-case RNDN error.
    mpfr_t u;
    mpfr_init2(u, kRadiusPrec);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
    mpfr_add(rad_, rad_, u, MPFR_RNDU);
    mpfr_clear(u);
}

Rational BigReal::mid_rational() const { return dyadic_to_rational(mid_); }
Rational BigReal::rad_rational() const { return dyadic_to_rational(rad_); }

BigReal BigReal::rounded(mpfr_prec_t prec) const {
    BigReal r(prec);
    int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

BigReal BigReal::inflated(const Rational& b) const {
    if (b < 0) throw NumericalError("negative radius inflation");
    BigReal r = *this;
    mpfr_t e;
    mpfr_init2(e, kRadiusPrec);
    rad_from_rational(e, b);
    mpfr_add(r.rad_, r.rad_, e, MPFR_RNDU);
    mpfr_clear(e);
    return r;
}

bool BigReal::contains(const Rational& q) const {
    Rational d = mid_rational() - q;
    if (d < 0) d = -d;
    return d <= rad_rational();
}

bool BigReal::contains_zero() const { return contains(Rational(0)); }

bool BigReal::definitely_positive() const {
    return mid_rational() - rad_rational() > 0;
}

bool BigReal::definitely_negative() const {
    return mid_rational() + rad_rational() < 0;
}

int BigReal::sign() const {
    if (definitely_positive()) return 1;
    if (definitely_negative()) return -1;
    return 0;
}

Rational BigReal::abs_upper() const {
    Rational m = mid_rational();
    if (m < 0) m = -m;
    return m + rad_rational();
}

Rational BigReal::abs_lower() const {
    Rational m = mid_rational();
    if (m < 0) m = -m;
    Rational lo = m - rad_rational();
    return lo > 0 ? lo : Rational(0);
}

long BigReal::verified_decimals() const {
    constexpr long cap = 1000000;
    if (is_exact()) return cap;
    Rational two_r = 2 * rad_rational();
    if (two_r >= 1) return 0;
    // Largest n <= cap with two_r <= 10^-n. Seed the search from the binary
    // exponent, then settle it with exact comparisons.
    long e = static_cast<long>(mpfr_get_exp(rad_)); // rad < 2^e
    long n = std::min(cap, std::max(0L, static_cast<long>(-(e + 1) * 0.301) - 2));
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(n));
    Rational v = two_r * Rational(p10); // target invariant: v <= 1
    while (n > 0 && v > 1) {
        v /= 10;
        --n;
    }
    while (n < cap && v * 10 <= 1) {
        v *= 10;
        ++n;
    }
    return n;
}

std::string BigReal::to_string(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_zero_p(mid_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), mid_,
                           MPFR_RNDN);
    if (!s) throw NumericalError("mpfr_get_str failed");
    std::string digits_str(s);
    mpfr_free_str(s);

    bool neg = !digits_str.empty() && digits_str[0] == '-';
    std::string d = neg ? digits_str.substr(1) : digits_str;
    std::string out = neg ? "-" : "";
    // mpfr convention: value = 0.d1d2... * 10^e.
    if (e >= 1 && e <= digits + 6) {
        size_t k = static_cast<size_t>(e);
        if (k >= d.size()) {
            out += d + std::string(k - d.size(), '0');
        } else {
            out += d.substr(0, k) + "." + d.substr(k);
        }
    } else if (e <= 0 && e >= -4) {
        out += "0." + std::string(static_cast<size_t>(-e), '0') + d;
    } else {
        out += d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
    }
    return out;
}

std::string BigReal::radius_string() const {
    if (is_exact()) return "0";
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.2Re", rad_);
    return std::string(buf);
}

namespace {

mpfr_prec_t out_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

// rad += |x| * ry, rounding up throughout. The absolute value is taken
// before the product: rounding a signed product up would shrink its
// magnitude for negative x.
void rad_add_mul(mpfr_t rad, const mpfr_t x, const mpfr_t ry) {
    if (mpfr_zero_p(x) || mpfr_zero_p(ry)) return;
    mpfr_t t;
    mpfr_init2(t, BigReal::kRadiusPrec);
    mpfr_abs(t, x, MPFR_RNDU);
    mpfr_mul(t, t, ry, MPFR_RNDU);
    mpfr_add(rad, rad, t, MPFR_RNDU);
    mpfr_clear(t);
}

} // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(out_prec(a, b));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(out_prec(a, b));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

BigReal operator-(const BigReal& a) {
    BigReal r = a;
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN); // exact
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(out_prec(a, b));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a.mid|*b.rad + |b.mid|*a.rad + a.rad*b.rad
    rad_add_mul(r.rad_, a.mid_, b.rad_);
    rad_add_mul(r.rad_, b.mid_, a.rad_);
    rad_add_mul(r.rad_, a.rad_, b.rad_);
    r.bump_ulp(t);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    Rational lo_b = b.abs_lower();
    if (lo_b == 0)
        throw NumericalError("division by an enclosure containing zero");
    BigReal r(out_prec(a, b));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |x/y - mx/my| <= (rx + |mx/my| * ry) / |y| <= (rx + (|q|+) * ry) / lo_b
    Rational q_abs = dyadic_to_rational(r.mid_);
    if (q_abs < 0) q_abs = -q_abs;
    // The computed quotient differs from mx/my by at most one ulp; fold that
    // into the propagated part via a 2^(1-prec) relative enlargement.
    Rational ulp_rel = Rational(1);
    mpq_div_2exp(ulp_rel.get_mpq_t(), ulp_rel.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(r.precision() - 1));
    q_abs = q_abs * (1 + ulp_rel);
    Rational bound = (a.rad_rational() + q_abs * b.rad_rational()) / lo_b;
    mpfr_t e;
    mpfr_init2(e, BigReal::kRadiusPrec);
    rad_from_rational(e, bound);
    mpfr_add(r.rad_, r.rad_, e, MPFR_RNDU);
    mpfr_clear(e);
    r.bump_ulp(t);
    return r;
}

BigReal sqrt_ball(const BigReal& a) {
    if (mpfr_zero_p(a.mid()) && a.is_exact()) return BigReal(a.precision());
    Rational lo = a.mid_rational() - a.rad_rational();
    Rational hi = a.mid_rational() + a.rad_rational();
    if (lo < 0)
        throw NumericalError("sqrt of an enclosure containing negative numbers");
    BigReal r(a.precision());
    int t = mpfr_sqrt(r.mid_, a.mid(), MPFR_RNDN);
    // Enclose [sqrt(lo), sqrt(hi)] around the rounded midpoint. The interval
    // endpoints need full midpoint precision; only the distances to the
    // midpoint drop to radius precision, rounded outward.
    mpfr_t slo, shi, d1, d2;
    mpfr_init2(slo, a.precision() + 2);
    mpfr_init2(shi, a.precision() + 2);
    mpfr_init2(d1, BigReal::kRadiusPrec);
    mpfr_init2(d2, BigReal::kRadiusPrec);
    mpfr_set_q(slo, lo.get_mpq_t(), MPFR_RNDD);
    if (mpfr_sgn(slo) < 0) mpfr_set_zero(slo, 1);
    mpfr_sqrt(slo, slo, MPFR_RNDD);
    mpfr_set_q(shi, hi.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(shi, shi, MPFR_RNDU);
    mpfr_sub(d1, r.mid_, slo, MPFR_RNDU);
    mpfr_sub(d2, shi, r.mid_, MPFR_RNDU);
    if (mpfr_cmp(d1, d2) < 0) mpfr_swap(d1, d2);
    if (mpfr_sgn(d1) < 0) mpfr_set_zero(d1, 1);
    mpfr_add(r.rad_, r.rad_, d1, MPFR_RNDU);
    mpfr_clear(slo);
    mpfr_clear(shi);
    mpfr_clear(d2);
    mpfr_clear(d1);
    r.bump_ulp(t);
    return r;
}

BigReal scale_rational(const BigReal& a, const Rational& q) {
    BigReal r(a.precision());
    int t = mpfr_mul_q(r.mid_, a.mid(), q.get_mpq_t(), MPFR_RNDN);
    Rational qa = q < 0 ? Rational(-q) : q;
    Rational bound = qa * a.rad_rational();
    mpfr_t e;
    mpfr_init2(e, BigReal::kRadiusPrec);
    rad_from_rational(e, bound);
    mpfr_set(r.rad_, e, MPFR_RNDU);
    mpfr_clear(e);
    r.bump_ulp(t);
    return r;
}

BigReal shift_rational(const BigReal& a, const Rational& q) {
    BigReal r(a.precision());
    int t = mpfr_add_q(r.mid_, a.mid(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_set(r.rad_, a.rad(), MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

bool overlap(const BigReal& a, const BigReal& b, const Rational& tol) {
    Rational d = a.mid_rational() - b.mid_rational();
    if (d < 0) d = -d;
    return d <= a.rad_rational() + b.rad_rational() + tol;
}

} // namespace hyperpi
