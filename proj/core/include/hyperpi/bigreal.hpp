#pragma once

#include <mpfr.h>

#include <string>

#include "hyperpi/rational.hpp"

namespace hyperpi {

/*
 * Arbitrary-precision real with ball semantics: the true value is certified
 * to lie in [mid - rad, mid + rad]. The midpoint carries the working
 * precision; the radius is kept at a small fixed precision and every radius
 * computation rounds up, so enclosures only ever widen. Each arithmetic
 * operation adds the propagated operand radii plus one ulp of the rounded
 * midpoint, making the soundness argument local to each primitive.
 *
 * Midpoints and radii are dyadic, so containment and ordering predicates
 * can be decided exactly through Rational; nothing in the certification
 * path depends on floating-point comparison folklore.
 */
class BigReal {
  public:
    static constexpr mpfr_prec_t kRadiusPrec = 32;

    explicit BigReal(mpfr_prec_t prec = 64);       // exact 0
    BigReal(const Rational& q, mpfr_prec_t prec);  // q rounded, ulp radius
    BigReal(long v, mpfr_prec_t prec);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
    bool is_exact() const { return mpfr_zero_p(rad_); }

    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }

    Rational mid_rational() const; // exact
    Rational rad_rational() const; // exact

    // Midpoint re-rounded to prec; the rounding error joins the radius.
    BigReal rounded(mpfr_prec_t prec) const;

    // Returns a copy whose radius is enlarged by the exact bound b >= 0.
    BigReal inflated(const Rational& b) const;

    bool contains(const Rational& q) const;  // decided exactly
    bool contains_zero() const;
    bool definitely_positive() const; // mid - rad > 0
    bool definitely_negative() const;
    int sign() const; // +1 / -1 when definite, 0 when the ball straddles 0

    Rational abs_upper() const; // sup |value| over the ball, exact
    Rational abs_lower() const; // inf |value| over the ball (0 if straddling)

    // Number of certified decimal places: the largest n >= 0 with
    // 2*rad <= 10^-n, capped at 10^6 for exact values.
    long verified_decimals() const;

    // Midpoint formatted to `digits` significant decimal digits, fixed
    // notation for moderate exponents, scientific otherwise.
    std::string to_string(int digits) const;
    std::string radius_string() const; // short upper bound like "3.1e-52"

  private:
    friend BigReal operator+(const BigReal&, const BigReal&);
    friend BigReal operator-(const BigReal&, const BigReal&);
    friend BigReal operator-(const BigReal&);
    friend BigReal operator*(const BigReal&, const BigReal&);
    friend BigReal operator/(const BigReal&, const BigReal&);
    friend BigReal sqrt_ball(const BigReal&);
    friend BigReal scale_rational(const BigReal&, const Rational&);
    friend BigReal shift_rational(const BigReal&, const Rational&);

    void bump_ulp(int ternary);

    mpfr_t mid_;
    mpfr_t rad_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);
BigReal operator*(const BigReal& a, const BigReal& b);
// Throws NumericalError when b's enclosure contains zero.
BigReal operator/(const BigReal& a, const BigReal& b);
// Throws NumericalError when the enclosure contains negative numbers
// (an exact zero input yields an exact zero).
BigReal sqrt_ball(const BigReal& a);

// a * q and a + q with q exact; single rounding on the midpoint.
BigReal scale_rational(const BigReal& a, const Rational& q);
BigReal shift_rational(const BigReal& a, const Rational& q);

// |a - b| <= a.rad + b.rad + tol, decided exactly. The consistency check
// used by cross-route comparisons ("agree within summed radii").
bool overlap(const BigReal& a, const BigReal& b, const Rational& tol = 0);

} // namespace hyperpi
