#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/error.hpp"
#include "hyperpi/numerics.hpp"
#include "oracles.hpp"

using namespace hyperpi;

TEST_CASE("pi enclosures agree with the published digits") {
    // 50 decimals of pi, truncated rather than rounded, so the true value
    // lies in [lo, lo + 10^-50].
    Rational lo =
        Rational("314159265358979323846264338327950288419716939937510") /
        Rational(std::string("1") + std::string(50, '0'));
    Rational hi = lo + pow10_inv(50);

    for (mpfr_prec_t prec : {64L, 192L, 512L}) {
        BigReal pi = pi_value(prec);
        BigReal pi2 = pi_value_stormer(prec);
        CHECK(overlap(pi, pi2));
        // The published window must intersect both enclosures.
        Rational mid = pi.mid_rational();
        CHECK(mid - pi.rad_rational() <= hi);
        CHECK(mid + pi.rad_rational() >= lo);
        if (prec >= 192) {
            // At 192 bits the enclosure is far tighter than the window, so
            // it must land inside it.
            CHECK(mid - pi.rad_rational() >= lo);
            CHECK(mid + pi.rad_rational() <= hi);
        }
    }
}

TEST_CASE("pi radius shrinks with precision") {
    CHECK(pi_value(256).rad_rational() < rat_pow2(-250));
    CHECK(pi_value(1024).rad_rational() < rat_pow2(-1018));
}

TEST_CASE("ball arithmetic encloses exact rational evaluation") {
    auto g = oracle::rng(21);
    for (int iter = 0; iter < 150; ++iter) {
        mpfr_prec_t prec = 24 + 8 * oracle::rand_long(g, 0, 12);
        Rational a = oracle::rand_rational(g, 50, 20);
        Rational b = oracle::rand_rational(g, 50, 20);
        Rational c = oracle::rand_nonzero_rational(g, 50, 20);
        BigReal A(a, prec), B(b, prec), C(c, prec);
        // (a + b) * c - a / c
        Rational exact = (a + b) * c - a / c;
        BigReal ball = (A + B) * C - A / C;
        CHECK(ball.contains(exact));
    }
}

TEST_CASE("sqrt_ball squares back over the radicand") {
    auto g = oracle::rng(22);
    for (int iter = 0; iter < 150; ++iter) {
        mpfr_prec_t prec = 32 + 16 * oracle::rand_long(g, 0, 10);
        Rational q = oracle::rand_nonzero_rational(g, 1000, 50);
        if (q < 0) q = -q;
        BigReal r = sqrt_ball(BigReal(q, prec));
        CHECK((r * r).contains(q));
        CHECK(!r.definitely_negative());
    }
    CHECK_THROWS_AS(sqrt_ball(BigReal(Rational(-2), 64)), NumericalError);
}

TEST_CASE("scale and shift keep exactness") {
    BigReal x(Rational(3, 4), 64);
    BigReal y = shift_rational(scale_rational(x, Rational(8)), Rational(-6));
    CHECK(y.contains(Rational(0)));
    CHECK(y.rad_rational() == 0); // dyadic ops on a dyadic value stay exact
}

TEST_CASE("to_string formats across magnitudes") {
    CHECK(BigReal(Rational(1, 8), 64).to_string(3) == "0.125");
    CHECK(BigReal(Rational(-1, 8), 64).to_string(3) == "-0.125");
    CHECK(BigReal(Rational(0), 64).to_string(5) == "0");
    CHECK(BigReal(Rational(1000), 64).to_string(4) == "1000");
    std::string tiny = BigReal(Rational(1, 1024), 64).to_string(4);
    CHECK(tiny.substr(0, 6) == "0.0009");
}

TEST_CASE("verified_decimals tracks the radius") {
    BigReal x(Rational(1, 3), 256);
    long d = x.verified_decimals();
    CHECK(d >= 70);
    CHECK(d <= 80);
    BigReal wide = x.inflated(Rational(1, 100));
    CHECK(wide.verified_decimals() <= 2);
}

TEST_CASE("alternating acceleration reproduces ln 2") {
    auto rep = alt_accel_sum(
        [](long k) {
            Rational t = Rational(k % 2 == 0 ? 1 : -1) / Rational(k + 1);
            return t;
        },
        128);
    auto [lo, hi] = oracle::ln2_enclosure(60);
    Rational mid = rep.value.mid_rational();
    Rational rad = rep.value.rad_rational();
    CHECK(mid - rad <= hi);
    CHECK(mid + rad >= lo);
    CHECK(rep.heuristic_tail); // the monotonicity screen is only low order
    CHECK(rep.terms < 200);    // raw series would need ~10^38 terms
    CHECK(rep.tail_bound < pow10_inv(38));

    // Ball-oracle variant on the same series.
    auto rep2 = alt_accel_sum_ball(
        [](long k, mpfr_prec_t wprec) {
            return BigReal(Rational(k % 2 == 0 ? 1 : -1) / Rational(k + 1),
                           wprec);
        },
        128);
    CHECK(overlap(rep.value, rep2.value));
}

TEST_CASE("acceleration rejects a non-alternating series") {
    CHECK_THROWS_AS(
        alt_accel_sum([](long k) { return Rational(1, k + 1); }, 64),
        NumericalError);
}

TEST_CASE("root refinement brackets sqrt 2") {
    Poly f({Rational(-2), Rational(0), Rational(1)}); // x^2 - 2
    BigReal r = refine_real_root(f, Rational(1), Rational(2), 128);
    CHECK((r * r).contains(Rational(2)));
    CHECK(r.rad_rational() <= rat_pow2(-128));

    // Sign-oracle variant on x^3 - 5.
    BigReal c = refine_real_root(
        [](const Rational& x) {
            Rational v = x * x * x - 5;
            return v > 0 ? 1 : v < 0 ? -1 : 0;
        },
        Rational(1), Rational(2), 96);
    CHECK((c * c * c).contains(Rational(5)));

    CHECK_THROWS_AS(refine_real_root(f, Rational(2), Rational(3), 64),
                    NumericalError); // no sign change
}
