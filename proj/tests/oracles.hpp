#pragma once

/*
 * Independent reference computations for the tests. Everything in here is
 * written straight from definitions (factorials, Pochhammer products, the
 * atanh series for ln 2) rather than through the library's recurrences, so
 * a library bug cannot vouch for itself.
 */

#include <random>
#include <utility>
#include <vector>

#include "hyperpi/hyper.hpp"
#include "hyperpi/rational.hpp"
#include "hyperpi/series.hpp"

namespace oracle {

using hyperpi::HypergeometricSpec;
using hyperpi::Integer;
using hyperpi::Rational;
using hyperpi::TruncatedSeries;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1).
inline Rational pochhammer(const Rational& a, long n) {
    Rational r(1);
    for (long k = 0; k < n; ++k) r *= a + k;
    return r;
}

// n-th series coefficient straight from the Pochhammer quotient.
inline Rational hyper_coeff_direct(const HypergeometricSpec& s, long n) {
    Rational r(1);
    for (const Rational& a : s.upper) r *= pochhammer(a, n);
    for (const Rational& b : s.lower) r /= pochhammer(b, n);
    return r / factorial(static_cast<unsigned long>(n));
}

/*
 * Enclosure of ln 2 from 2 atanh(1/3) = 2 sum_{k>=0} (1/3)^(2k+1) / (2k+1).
 * All terms are positive; the tail after K terms is bounded by the first
 * omitted term times the geometric factor 1 / (1 - 1/9).
 */
inline std::pair<Rational, Rational> ln2_enclosure(int terms) {
    Rational s(0), p(1, 3); // p = (1/3)^(2k+1)
    for (int k = 0; k < terms; ++k) {
        s += p / (2 * k + 1);
        p /= 9;
    }
    Rational lo = 2 * s;
    Rational tail = 2 * p / (2 * terms + 1) * Rational(9, 8);
    return {lo, lo + tail};
}

// Deterministic test RNG; the fixed default seed keeps failures replayable.
inline std::mt19937_64 rng(std::uint64_t seed = 0x68797065727069ULL) {
    return std::mt19937_64(seed);
}

inline long rand_long(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline Rational rand_rational(std::mt19937_64& g, long num_mag, long den_max) {
    long n = rand_long(g, -num_mag, num_mag);
    long d = rand_long(g, 1, den_max);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rand_nonzero_rational(std::mt19937_64& g, long num_mag,
                                      long den_max) {
    Rational r = rand_rational(g, num_mag, den_max);
    while (r == 0) r = rand_rational(g, num_mag, den_max);
    return r;
}

inline TruncatedSeries rand_series(std::mt19937_64& g, int order,
                                   long num_mag, long den_max) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i)
        c.push_back(rand_rational(g, num_mag, den_max));
    return TruncatedSeries(std::move(c), order);
}

// Convolution written as the plain double loop.
inline TruncatedSeries naive_mul(const TruncatedSeries& f,
                                 const TruncatedSeries& g) {
    int order = std::min(f.order, g.order);
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            if (i <= f.order && j <= g.order) c[i + j] += f[i] * g[j];
    return TruncatedSeries(std::move(c), order);
}

} // namespace oracle
