#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hyperpi {

// Exact rational number, always in lowest terms with positive denominator.
// mpq_class maintains both invariants through canonicalization; every helper
// below preserves them.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "n", "-n", "n/d". Throws ParseError on malformed input or zero
// denominator. Whitespace around the literal is accepted.
Rational rat_parse(std::string_view text);

// Non-throwing variant used by parsers that want positional error reports.
std::optional<Rational> rat_try_parse(std::string_view text);

// "n" when the denominator is 1, otherwise "n/d".
std::string rat_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// True when q is zero or a negative integer. Lower hypergeometric parameters
// must avoid these values or the term recurrence divides by zero.
bool is_nonpositive_integer(const Rational& q);

// Splits n > 0 as n = s^2 * f with f squarefree, by trial division. Intended
// for the small integers that appear in mu recognition (f serves as the
// radicand, s as the rational part). Throws NumericalError when a factor
// survives above the trial bound and squarefreeness cannot be decided.
struct SquareSplit {
    Integer square_root; // s
    Integer squarefree;  // f
};
SquareSplit split_square_part(const Integer& n, unsigned long trial_bound = 1000000);

// 10^-digits as an exact rational, the comparison tolerance used by
// verification reports.
Rational pow10_inv(int digits);

// 2^e as an exact rational, either sign of e.
Rational rat_pow2(long e);

} // namespace hyperpi
