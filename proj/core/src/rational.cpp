#include "hyperpi/rational.hpp"

#include "hyperpi/error.hpp"

namespace hyperpi {

std::optional<Rational> rat_try_parse(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) return std::nullopt;
    std::string s(text.substr(b, e - b + 1));

    // mpq_set_str accepts some forms we do not want ("0x" prefixes, empty
    // numerator). Restrict to an explicit decimal grammar first.
    size_t slash = s.find('/');
    auto is_dec = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_dec(s)) return std::nullopt;
    } else {
        if (!is_dec(s.substr(0, slash)) || !is_dec(s.substr(slash + 1)))
            return std::nullopt;
    }

    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt; // n/0
    q.canonicalize();
    return q;
}

Rational rat_parse(std::string_view text) {
    auto q = rat_try_parse(text);
    if (!q)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    return *q;
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_nonpositive_integer(const Rational& q) {
    return q.get_den() == 1 && q.get_num() <= 0;
}

SquareSplit split_square_part(const Integer& n, unsigned long trial_bound) {
    if (n <= 0) throw NumericalError("split_square_part requires n > 0");
    Integer rest = n;
    Integer s = 1, f = 1;
    for (unsigned long p = 2; p <= trial_bound && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) f *= p;
    }
    if (rest > 1) {
        // No prime factor up to the bound divides rest. If rest is a perfect
        // square its root is coprime to everything found so far; otherwise
        // rest is either prime or a product of two large primes, and only in
        // the semiprime-square-free-failure case would the answer be wrong.
        // A perfect-square test plus a primality test covers every case that
        // can be decided cheaply.
        Integer root;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
            s *= root;
        } else if (mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) {
            f *= rest;
        } else {
            throw NumericalError(
                "cannot certify squarefree part of " + rest.get_str());
        }
    }
    return {s, f};
}

Rational pow10_inv(int digits) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return Rational(1) / Rational(d);
}

Rational rat_pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), (unsigned long)e);
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), (unsigned long)(-e));
    return r;
}

} // namespace hyperpi
