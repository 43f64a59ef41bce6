#include "hyperpi/poly.hpp"

#include <algorithm>

#include "hyperpi/error.hpp"

namespace hyperpi {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Poly::Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(c); }

Poly Poly::constant(const Rational& a) {
    Poly f;
    if (a != 0) f.c.push_back(a);
    return f;
}

Poly Poly::monomial(const Rational& a, int k) {
    Poly f;
    if (a != 0) {
        f.c.assign(k + 1, Rational(0));
        f.c[k] = a;
    }
    return f;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[k];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rational> r(std::max(f.c.size(), g.c.size()), Rational(0));
    for (size_t i = 0; i < f.c.size(); ++i) r[i] += f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r[i] += g.c[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator-(const Poly& f) {
    Poly r = f;
    for (auto& a : r.c) a = -a;
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rational> r(f.c.size() + g.c.size() - 1, Rational(0));
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) r[i + j] += f.c[i] * g.c[j];
    return Poly(std::move(r));
}

Poly operator*(const Rational& a, const Poly& f) {
    if (a == 0) return Poly();
    Poly r = f;
    for (auto& x : r.c) x *= a;
    return r;
}

bool operator==(const Poly& f, const Poly& g) { return f.c == g.c; }

Poly poly_pow(const Poly& f, int e) {
    Poly r = Poly::constant(1);
    Poly base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly poly_derivative(const Poly& f) {
    if (f.c.size() <= 1) return Poly();
    std::vector<Rational> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r[i - 1] = Rational(i) * f.c[i];
    return Poly(std::move(r));
}

PolyDivMod poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw NumericalError("polynomial division by zero");
    Poly r = f;
    std::vector<Rational> q;
    int dg = g.degree();
    if (r.degree() >= dg) q.assign(r.degree() - dg + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dg) {
        Rational k = r.leading() / g.leading();
        int shift = r.degree() - dg;
        q[shift] = k;
        r = r - (k * Poly::monomial(1, shift) * g);
    }
    return {Poly(std::move(q)), r};
}

Poly poly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = poly_divmod(f, g).rem;
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero()) f = (Rational(1) / f.leading()) * f; // monic
    return f;
}

namespace {

// Scales to integer coefficients with content 1 and positive leading
// coefficient.
Poly make_primitive(const Poly& f, bool force_positive_leading) {
    if (f.is_zero()) return f;
    Integer l(1);
    for (const auto& a : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
    Integer g(0);
    for (const auto& a : f.c) {
        Integer n = a.get_num() * (l / a.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = Rational(l) / Rational(g);
    if (force_positive_leading && f.leading() < 0) scale = -scale;
    return scale * f;
}

} // namespace

Poly poly_squarefree_part(const Poly& f) {
    if (f.is_zero()) return f;
    Poly g = poly_gcd(f, poly_derivative(f));
    Poly q = poly_divmod(f, g).quot;
    return make_primitive(q, true);
}

RationalFunction::RationalFunction(Poly n, Poly d) {
    if (d.is_zero()) throw NumericalError("rational function with zero denominator");
    if (n.is_zero()) {
        num = Poly();
        den = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = poly_divmod(n, g).quot;
        d = poly_divmod(d, g).quot;
    }
    // Canonical scaling: integer primitive parts, positive leading den.
    // num and den must be scaled by the same factor, so normalize den first
    // and apply the inverse ratio to num.
    Poly dn = make_primitive(d, true);
    Rational k = dn.leading() / d.leading();
    num = k * n;
    den = std::move(dn);
}

RationalFunction RationalFunction::raw(Poly n, Poly d) {
    if (d.is_zero()) throw NumericalError("rational function with zero denominator");
    RationalFunction r;
    r.num = std::move(n);
    r.den = std::move(d);
    return r;
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational d = den(x);
    if (d == 0) throw NumericalError("rational function pole");
    return num(x) / d;
}

RationalFunction rf_derivative(const RationalFunction& R) {
    Poly n = poly_derivative(R.num) * R.den - R.num * poly_derivative(R.den);
    return RationalFunction(std::move(n), R.den * R.den);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    // Normalized representation makes structural equality meaningful for
    // reduced values; raw values compare by cross multiplication.
    return a.num * b.den == b.num * a.den;
}

int BiPoly::deg_x() const {
    int d = 0;
    for (const auto& [k, v] : t) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_w() const {
    int d = 0;
    for (const auto& [k, v] : t) d = std::max(d, k.second);
    return d;
}

void BiPoly::add_term(int i, int j, const Rational& coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(i, j);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) t.erase(it);
    }
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = t.find({i, j});
    return it == t.end() ? Rational(0) : it->second;
}

Rational BiPoly::operator()(const Rational& x, const Rational& w) const {
    return bipoly_at_x(*this, x)(w);
}

BiPoly operator+(const BiPoly& P, const BiPoly& Q) {
    BiPoly r = P;
    for (const auto& [k, v] : Q.t) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly operator*(const Rational& a, const BiPoly& P) {
    BiPoly r;
    if (a == 0) return r;
    for (const auto& [k, v] : P.t) r.t.emplace(k, a * v);
    return r;
}

bool operator==(const BiPoly& P, const BiPoly& Q) { return P.t == Q.t; }

BiPoly bipoly_dx(const BiPoly& P) {
    BiPoly r;
    for (const auto& [k, v] : P.t)
        if (k.first > 0) r.add_term(k.first - 1, k.second, Rational(k.first) * v);
    return r;
}

BiPoly bipoly_dw(const BiPoly& P) {
    BiPoly r;
    for (const auto& [k, v] : P.t)
        if (k.second > 0) r.add_term(k.first, k.second - 1, Rational(k.second) * v);
    return r;
}

Poly bipoly_at_x(const BiPoly& P, const Rational& x0) {
    std::vector<Rational> c(P.deg_w() + 1, Rational(0));
    // Group by w-degree, Horner in x within each group.
    for (int j = 0; j <= P.deg_w(); ++j) {
        Rational acc(0);
        for (int i = P.deg_x(); i >= 0; --i) acc = acc * x0 + P.coeff(i, j);
        c[j] = acc;
    }
    return Poly(std::move(c));
}

RationalFunction bipoly_substitute(const BiPoly& P, const RationalFunction& X,
                                   const RationalFunction& W) {
    int dx = P.deg_x(), dw = P.deg_w();
    std::vector<Poly> ax(dx + 1), bx(dx + 1), aw(dw + 1), bw(dw + 1);
    ax[0] = bx[0] = aw[0] = bw[0] = Poly::constant(1);
    for (int i = 1; i <= dx; ++i) {
        ax[i] = ax[i - 1] * X.num;
        bx[i] = bx[i - 1] * X.den;
    }
    for (int j = 1; j <= dw; ++j) {
        aw[j] = aw[j - 1] * W.num;
        bw[j] = bw[j - 1] * W.den;
    }
    Poly n;
    for (const auto& [k, v] : P.t) {
        auto [i, j] = k;
        n = n + v * (ax[i] * bx[dx - i] * aw[j] * bw[dw - j]);
    }
    return RationalFunction::raw(std::move(n), bx[dx] * bw[dw]);
}

long sturm_count(const Poly& f, const Rational& a, const Rational& b) {
    if (!(a < b)) throw NumericalError("sturm_count needs a < b");
    if (f.degree() < 0) throw NumericalError("sturm_count of zero polynomial");
    if (f(a) == 0 || f(b) == 0)
        throw NumericalError("sturm_count endpoint is a root");

    // Canonical chain f, f', then negated remainders until constant. The
    // multiple-root case is handled by the classical theorem: the count is
    // of distinct roots.
    std::vector<Poly> chain{f, poly_derivative(f)};
    while (chain.back().degree() > 0) {
        Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).rem;
        if (r.degree() < 0) break; // gcd reached (multiple roots)
        chain.push_back(-r);
    }

    auto variations = [&chain](const Rational& x) {
        long v = 0;
        int prev = 0;
        for (const auto& g : chain) {
            int s = sgn(g(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(a) - variations(b);
}

} // namespace hyperpi
