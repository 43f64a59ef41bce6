#include "hyperpi/translate.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "hyperpi/error.hpp"
#include "hyperpi/numerics.hpp"

namespace hyperpi {

mpfr_prec_t digits_to_prec(long digits) {
    if (digits < 1) digits = 1;
    double bits = (double)(digits + 16) * 3.3219280948873623;
    return (mpfr_prec_t)std::ceil(bits) + 32;
}

BigReal mu_to_real(const MuConstant& mu, mpfr_prec_t prec) {
    if (mu.d <= 0)
        throw NumericalError("mu constant needs a positive discriminant part");
    if (mu.d == 1) return BigReal(mu.q, prec);
    BigReal root = sqrt_ball(BigReal(Rational(mu.d), prec + 16));
    return scale_rational(root, mu.q).rounded(prec);
}

BigReal identity_x0(const RamanujanIdentity& id, mpfr_prec_t prec) {
    if (const Rational* r = std::get_if<Rational>(&id.x0))
        return BigReal(*r, prec);
    return radical_eval(std::get<RadicalExpr>(id.x0), prec);
}

VerifyReport verify_identity(const RamanujanIdentity& id, long digits) {
    mpfr_prec_t prec = digits_to_prec(digits);
    VerifyReport rep;

    EvalReport ev;
    if (const Rational* xr = std::get_if<Rational>(&id.x0))
        ev = hyper_evaluate_weighted(id.spec, id.a, id.b, *xr, prec);
    else
        ev = hyper_evaluate_weighted(id.spec, id.a, id.b,
                                     identity_x0(id, prec), prec);
    rep.lhs = ev.value;
    rep.terms = ev.terms;
    rep.accelerated = ev.accelerated;

    rep.rhs = mu_to_real(id.mu, prec) / pi_value(prec);

    BigReal residual = rep.lhs - rep.rhs;
    rep.residual_bound = residual.abs_upper();
    rep.verified_digits =
        std::min(rep.lhs.verified_decimals(), rep.rhs.verified_decimals());
    // A residual bounded away from zero disproves the identity outright, no
    // matter how small the bound is.
    rep.passed = residual.contains_zero() &&
                 rep.residual_bound <= pow10_inv(digits);
    return rep;
}

namespace {

Integer rat_floor(const Rational& x) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

/*
 * Propose an exact rational near the ball's midpoint by continued fractions,
 * accepting the first convergent within tol and under the denominator cap.
 * Containment in the ball is required, so a wrong proposal cannot silently
 * pass; but containment is not equality, which is why every recognized
 * value is confirmed downstream (exact curve membership, numeric
 * re-verification of the full identity).
 */
std::optional<Rational> recognize_rational(const BigReal& v,
                                           const Integer& den_cap,
                                           const Rational& tol) {
    Rational x = v.mid_rational();
    Integer h0(1), k0(0); // convergent two steps back
    Integer h1, k1;       // previous convergent
    bool have_prev = false;
    Rational rem = x;
    for (int i = 0; i < 128; ++i) {
        Integer a = rat_floor(rem);
        Integer h = have_prev ? Integer(a * h1 + h0) : a;
        Integer k = have_prev ? Integer(a * k1 + k0) : Integer(1);
        if (k > den_cap) return std::nullopt;
        Rational cand(h, k);
        cand.canonicalize();
        if (abs(x - cand) <= tol) {
            if (v.contains(cand)) return cand;
            return std::nullopt;
        }
        Rational frac = rem - Rational(a);
        if (frac == 0) return std::nullopt; // exhausted x itself
        rem = 1 / frac;
        if (have_prev) {
            h0 = h1; k0 = k1;
        }
        h1 = h; k1 = k;
        have_prev = true;
    }
    return std::nullopt;
}

std::string ball_note(const std::string& label, const BigReal& v) {
    return label + " = " + v.to_string(25) + " (radius " + v.radius_string() +
           ")";
}

} // namespace

void check_compatibility(const RamanujanIdentity& id,
                         const AlgebraicTransformation& t) {
    if (id.field_disc != t.field_disc) {
        std::ostringstream os;
        os << "incompatible singular-value tags: identity '" << id.name
           << "' carries field discriminant " << id.field_disc
           << ", transformation '" << t.name << "' is anchored at "
           << t.field_disc;
        throw VerificationError(os.str());
    }
    if (!(id.spec == t.target))
        throw VerificationError(
            "identity '" + id.name +
            "' is not on the transformation's target series");
    if (!t.param || !t.p0)
        throw VerificationError("transformation '" + t.name +
                                "' carries no parametrization to evaluate at "
                                "its base point");
    BigReal xv = rf_eval_ball(t.param->x, radical_eval(*t.p0, 96));
    if (const Rational* xr = std::get_if<Rational>(&id.x0)) {
        if (!xv.contains(*xr))
            throw VerificationError(
                "identity '" + id.name +
                "' is anchored at a different abscissa than the "
                "transformation's base point");
    } else {
        BigReal x0v = radical_eval(std::get<RadicalExpr>(id.x0), 96);
        if (!overlap(xv, x0v))
            throw VerificationError(
                "identity '" + id.name +
                "' is anchored at a different abscissa than the "
                "transformation's base point");
    }
}

TranslationResult translate_identity(const RamanujanIdentity& id,
                                     const AlgebraicTransformation& t,
                                     long digits) {
    check_compatibility(id, t);

    const Rational* x0p = std::get_if<Rational>(&id.x0);
    if (!x0p)
        throw NumericalError(
            "translation from a radical abscissa is not supported");
    const Rational& x0 = *x0p;

    mpfr_prec_t prec = std::max<mpfr_prec_t>(digits_to_prec(digits), 192);
    Rational tol = rat_pow2(-(long)(prec / 2));

    TransformPointData pd =
        transform_eval_at(t, x0, prec, EvalRoute::Parametric);

    TranslationResult out;
    out.y0 = pd.y.value;
    out.a_hat = shift_rational(scale_rational(pd.r.slope / pd.r.value,
                                              id.b * x0),
                               id.a);
    out.b_hat = scale_rational(pd.y.slope / pd.y.value, id.b * x0);
    out.mu_hat = mu_to_real(id.mu, prec) / pd.r.value;
    out.notes.push_back(ball_note("a_hat", out.a_hat));
    out.notes.push_back(ball_note("b_hat", out.b_hat));
    out.notes.push_back(ball_note("y0", out.y0));
    out.notes.push_back(ball_note("mu_hat", out.mu_hat));

    // Rescaling by s = m/a_hat makes the leading weight the integer m; the
    // right m is the smallest one that pulls the other weight to an integer
    // as well, falling back to a small denominator.
    std::optional<Rational> ratio =
        recognize_rational(out.b_hat / out.a_hat, Integer(100000000), tol);
    if (!ratio)
        throw NumericalError(
            "translated weight ratio was not recognized as rational");

    long m_pick = 0;
    Rational b_exact;
    for (long m = 1; m <= 64 && m_pick == 0; ++m) {
        Rational cand = *ratio * m;
        if (cand.get_den() == 1) {
            m_pick = m;
            b_exact = cand;
        }
    }
    for (long m = 1; m <= 64 && m_pick == 0; ++m) {
        Rational cand = *ratio * m;
        if (cand.get_den() <= 10000) {
            m_pick = m;
            b_exact = cand;
        }
    }
    if (m_pick == 0)
        throw NumericalError("no small rescaling normalizes the translated "
                             "weights");
    Rational a_exact(m_pick);
    out.scale = BigReal(a_exact, prec) / out.a_hat;
    if (!(out.scale * out.a_hat).contains(a_exact) ||
        !(out.scale * out.b_hat).contains(b_exact))
        throw NumericalError("rescaled weights drifted out of their certified "
                             "enclosures");
    {
        std::ostringstream os;
        os << "weights rescaled by " << m_pick
           << "/a_hat: b_hat/a_hat recognized as " << rat_str(*ratio);
        out.notes.push_back(os.str());
    }

    // mu_hat picks up the same factor; its square is rational in the
    // quadratic field, so recognize z^2 = u/v and split off the square
    // parts.
    BigReal z = out.scale * out.mu_hat;
    int zsign = z.sign();
    if (zsign == 0)
        throw NumericalError("rescaled constant straddles zero");
    std::optional<Rational> z2 =
        recognize_rational(z * z, Integer(100000000), tol);
    if (!z2 || *z2 <= 0)
        throw NumericalError(
            "square of the translated constant was not recognized as a "
            "positive rational");
    SquareSplit un = split_square_part(Integer(z2->get_num()));
    SquareSplit de = split_square_part(Integer(z2->get_den()));
    MuConstant mu_new;
    mu_new.d = un.squarefree * de.squarefree;
    mu_new.q = Rational(un.square_root, de.square_root * de.squarefree);
    mu_new.q.canonicalize();
    if (zsign < 0) mu_new.q = -mu_new.q;
    if (mu_new.d > 1000000)
        throw NumericalError("translated constant lives in an implausibly "
                             "large quadratic field");
    {
        std::ostringstream os;
        os << "constant^2 recognized as " << rat_str(*z2) << ", split as ("
           << rat_str(mu_new.q) << ")^2 * " << mu_new.d;
        out.notes.push_back(os.str());
    }

    // The new abscissa must be an exact point of the argument curve, not
    // just a nearby rational.
    std::optional<Rational> y0r =
        recognize_rational(out.y0, Integer(1000000000), tol);
    if (!y0r)
        throw NumericalError(
            "translated abscissa was not recognized as rational");
    if (t.curve_y(x0, *y0r) != 0)
        throw NumericalError("recognized abscissa is not a point of the "
                             "argument curve");
    out.notes.push_back("y0 recognized as " + rat_str(*y0r) +
                        "; exact curve membership confirmed");

    out.identity.name = id.name + ".via." + t.name;
    out.identity.spec = t.source;
    out.identity.a = a_exact;
    out.identity.b = b_exact;
    out.identity.x0 = *y0r;
    out.identity.mu = mu_new;
    out.identity.field_disc = id.field_disc;

    out.reverify = verify_identity(out.identity, digits);
    if (!out.reverify.passed)
        throw VerificationError(
            "translated identity failed its numeric re-verification");
    return out;
}

} // namespace hyperpi
