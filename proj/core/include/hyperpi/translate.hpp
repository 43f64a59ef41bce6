#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/hyper.hpp"
#include "hyperpi/radical.hpp"
#include "hyperpi/rational.hpp"
#include "hyperpi/transform.hpp"

namespace hyperpi {

// mu = q * sqrt(d) with d a positive squarefree integer.
struct MuConstant {
    Rational q;
    Integer d = 1;
};

/*
 * A weighted hypergeometric sum with a closed-form value:
 *
 *   sum_{n>=0} (a + b n) c_n x0^n = mu / pi
 *
 * where c_n are the series coefficients of `spec`. field_disc tags the
 * singular-value theory the identity comes from; it travels unchanged
 * through translations and gates which transformations apply.
 */
struct RamanujanIdentity {
    std::string name;
    HypergeometricSpec spec;
    Rational a, b;
    std::variant<Rational, RadicalExpr> x0;
    MuConstant mu;
    Integer field_disc = 0;
};

// Certified enclosure of q * sqrt(d).
BigReal mu_to_real(const MuConstant& mu, mpfr_prec_t prec);

// Enclosure of the identity's abscissa (exact for the rational case).
BigReal identity_x0(const RamanujanIdentity& id, mpfr_prec_t prec);

// Working precision that leaves a pinch over `digits` decimal digits after
// the guard digits the CLI prints on top.
mpfr_prec_t digits_to_prec(long digits);

struct VerifyReport {
    BigReal lhs, rhs;
    Rational residual_bound; // certified upper bound on |lhs - rhs|
    long verified_digits = 0;
    long terms = 0;
    bool accelerated = false;
    bool passed = false;
};

/*
 * Evaluate both sides of the identity and compare. Passing means the
 * residual enclosure straddles zero and its certified bound is at most
 * 10^-digits. A residual bounded away from zero is a disproof, never a
 * precision problem, and fails regardless of size.
 */
VerifyReport verify_identity(const RamanujanIdentity& id, long digits);

/*
 * Chain-rule image of a known identity through F(x) = r(x) G(y(x)).
 *
 * With the known identity on F at x0 and r0 = r(x0), y0 = y(x0):
 *
 *   a_hat = a + b x0 r'(x0)/r0,  b_hat = b (x0/y0) y'(x0),  mu_hat = mu/r0
 *
 * give  sum (a_hat + b_hat n) g_n y0^n = mu_hat / pi  on G's coefficients.
 * The enclosures below are certified; `identity` holds the rescaled exact
 * form after recognition, and is only returned once every recognized value
 * passed its exact confirmation and the whole identity re-verified
 * numerically.
 */
struct TranslationResult {
    RamanujanIdentity identity;
    BigReal a_hat, b_hat, y0, mu_hat; // raw chain-rule enclosures
    BigReal scale;                    // the m/a_hat factor that was applied
    VerifyReport reverify;
    std::vector<std::string> notes; // recognition trail, one line per step
};

// Throws VerificationError when the identity cannot ride the
// transformation: mismatched field tags, mismatched series parameters, or
// an abscissa that is not the transformation's base point.
void check_compatibility(const RamanujanIdentity& id,
                         const AlgebraicTransformation& t);

TranslationResult translate_identity(const RamanujanIdentity& id,
                                     const AlgebraicTransformation& t,
                                     long digits);

} // namespace hyperpi
