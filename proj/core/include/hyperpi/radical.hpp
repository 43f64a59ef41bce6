#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hyperpi/bigreal.hpp"
#include "hyperpi/rational.hpp"

namespace hyperpi {

/*
 * Expression tree over rational leaves with +, -, *, / and square roots.
 * Used for algebraic constants that have no rational form, like the
 * parameter value (1 - sqrt(45 - 18*sqrt(6)))/2.
 *
 * Text form is a small prefix grammar:
 *   expr := rational | sqrt(expr) | OP(expr, expr)   with OP one of + - * /
 * A leading '-' denotes subtraction exactly when followed by '('; otherwise
 * it is the sign of a rational literal.
 */
class RadicalExpr {
  public:
    static RadicalExpr rational(const Rational& q);
    static RadicalExpr sqrt(RadicalExpr e);
    static RadicalExpr add(RadicalExpr a, RadicalExpr b);
    static RadicalExpr sub(RadicalExpr a, RadicalExpr b);
    static RadicalExpr mul(RadicalExpr a, RadicalExpr b);
    static RadicalExpr div(RadicalExpr a, RadicalExpr b);

    // Exact value when the tree contains no square roots.
    bool is_rational() const;
    Rational as_rational() const;

    std::string to_string() const;

    friend BigReal radical_eval(const RadicalExpr& e, mpfr_prec_t prec);

  private:
    enum class Kind { Rat, Sqrt, Add, Sub, Mul, Div };
    RadicalExpr() = default;

    BigReal eval_impl(mpfr_prec_t wprec) const;

    Kind kind_ = Kind::Rat;
    Rational value_;
    std::shared_ptr<const RadicalExpr> lhs_, rhs_;
};

// Rigorous enclosure, evaluated with internal guard precision so the
// returned radius sits well below 2^-prec for trees of modest depth.
// Throws NumericalError when a sqrt argument's enclosure reaches below zero.
BigReal radical_eval(const RadicalExpr& e, mpfr_prec_t prec);

// Throws ParseError on malformed text.
RadicalExpr radical_parse(std::string_view text);

} // namespace hyperpi
