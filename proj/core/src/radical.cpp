#include "hyperpi/radical.hpp"

#include "hyperpi/error.hpp"

namespace hyperpi {

RadicalExpr RadicalExpr::rational(const Rational& q) {
    RadicalExpr e;
    e.kind_ = Kind::Rat;
    e.value_ = q;
    return e;
}

RadicalExpr RadicalExpr::sqrt(RadicalExpr x) {
    RadicalExpr e;
    e.kind_ = Kind::Sqrt;
    e.lhs_ = std::make_shared<RadicalExpr>(std::move(x));
    return e;
}

RadicalExpr RadicalExpr::add(RadicalExpr a, RadicalExpr b) {
    RadicalExpr e;
    e.kind_ = Kind::Add;
    e.lhs_ = std::make_shared<RadicalExpr>(std::move(a));
    e.rhs_ = std::make_shared<RadicalExpr>(std::move(b));
    return e;
}

RadicalExpr RadicalExpr::sub(RadicalExpr a, RadicalExpr b) {
    RadicalExpr e = add(std::move(a), std::move(b));
    e.kind_ = Kind::Sub;
    return e;
}

RadicalExpr RadicalExpr::mul(RadicalExpr a, RadicalExpr b) {
    RadicalExpr e = add(std::move(a), std::move(b));
    e.kind_ = Kind::Mul;
    return e;
}

RadicalExpr RadicalExpr::div(RadicalExpr a, RadicalExpr b) {
    RadicalExpr e = add(std::move(a), std::move(b));
    e.kind_ = Kind::Div;
    return e;
}

bool RadicalExpr::is_rational() const {
    switch (kind_) {
        case Kind::Rat: return true;
        case Kind::Sqrt: return false;
        default: return lhs_->is_rational() && rhs_->is_rational();
    }
}

Rational RadicalExpr::as_rational() const {
    switch (kind_) {
        case Kind::Rat: return value_;
        case Kind::Sqrt:
            throw NumericalError("radical expression is not rational");
        case Kind::Add: return lhs_->as_rational() + rhs_->as_rational();
        case Kind::Sub: return lhs_->as_rational() - rhs_->as_rational();
        case Kind::Mul: return lhs_->as_rational() * rhs_->as_rational();
        case Kind::Div: {
            Rational d = rhs_->as_rational();
            if (d == 0)
                throw NumericalError("division by zero in radical expression");
            return lhs_->as_rational() / d;
        }
    }
    throw NumericalError("corrupt radical expression");
}

std::string RadicalExpr::to_string() const {
    switch (kind_) {
        case Kind::Rat: return rat_str(value_);
        case Kind::Sqrt: return "sqrt(" + lhs_->to_string() + ")";
        case Kind::Add:
            return "+(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
        case Kind::Sub:
            return "-(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
        case Kind::Mul:
            return "*(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
        case Kind::Div:
            return "/(" + lhs_->to_string() + "," + rhs_->to_string() + ")";
    }
    throw NumericalError("corrupt radical expression");
}

BigReal RadicalExpr::eval_impl(mpfr_prec_t wprec) const {
    switch (kind_) {
        case Kind::Rat: return BigReal(value_, wprec);
        case Kind::Sqrt: return sqrt_ball(lhs_->eval_impl(wprec));
        case Kind::Add: return lhs_->eval_impl(wprec) + rhs_->eval_impl(wprec);
        case Kind::Sub: return lhs_->eval_impl(wprec) - rhs_->eval_impl(wprec);
        case Kind::Mul: return lhs_->eval_impl(wprec) * rhs_->eval_impl(wprec);
        case Kind::Div: return lhs_->eval_impl(wprec) / rhs_->eval_impl(wprec);
    }
    throw NumericalError("corrupt radical expression");
}

BigReal radical_eval(const RadicalExpr& e, mpfr_prec_t prec) {
    // Guard bits cover the accumulated ulps across the tree; trees here are
    // shallow, so a flat 48-bit guard leaves the final radius far below
    // 2^-prec for every catalog constant.
    return e.eval_impl(prec + 48).rounded(prec);
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char peek2() {
        skip_ws();
        return i + 1 < s.size() ? s[i + 1] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(std::string("expected '") + c + "' in radical expression");
        ++i;
    }
};

RadicalExpr parse_expr(Cursor& cur) {
    cur.skip_ws();
    if (cur.eof()) throw ParseError("empty radical expression");
    char c = cur.peek();

    if (cur.s.compare(cur.i, 5, "sqrt(") == 0) {
        cur.i += 5;
        RadicalExpr inner = parse_expr(cur);
        cur.expect(')');
        return RadicalExpr::sqrt(std::move(inner));
    }

    bool is_op = (c == '+' || c == '*' || c == '/') ||
                 (c == '-' && cur.peek2() == '(');
    if (is_op) {
        ++cur.i;
        cur.expect('(');
        RadicalExpr a = parse_expr(cur);
        cur.expect(',');
        RadicalExpr b = parse_expr(cur);
        cur.expect(')');
        switch (c) {
            case '+': return RadicalExpr::add(std::move(a), std::move(b));
            case '-': return RadicalExpr::sub(std::move(a), std::move(b));
            case '*': return RadicalExpr::mul(std::move(a), std::move(b));
            default: return RadicalExpr::div(std::move(a), std::move(b));
        }
    }

    // Rational literal: sign, digits, optional /digits.
    size_t start = cur.i;
    if (c == '-' || c == '+') ++cur.i;
    while (cur.i < cur.s.size() &&
           ((cur.s[cur.i] >= '0' && cur.s[cur.i] <= '9') || cur.s[cur.i] == '/'))
        ++cur.i;
    auto lit = cur.s.substr(start, cur.i - start);
    auto q = rat_try_parse(lit);
    if (!q)
        throw ParseError("malformed rational '" + std::string(lit) +
                         "' in radical expression");
    return RadicalExpr::rational(*q);
}

} // namespace

RadicalExpr radical_parse(std::string_view text) {
    Cursor cur{text};
    RadicalExpr e = parse_expr(cur);
    if (!cur.eof())
        throw ParseError("trailing characters in radical expression");
    return e;
}

} // namespace hyperpi
