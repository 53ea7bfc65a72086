#include "pdm/expr.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pdm/errors.hpp"

namespace pdm {

struct Expr::Node {
    Kind kind = Kind::constant;
    real value = 0;
    Expr a{std::shared_ptr<const Node>{}};  // null unless the kind uses it
    Expr b{std::shared_ptr<const Node>{}};
    bool constant = true;
    std::size_t size = 1;
};

namespace {

bool is_unary(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::negate:
    case Expr::Kind::sqrt:
    case Expr::Kind::exp:
    case Expr::Kind::log:
    case Expr::Kind::sin:
    case Expr::Kind::cos:
    case Expr::Kind::sinh:
    case Expr::Kind::cosh:
    case Expr::Kind::asinh:
    case Expr::Kind::abs:
        return true;
    default:
        return false;
    }
}

bool is_binary(Expr::Kind k) {
    return k == Expr::Kind::add || k == Expr::Kind::subtract || k == Expr::Kind::multiply ||
           k == Expr::Kind::divide;
}

bool is_literal(const Expr& e, real v) { return e.kind() == Expr::Kind::constant && e.value() == v; }

real checked(real v, const char* what, real x) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string("non-finite result of ") + what, x);
    }
    return v;
}

real apply_unary(Expr::Kind k, real u, real x) {
    switch (k) {
    case Expr::Kind::negate:
        return -u;
    case Expr::Kind::sqrt:
        if (u < 0) throw DomainError("sqrt of negative argument", x);
        return std::sqrt(u);
    case Expr::Kind::exp:
        return checked(std::exp(u), "exp", x);
    case Expr::Kind::log:
        if (u <= 0) throw DomainError("log of non-positive argument", x);
        return std::log(u);
    case Expr::Kind::sin:
        return std::sin(u);
    case Expr::Kind::cos:
        return std::cos(u);
    case Expr::Kind::sinh:
        return checked(std::sinh(u), "sinh", x);
    case Expr::Kind::cosh:
        return checked(std::cosh(u), "cosh", x);
    case Expr::Kind::asinh:
        return std::asinh(u);
    case Expr::Kind::abs:
        return std::fabs(u);
    default:
        throw std::logic_error("not a unary kind");
    }
}

real apply_binary(Expr::Kind k, real u, real v, real x) {
    switch (k) {
    case Expr::Kind::add:
        return checked(u + v, "+", x);
    case Expr::Kind::subtract:
        return checked(u - v, "-", x);
    case Expr::Kind::multiply:
        return checked(u * v, "*", x);
    case Expr::Kind::divide:
        if (v == 0) throw DomainError("division by zero", x);
        return checked(u / v, "/", x);
    default:
        throw std::logic_error("not a binary kind");
    }
}

real apply_power(real u, real c, real x) {
    if (u < 0 && std::trunc(c) != c) throw DomainError("negative base with non-integer exponent", x);
    if (u == 0 && c < 0) throw DomainError("zero base with negative exponent", x);
    return checked(std::pow(u, c), "^", x);
}

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::subtract:
        return 1;
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
        return 2;
    case Expr::Kind::negate:
        return 3;
    case Expr::Kind::power:
        return 4;
    default:
        return 5;
    }
}

std::string number_text(real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
}

}  // namespace

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(real value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    n->constant = false;
    return Expr(std::move(n));
}

Expr Expr::unary(Kind kind, const Expr& arg) {
    if (!is_unary(kind)) throw std::invalid_argument("Expr::unary: not a unary kind");
    if (kind == Kind::negate && arg.kind() == Kind::negate) return arg.arg(0);
    if (arg.kind() == Kind::constant) {
        try {
            return constant(apply_unary(kind, arg.value(), 0));
        } catch (const DomainError&) {
            // left unfolded; evaluation reports the error
        }
    }
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = arg;
    n->constant = arg.is_constant();
    n->size = 1 + arg.node_count();
    return Expr(std::move(n));
}

Expr Expr::binary(Kind kind, const Expr& lhs, const Expr& rhs) {
    if (!is_binary(kind)) throw std::invalid_argument("Expr::binary: not a binary kind");
    if (lhs.kind() == Kind::constant && rhs.kind() == Kind::constant) {
        try {
            return constant(apply_binary(kind, lhs.value(), rhs.value(), 0));
        } catch (const DomainError&) {
        }
    }
    switch (kind) {
    case Kind::add:
        if (is_literal(lhs, 0)) return rhs;
        if (is_literal(rhs, 0)) return lhs;
        break;
    case Kind::subtract:
        if (is_literal(rhs, 0)) return lhs;
        if (is_literal(lhs, 0)) return unary(Kind::negate, rhs);
        break;
    case Kind::multiply:
        if (is_literal(lhs, 0) || is_literal(rhs, 0)) return constant(0);
        if (is_literal(lhs, 1)) return rhs;
        if (is_literal(rhs, 1)) return lhs;
        if (is_literal(lhs, -1)) return unary(Kind::negate, rhs);
        if (is_literal(rhs, -1)) return unary(Kind::negate, lhs);
        break;
    case Kind::divide:
        if (is_literal(rhs, 1)) return lhs;
        if (is_literal(lhs, 0) && !is_literal(rhs, 0)) return constant(0);
        break;
    default:
        break;
    }
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = lhs;
    n->b = rhs;
    n->constant = lhs.is_constant() && rhs.is_constant();
    n->size = 1 + lhs.node_count() + rhs.node_count();
    return Expr(std::move(n));
}

Expr Expr::power(const Expr& base, real exponent) {
    if (!std::isfinite(exponent)) throw std::invalid_argument("Expr::power: non-finite exponent");
    if (exponent == 1) return base;
    if (exponent == 0) return constant(1);
    if (base.kind() == Kind::constant) {
        try {
            return constant(apply_power(base.value(), exponent, 0));
        } catch (const DomainError&) {
        }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->a = base;
    n->value = exponent;
    n->constant = base.is_constant();
    n->size = 1 + base.node_count();
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

real Expr::value() const noexcept { return node_->value; }

std::size_t Expr::arity() const noexcept {
    if (is_binary(node_->kind)) return 2;
    if (is_unary(node_->kind) || node_->kind == Kind::power) return 1;
    return 0;
}

const Expr& Expr::arg(std::size_t i) const {
    if (i >= arity()) throw std::out_of_range("Expr::arg");
    return i == 0 ? node_->a : node_->b;
}

bool Expr::is_constant() const noexcept { return node_->constant; }

std::size_t Expr::node_count() const noexcept { return node_->size; }

real Expr::operator()(real x) const {
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::constant:
        return n.value;
    case Kind::variable:
        return x;
    case Kind::power:
        return apply_power(n.a(x), n.value, x);
    default:
        break;
    }
    if (is_unary(n.kind)) return apply_unary(n.kind, n.a(x), x);
    return apply_binary(n.kind, n.a(x), n.b(x), x);
}

std::string Expr::to_string() const {
    const Node& n = *node_;
    auto wrap = [](const Expr& child, bool paren) {
        std::string s = child.to_string();
        return paren ? "(" + s + ")" : s;
    };
    switch (n.kind) {
    case Kind::constant:
        return n.value < 0 ? "(" + number_text(n.value) + ")" : number_text(n.value);
    case Kind::variable:
        return "x";
    case Kind::negate:
        return "-" + wrap(n.a, precedence(n.a.kind()) <= precedence(Kind::negate));
    case Kind::power:
        // the exponent is always parenthesized so negative values re-parse
        return wrap(n.a, precedence(n.a.kind()) <= precedence(Kind::power)) + "^(" + number_text(n.value) + ")";
    default:
        break;
    }
    if (is_unary(n.kind)) return std::string(kind_name(n.kind)) + "(" + n.a.to_string() + ")";
    const int p = precedence(n.kind);
    const char* op = n.kind == Kind::add ? " + " : n.kind == Kind::subtract ? " - " : n.kind == Kind::multiply ? "*" : "/";
    const bool left_paren = precedence(n.a.kind()) < p;
    // subtract and divide are left-associative, so an equal-precedence right operand needs parentheses
    const bool right_strict = n.kind == Kind::subtract || n.kind == Kind::divide;
    const bool right_paren = right_strict ? precedence(n.b.kind()) <= p : precedence(n.b.kind()) < p;
    return wrap(n.a, left_paren) + op + wrap(n.b, right_paren);
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::subtract, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::multiply, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::divide, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Expr::Kind::negate, a); }

std::string_view kind_name(Expr::Kind kind) noexcept {
    switch (kind) {
    case Expr::Kind::constant: return "constant";
    case Expr::Kind::variable: return "x";
    case Expr::Kind::negate: return "negate";
    case Expr::Kind::sqrt: return "sqrt";
    case Expr::Kind::exp: return "exp";
    case Expr::Kind::log: return "log";
    case Expr::Kind::sin: return "sin";
    case Expr::Kind::cos: return "cos";
    case Expr::Kind::sinh: return "sinh";
    case Expr::Kind::cosh: return "cosh";
    case Expr::Kind::asinh: return "asinh";
    case Expr::Kind::abs: return "abs";
    case Expr::Kind::add: return "add";
    case Expr::Kind::subtract: return "subtract";
    case Expr::Kind::multiply: return "multiply";
    case Expr::Kind::divide: return "divide";
    case Expr::Kind::power: return "power";
    }
    return "?";
}

Expr differentiate(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        return Expr::constant(0);
    case K::variable:
        return Expr::constant(1);
    default:
        break;
    }
    if (e.is_constant()) return Expr::constant(0);

    const Expr& u = e.arg(0);
    const Expr du = differentiate(u);
    switch (e.kind()) {
    case K::negate:
        return -du;
    case K::sqrt:
        return du / (Expr::constant(2) * e);
    case K::exp:
        return e * du;
    case K::log:
        return du / u;
    case K::sin:
        return Expr::unary(K::cos, u) * du;
    case K::cos:
        return -(Expr::unary(K::sin, u) * du);
    case K::sinh:
        return Expr::unary(K::cosh, u) * du;
    case K::cosh:
        return Expr::unary(K::sinh, u) * du;
    case K::asinh:
        return du / Expr::unary(K::sqrt, Expr::constant(1) + Expr::power(u, 2));
    case K::abs:
        return u * du / e;
    case K::power:
        return Expr::constant(e.value()) * Expr::power(u, e.value() - 1) * du;
    default:
        break;
    }

    const Expr& v = e.arg(1);
    const Expr dv = differentiate(v);
    switch (e.kind()) {
    case K::add:
        return du + dv;
    case K::subtract:
        return du - dv;
    case K::multiply:
        return du * v + u * dv;
    case K::divide:
        return (du * v - u * dv) / Expr::power(v, 2);
    default:
        throw std::logic_error("differentiate: unhandled node");
    }
}

}  // namespace pdm
