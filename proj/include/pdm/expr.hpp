#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "pdm/types.hpp"

namespace pdm {

/// Immutable expression tree in the single variable x.
///
/// The node set (constants, x, negate/sqrt/exp/log/sin/cos/sinh/cosh/asinh/abs,
/// + - * / and powers with a constant real exponent) is closed under
/// differentiate(). Trees share structure and are safe to read concurrently.
class Expr {
public:
    enum class Kind {
        constant,
        variable,
        negate,
        sqrt,
        exp,
        log,
        sin,
        cos,
        sinh,
        cosh,
        asinh,
        abs,
        add,
        subtract,
        multiply,
        divide,
        power,
    };

    /// The constant 0.
    Expr();

    static Expr constant(real value);
    static Expr variable();
    /// Builds a unary node; constant arguments are folded when the result is finite.
    static Expr unary(Kind kind, const Expr& arg);
    /// Builds a binary node (add, subtract, multiply, divide) with constant folding
    /// and the trivial identities 0+e, e*1, e*0, e/1.
    static Expr binary(Kind kind, const Expr& lhs, const Expr& rhs);
    static Expr power(const Expr& base, real exponent);

    Kind kind() const noexcept;
    /// The literal of a constant node, or the exponent of a power node.
    real value() const noexcept;
    std::size_t arity() const noexcept;
    const Expr& arg(std::size_t i) const;

    /// True when the tree does not reference x.
    bool is_constant() const noexcept;

    /// Evaluates at x. Throws DomainError instead of returning a non-finite value.
    real operator()(real x) const;

    /// Re-parseable text form.
    std::string to_string() const;

    std::size_t node_count() const noexcept;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Parses profile text. Grammar: numbers, `x`, `pi`, `e`, the unary functions
/// sqrt exp log sin cos sinh cosh asinh abs, infix + - * / ^ and parentheses.
/// `^` binds tightest and associates to the right; its exponent must fold to a
/// constant. Throws ParseError carrying the byte offset of the problem.
Expr parse(std::string_view text);

/// Exact symbolic derivative with respect to x.
Expr differentiate(const Expr& e);

std::string_view kind_name(Expr::Kind kind) noexcept;

}  // namespace pdm
