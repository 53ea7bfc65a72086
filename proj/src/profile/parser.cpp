#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pdm/errors.hpp"
#include "pdm/expr.hpp"

namespace pdm {

namespace {

constexpr int max_depth = 200;

struct Function {
    std::string_view name;
    Expr::Kind kind;
};

constexpr Function functions[] = {
    {"sqrt", Expr::Kind::sqrt}, {"exp", Expr::Kind::exp},     {"log", Expr::Kind::log},
    {"sin", Expr::Kind::sin},   {"cos", Expr::Kind::cos},     {"sinh", Expr::Kind::sinh},
    {"cosh", Expr::Kind::cosh}, {"asinh", Expr::Kind::asinh}, {"abs", Expr::Kind::abs},
};

// Recursive descent over the byte string. U+2212 (minus sign) is accepted as '-'.
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Expr run() {
        skip_space();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        Expr e = expression();
        skip_space();
        if (pos_ < s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > max_depth) throw ParseError("expression nested too deeply", p.pos_);
        }
        ~DepthGuard() { --p.depth_; }
    };

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Consumes `c` (or the UTF-8 minus sign when c == '-') after whitespace.
    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        if (c == '-' && s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail_here(const std::string& what) {
        skip_space();
        if (pos_ >= s_.size()) throw ParseError(what + ", found end of input", pos_);
        throw ParseError(what + ", found '" + std::string(1, s_[pos_]) + "'", pos_);
    }

    Expr expression() {
        DepthGuard guard(*this);
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = lhs + term();
            } else if (accept('-')) {
                lhs = lhs - term();
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = lhs * unary();
            } else if (accept('/')) {
                lhs = lhs / unary();
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        DepthGuard guard(*this);
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        Expr exponent = unary();
        if (!exponent.is_constant()) throw ParseError("exponent of '^' must be constant", at);
        real c;
        try {
            c = exponent(0);
        } catch (const DomainError&) {
            throw ParseError("exponent of '^' is undefined", at);
        }
        return Expr::power(base, c);
    }

    Expr primary() {
        skip_space();
        if (pos_ >= s_.size()) fail_here("expected operand");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            Expr inner = expression();
            if (!accept(')')) fail_here("expected ')'");
            return inner;
        }
        fail_here("expected operand");
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                pos_ = p;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        const std::string text(s_.substr(start, pos_ - start));
        char* end = nullptr;
        errno = 0;
        const real v = std::strtold(text.c_str(), &end);
        if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
            throw ParseError("malformed number '" + text + "'", start);
        }
        return Expr::constant(v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable();
        if (name == "pi") return Expr::constant(pi);
        if (name == "e") return Expr::constant(std::exp(real{1}));
        for (const Function& f : functions) {
            if (f.name == name) {
                if (!accept('(')) fail_here("expected '(' after " + std::string(name));
                Expr arg = expression();
                if (!accept(')')) fail_here("expected ')'");
                return Expr::unary(f.kind, arg);
            }
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace pdm
