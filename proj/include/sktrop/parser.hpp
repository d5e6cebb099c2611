/*
 * parser.hpp
 * ----------
 * Recursive-descent parser for the expression grammar
 *
 *   expr   := term (('+'|'&') term)*
 *   term   := factor ('*' factor | '/' factor)*
 *   factor := atom ('^' integer)? | 'abs' '(' expr ')' | '(' expr ')'
 *   atom   := 'x'<posint> | ('t'|'g') '(' <rational> ')'
 *
 * '+' tropical sum, '&' wedge, '*' product, '/' product with star of the
 * right operand, '^' integer power (negative allowed). Whitespace is
 * insignificant. Powers after ')' are accepted as a harmless superset.
 */
#pragma once

#include <string>
#include <string_view>

#include "expr.hpp"

namespace sktrop {

struct ParseError : DomainError {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : DomainError(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

class Parser {
  public:
    Parser(std::string_view text, int n, int budget) : s_(text), n_(n), budget_(budget) {}

    RationalExpr parse() {
        RationalExpr e = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    RationalExpr expr() {
        RationalExpr e = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                e = re_add(e, term(), budget_);
            } else if (c == '&') {
                ++pos_;
                e = re_wedge(e, term(), budget_);
            } else {
                return e;
            }
        }
    }

    RationalExpr term() {
        RationalExpr e = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                e = re_mul(e, factor(), budget_);
            } else if (c == '/') {
                ++pos_;
                e = re_mul(e, re_star(factor(), budget_), budget_);
            } else {
                return e;
            }
        }
    }

    RationalExpr factor() {
        RationalExpr e = primary();
        if (peek() == '^') {
            ++pos_;
            e = re_pow(e, integer(), budget_);
        }
        return e;
    }

    RationalExpr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalExpr e = expr();
            expect(')');
            return e;
        }
        if (c == 'a') {
            if (s_.substr(pos_, 3) != "abs") throw ParseError("expected 'abs'", pos_);
            pos_ += 3;
            expect('(');
            RationalExpr e = expr();
            expect(')');
            return re_norm(e, budget_);
        }
        if (c == 'x') {
            ++pos_;
            size_t start = pos_;
            long long idx = digits();
            if (idx < 1 || idx > n_) throw ParseError("unknown variable x" + std::to_string(idx), start);
            return var_expr(n_, static_cast<int>(idx - 1), budget_);
        }
        if (c == 't' || c == 'g') {
            ++pos_;
            expect('(');
            size_t start = pos_;
            size_t end = s_.find(')', pos_);
            if (end == std::string_view::npos) throw ParseError("unterminated scalar literal", start);
            std::string lit;
            for (char ch : s_.substr(start, end - start))
                if (!std::isspace(static_cast<unsigned char>(ch))) lit += ch;
            Rat m;
            try {
                m = rat_from_string(lit);
            } catch (const DomainError&) {
                throw ParseError("malformed rational literal", start);
            }
            pos_ = end + 1;
            return const_expr(n_, c == 't' ? t(m) : g(m), budget_);
        }
        throw ParseError("expected expression", pos_);
    }

    long long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        long long v = digits();
        return neg ? -v : v;
    }

    long long digits() {
        skip();
        size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return v;
    }

    std::string_view s_;
    size_t pos_ = 0;
    int n_;
    int budget_;
};

}  // namespace detail

inline RationalExpr parse(std::string_view text, int n, int budget = kDefaultBudget) {
    if (n < 0) throw DomainError("negative variable count");
    return detail::Parser(text, n, budget).parse();
}

}  // namespace sktrop
