#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "duval/error.hpp"
#include "duval/polynomial.hpp"

namespace duval {

namespace detail {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*')? unary)*        juxtaposition multiplies: "2x", "x(y+1)"
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := number ('/' number)? | 'x' | 'y' | '(' expr ')'
class GermParser {
public:
    explicit GermParser(std::string_view text) : s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_primary() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'X' ||
               c == 'Y' || c == '(';
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (starts_primary()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const Integer e = integer();
            if (e > 64) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'x' || c == 'X') {
            ++pos_;
            return Poly::x();
        }
        if (c == 'y' || c == 'Y') {
            ++pos_;
            return Poly::y();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = integer();
            if (peek('/')) {
                ++pos_;
                const Integer den = integer();
                if (den == 0) fail("zero denominator");
                return Poly(Rational(num, den));
            }
            return Poly(Rational(num));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x and y with rational coefficients, e.g. "y^2 - x^3"
/// or "x*y*(x+y)". Throws ParseError.
inline Poly parse_polynomial(std::string_view text) { return detail::GermParser(text).parse(); }

}  // namespace duval
