#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "darboux/bipoly.hpp"

namespace darboux {

/// Raised on malformed polynomial text; offset is the 0-based byte offset
/// of the offending character within the parsed string.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(std::string msg, size_t off)
        : std::runtime_error(std::move(msg)), offset(off) {}
};

/// Recursive-descent parser for the polynomial expression grammar:
/// integers, rationals a/b, two variables, + - * ^, unary minus,
/// parentheses. Implicit multiplication is rejected. Whitespace is
/// insignificant.
class PolyParser {
public:
    PolyParser(std::string_view text, std::string var_x, std::string var_y)
        : s_(text), vx_(std::move(var_x)), vy_(std::move(var_y)) {}

    BiPoly parse() {
        BiPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string_view s_;
    std::string vx_, vy_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, size_t off) { throw ParseError(msg, off); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    BiPoly expr() {
        BiPoly acc = term();
        while (true) {
            char c = peek();
            if (c == '+') { ++pos_; acc = acc + term(); }
            else if (c == '-') { ++pos_; acc = acc - term(); }
            else break;
        }
        return acc;
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') { ++pos_; acc = acc * factor(); }
            else if (c == '(' || std::isalnum(static_cast<unsigned char>(c)))
                fail("missing operator (implicit multiplication is not allowed)", pos_);
            else break;
        }
        return acc;
    }

    BiPoly factor() {
        char c = peek();
        if (c == '-') { ++pos_; return -factor(); }
        if (c == '+') { ++pos_; return factor(); }
        BiPoly base = atom();
        while (peek() == '^') {
            ++pos_;
            long e = exponent();
            base = base.pow(e);
        }
        return base;
    }

    long exponent() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected nonnegative integer exponent", pos_);
        Int e = read_digits();
        if (e > kExponentCap) fail("exponent overflow (cap 10^6)", start);
        return e.template convert_to<long>();
    }

    Int read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return Int(d);
    }

    BiPoly atom() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!eat(')')) fail("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int numv = read_digits();
            // rational literal a/b
            size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                size_t dstart = pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator digits", pos_);
                Int denv = read_digits();
                if (denv == 0) fail("zero denominator", dstart);
                return BiPoly::constant(make_rational(numv, denv));
            }
            pos_ = save;
            return BiPoly::constant(Rational(numv));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += s_[pos_++];
            if (id == vx_) return BiPoly::var_x();
            if (id == vy_) return BiPoly::var_y();
            fail("unknown identifier '" + id + "'", start);
        }
        fail(std::string("unexpected character '") + c + "'", pos_);
    }
};

inline BiPoly parse_poly(std::string_view text,
                         const std::string& var_x = "x",
                         const std::string& var_y = "y") {
    return PolyParser(text, var_x, var_y).parse();
}

} // namespace darboux
