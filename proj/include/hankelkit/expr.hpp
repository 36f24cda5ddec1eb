#pragma once

/**
 * @file expr.hpp
 * @brief Text form of field elements: a small exact expression parser and
 *        the canonical renderer.
 *
 * Grammar (whitespace is insignificant):
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := factor (('*' | '/') factor)*
 *     factor := atom ('^' signed-int)?
 *     atom   := nat | 'q' | '(' expr ')' | '-' factor
 *
 * `nat / nat` is ordinary division inside a term, so "3/4 * q + 1" and
 * "(1-q)/(1+q)" both parse. Rendering writes descending powers of q with
 * integer or p/q coefficients (`3/4*q^2 - q + 1`) and, when the denominator
 * is not 1, `(num) / (den)`. Every rendering parses back to the same element.
 */

#include <cctype>
#include <string>
#include <string_view>

#include "hankelkit/field_elem.hpp"

namespace hankelkit {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    FieldElem parse() {
        FieldElem v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElem expr() {
        FieldElem v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    FieldElem term() {
        FieldElem v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                FieldElem d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    FieldElem factor() {
        FieldElem base = atom();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        const std::size_t at = pos_;
        Integer e = natural();
        if (!e.fits_slong_p()) throw ParseError("exponent too large", at);
        long ev = e.get_si();
        if (negative) ev = -ev;
        if (ev < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", at);
        return pow_int(base, ev);
    }

    FieldElem atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem(Rational(natural()));
        if (c == 'q') {
            ++pos_;
            return FieldElem::q();
        }
        if (c == '(') {
            ++pos_;
            FieldElem v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Integer natural() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline FieldElem parse_field_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Descending powers of q, e.g. "q^2 - 3/4*q + 1"; "0" for the zero polynomial.
inline std::string render(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) continue;
        const bool first = out.empty();
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Rational a = abs(c);
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// Canonical text of x: "poly" when the denominator is 1, otherwise "(num) / (den)".
inline std::string render(const FieldElem& x) {
    if (x.primitive_denominator().degree() == 0) return render(x.numerator());
    return "(" + render(x.numerator()) + ") / (" + render(x.denominator()) + ")";
}

}  // namespace hankelkit
