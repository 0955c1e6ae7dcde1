#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "starpi/errors.hpp"
#include "starpi/field.hpp"
#include "starpi/freealg.hpp"

namespace starpi {

// Recursive-descent parser for the polynomial text grammar:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ['^' nat]
//   atom    := nat ['/' nat] | '#' nat | variable | '(' expr ')'
//            | '[' expr (',' expr)+ ']'
//   variable := ('y' | 'z') nat-with-index-at-least-1
//
// '^0' yields the unit, '[a,b,c]' is the left-normed commutator, fraction
// literals use the coefficient field's division, '#<index>' denotes an
// extension-field element by enumeration index, and whitespace is
// insignificant.  Errors carry the byte offset of the offending token.
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, const FieldDescriptor* field)
        : text_(text), field_(field) {}

    StarPolynomial parse() {
        skipWs();
        StarPolynomial p = parseExpr();
        skipWs();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        return p;
    }

private:
    StarPolynomial parseExpr() {
        bool negate = false;
        skipWs();
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        StarPolynomial acc = parseTerm();
        if (negate) acc = -acc;
        for (;;) {
            skipWs();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parseTerm();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parseTerm();
            } else {
                return acc;
            }
        }
    }

    StarPolynomial parseTerm() {
        StarPolynomial acc = parseFactor();
        for (;;) {
            skipWs();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parseFactor();
            } else {
                return acc;
            }
        }
    }

    StarPolynomial parseFactor() {
        StarPolynomial base = parseAtom();
        skipWs();
        if (peek() == '^') {
            ++pos_;
            skipWs();
            std::size_t expPos = pos_;
            if (!std::isdigit(peekRaw()))
                throw SyntaxError(pos_, "expected a nonnegative integer exponent");
            mpz_class e = parseNat();
            if (e > 10000) throw SyntaxError(expPos, "exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    StarPolynomial parseAtom() {
        skipWs();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            StarPolynomial p = parseExpr();
            expect(')');
            return p;
        }
        if (c == '[') {
            ++pos_;
            std::vector<StarPolynomial> args;
            args.push_back(parseExpr());
            skipWs();
            while (peek() == ',') {
                ++pos_;
                args.push_back(parseExpr());
                skipWs();
            }
            expect(']');
            if (args.size() < 2)
                throw SyntaxError(start, "commutator needs at least two arguments");
            return leftNormedCommutator(args);
        }
        if (c == '#') {
            ++pos_;
            if (field_->kind() != FieldKind::Extension)
                throw SyntaxError(start, "'#' literals only denote extension-field elements");
            if (!std::isdigit(peekRaw())) throw SyntaxError(pos_, "expected an element index");
            unsigned long idx = parseNat().get_ui();
            if (idx >= field_->cardinality().value())
                throw SyntaxError(start, "element index out of range");
            return StarPolynomial::constant(field_,
                                            field_->fromIndex(static_cast<unsigned>(idx)));
        }
        if (c == 'y' || c == 'z') {
            ++pos_;
            if (!std::isdigit(peekRaw())) throw SyntaxError(pos_, "expected a variable index");
            mpz_class idx = parseNat();
            if (idx < 1 || idx > 1000000) throw SyntaxError(start, "variable index out of range");
            Variable v = (c == 'y') ? yVar(idx.get_ui()) : zVar(idx.get_ui());
            return StarPolynomial::variable(field_, v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parseNat();
            skipWs();
            if (peek() == '/') {
                ++pos_;
                skipWs();
                if (!std::isdigit(peekRaw())) throw SyntaxError(pos_, "expected a denominator");
                mpz_class den = parseNat();
                if (den == 0) throw SyntaxError(start, "zero denominator");
                return StarPolynomial::constant(field_, field_->fromRatio(num, den));
            }
            return StarPolynomial::constant(field_, field_->fromInteger(num));
        }
        throw SyntaxError(pos_, "expected a coefficient, variable, '(', or '['");
    }

    mpz_class parseNat() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError(start, "expected digits");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    // 0 at end of input; never consumed accidentally.
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    unsigned char peekRaw() const {
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : 0;
    }
    void expect(char c) {
        skipWs();
        if (peek() != c)
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    const std::string& text_;
    const FieldDescriptor* field_;
    std::size_t pos_ = 0;
};

inline StarPolynomial parsePolynomial(const std::string& text, const FieldDescriptor* field) {
    return PolynomialParser(text, field).parse();
}

} // namespace starpi
