/*
   Copyright 2026 The scorza authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SCORZA_IO_HPP
#define SCORZA_IO_HPP

#include <map>
#include <optional>

#include "scorza/fields.hpp"
#include "scorza/polynomial.hpp"

namespace scorza {

// ---------------------------------------------------------------------------
// Tokenizer. Identifiers are [a-z][a-z0-9_]*, integers are digit strings,
// operators + - * ^ / ( ) [ ] , : =. Implicit multiplication is not allowed.
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Int, Op, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
   public:
    Lexer(const std::string& src, int line0 = 1) : src_(src), line_(line0) {}

    Token peek() {
        if (!ahead_) ahead_ = lex();
        return *ahead_;
    }
    Token next() {
        Token t = peek();
        ahead_.reset();
        return t;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        usage_error("SyntaxError", msg + " at line " + std::to_string(t.line) + ", column " +
                                       std::to_string(t.col));
    }

   private:
    Token lex() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 0;
                ++pos_;
                continue;
            }
            if (c == '#') {  // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
                continue;
            }
            break;
        }
        Token t;
        t.line = line_;
        t.col = col_ + 1;
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (isalpha(static_cast<unsigned char>(src_[pos_])) ||
                    isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            t.kind = Token::Kind::Ident;
            t.text = src_.substr(start, pos_ - start);
            col_ += static_cast<int>(t.text.size());
            return t;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            t.kind = Token::Kind::Int;
            t.text = src_.substr(start, pos_ - start);
            col_ += static_cast<int>(t.text.size());
            return t;
        }
        static const std::string ops = "+-*^/()[],:=";
        if (ops.find(c) != std::string::npos) {
            t.kind = Token::Kind::Op;
            t.text = std::string(1, c);
            ++pos_;
            ++col_;
            return t;
        }
        usage_error("SyntaxError", std::string("unexpected character '") + c + "' at line " +
                                       std::to_string(line_) + ", column " + std::to_string(col_ + 1));
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 0;
    std::optional<Token> ahead_;
};

// ---------------------------------------------------------------------------
// Expression parsing over a concrete coefficient field. The generator symbol
// of a number field is folded into the coefficients; '/' requires a constant
// divisor. Grammar (LL(1), no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')* atom ('^' INT)?
//   atom   := INT | IDENT | '(' expr ')'
// ---------------------------------------------------------------------------

template <class K>
class PolyParser {
   public:
    PolyParser(Lexer& lx, RingPtr<K> ring, std::string gen_name)
        : lx_(lx), ring_(std::move(ring)), gen_(std::move(gen_name)) {}

    Polynomial<K> parse_expr() {
        Polynomial<K> acc = parse_term();
        while (true) {
            Token t = lx_.peek();
            if (t.kind == Token::Kind::Op && (t.text == "+" || t.text == "-")) {
                lx_.next();
                Polynomial<K> rhs = parse_term();
                acc = (t.text == "+") ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

   private:
    Polynomial<K> parse_term() {
        Polynomial<K> acc = parse_factor();
        while (true) {
            Token t = lx_.peek();
            if (t.kind == Token::Kind::Op && t.text == "*") {
                lx_.next();
                acc = acc * parse_factor();
            } else if (t.kind == Token::Kind::Op && t.text == "/") {
                lx_.next();
                Polynomial<K> d = parse_factor();
                if (d.is_zero() || d.degree() != 0) lx_.fail(t, "division by a non-constant");
                acc = scale(acc, field_inv(d.leading_coefficient()));
            } else {
                return acc;
            }
        }
    }

    Polynomial<K> parse_factor() {
        Token t = lx_.peek();
        bool neg = false;
        while (t.kind == Token::Kind::Op && t.text == "-") {
            lx_.next();
            neg = !neg;
            t = lx_.peek();
        }
        Polynomial<K> base = parse_atom();
        t = lx_.peek();
        if (t.kind == Token::Kind::Op && t.text == "^") {
            lx_.next();
            Token e = lx_.next();
            if (e.kind != Token::Kind::Int) lx_.fail(e, "exponent must be an integer");
            base = poly_pow(base, std::stoi(e.text));
        }
        return neg ? -base : base;
    }

    Polynomial<K> parse_atom() {
        Token t = lx_.next();
        if (t.kind == Token::Kind::Int) {
            return poly_const(ring_, from_rational(make_rational(std::stol(t.text), 1), ring_->one));
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == gen_) return poly_const(ring_, generator_value());
            int idx = ring_->var_index(t.text);
            if (idx < 0) lx_.fail(t, "unknown identifier '" + t.text + "'");
            return poly_var(ring_, idx);
        }
        if (t.kind == Token::Kind::Op && t.text == "(") {
            Polynomial<K> inner = parse_expr();
            Token close = lx_.next();
            if (!(close.kind == Token::Kind::Op && close.text == ")")) lx_.fail(close, "expected ')'");
            return inner;
        }
        lx_.fail(t, "expected integer, identifier or '('");
    }

    K generator_value() const {
        if constexpr (std::is_same_v<K, NF>) {
            NF g(ring_->one.ctx);
            g.c[1] = 1;
            return g;
        } else {
            usage_error("FieldMismatch", "the generator symbol needs a number field");
        }
    }

    Lexer& lx_;
    RingPtr<K> ring_;
    std::string gen_;
};

// ---------------------------------------------------------------------------
// Field declarations: QQ | GF p | QQ[t]/(m(t))
// ---------------------------------------------------------------------------

inline std::string lowercased(std::string s) {
    for (auto& c : s) c = static_cast<char>(tolower(static_cast<unsigned char>(c)));
    return s;
}

inline FieldDescriptor parse_field_decl(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::Kind::Ident) lx.fail(t, "expected field kind");
    if (lowercased(t.text) == "qq") {
        Token nxt = lx.peek();
        if (nxt.kind == Token::Kind::Op && nxt.text == "[") {
            lx.next();
            Token gen = lx.next();
            if (gen.kind != Token::Kind::Ident) lx.fail(gen, "expected generator name");
            Token close = lx.next();
            if (!(close.kind == Token::Kind::Op && close.text == "]")) lx.fail(close, "expected ']'");
            Token slash = lx.next();
            if (!(slash.kind == Token::Kind::Op && slash.text == "/")) lx.fail(slash, "expected '/'");
            Token open = lx.next();
            if (!(open.kind == Token::Kind::Op && open.text == "(")) lx.fail(open, "expected '('");
            // parse the modulus as a univariate polynomial in the generator
            RingPtr<Rational> uni = PolynomialRing<Rational>::make({gen.text}, Rational(1));
            PolyParser<Rational> pp(lx, uni, "");
            Polynomial<Rational> mp = pp.parse_expr();
            Token cl = lx.next();
            if (!(cl.kind == Token::Kind::Op && cl.text == ")")) lx.fail(cl, "expected ')'");
            int d = mp.degree();
            if (d < 1) usage_error("FieldMismatch", "modulus must have positive degree");
            std::vector<Rational> coeffs(d + 1, Rational(0));
            for (const auto& term : mp.ts) coeffs[term.m.e[0]] = term.c;
            if (coeffs[d] != 1) usage_error("FieldMismatch", "modulus must be monic");
            return FieldDescriptor::number_field(coeffs, gen.text);
        }
        return FieldDescriptor::rationals();
    }
    if (lowercased(t.text) == "gf") {
        Token p = lx.next();
        if (p.kind != Token::Kind::Int) lx.fail(p, "expected prime after GF");
        return FieldDescriptor::prime_field(std::stoull(p.text));
    }
    lx.fail(t, "unknown field kind '" + t.text + "'");
}

// ---------------------------------------------------------------------------
// Canonical machine serialization: terms in grevlex-descending order joined
// by '+', coefficients as reduced fractions (number field values in
// parentheses), monomials as var^e joined by '*'.
// ---------------------------------------------------------------------------

template <class K>
std::string machine_coeff(const K& c);

inline std::string machine_coeff(const Rational& c) { return to_string(c); }
inline std::string machine_coeff(const Fp& c) { return to_string(c); }
inline std::string machine_coeff(const NF& c) { return "(" + to_string(c) + ")"; }

template <class K>
std::string machine_poly(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.ts) {
        if (!first) out += "+";
        first = false;
        out += machine_coeff(t.c);
        for (int v = 0; v < f.ring->nvars(); ++v) {
            if (!t.m.e[v]) continue;
            out += "*";
            out += f.ring->vars[v];
            if (t.m.e[v] > 1) out += "^" + std::to_string(static_cast<int>(t.m.e[v]));
        }
    }
    return out;
}

}  // namespace scorza

#endif
