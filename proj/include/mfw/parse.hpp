#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "mfw/poly.hpp"

namespace mfw {

namespace lex {

enum class Tok { Int, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

// Shared tokenizer for the commutative and noncommutative expression
// grammars. Whitespace-insensitive; every token remembers its offset.
class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Tok k) {
            ++i_;
            cur_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Tok::Int, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_ = {Tok::Name, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '/': single(Tok::Slash); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case ',': single(Tok::Comma); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

}  // namespace lex

namespace detail {

// Recursive-descent parser. Precedence: '^' > unary minus > '*' > '+'/'-'.
// Implicit multiplication is rejected: `2x` fails where `2*x` parses.
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : lx_(text), ring_(std::move(ring)) {}

    Poly parse() {
        Poly p = expr();
        const auto& t = lx_.peek();
        if (t.kind != lex::Tok::End)
            throw ParseError("unexpected token '" + t.text + "'", t.pos);
        return p;
    }

private:
    Poly expr() {
        Poly p = term();
        while (true) {
            auto k = lx_.peek().kind;
            if (k == lex::Tok::Plus) {
                lx_.next();
                p += term();
            } else if (k == lex::Tok::Minus) {
                lx_.next();
                p -= term();
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = unary();
        while (lx_.peek().kind == lex::Tok::Star) {
            lx_.next();
            p *= unary();
        }
        return p;
    }

    Poly unary() {
        if (lx_.peek().kind == lex::Tok::Minus) {
            lx_.next();
            return -unary();
        }
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (lx_.peek().kind == lex::Tok::Caret) {
            lx_.next();
            auto t = lx_.peek();
            if (t.kind != lex::Tok::Int)
                throw ParseError("exponent must be a nonnegative integer literal", t.pos);
            lx_.next();
            return base.pow(parse_uint(t));
        }
        return base;
    }

    Poly atom() {
        auto t = lx_.peek();
        switch (t.kind) {
            case lex::Tok::Int: {
                lx_.next();
                mpz_class num(t.text);
                if (lx_.peek().kind == lex::Tok::Slash) {
                    lx_.next();
                    auto d = lx_.peek();
                    if (d.kind != lex::Tok::Int)
                        throw ParseError("expected integer denominator", d.pos);
                    lx_.next();
                    mpz_class den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                    return Poly::constant(ring_, rat_from_parts(num, den));
                }
                return Poly::constant(ring_, Rat(num));
            }
            case lex::Tok::Name: {
                lx_.next();
                auto idx = ring_->var_index(t.text);
                if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Poly::variable(ring_, *idx);
            }
            case lex::Tok::LParen: {
                lx_.next();
                Poly p = expr();
                auto r = lx_.peek();
                if (r.kind != lex::Tok::RParen) throw ParseError("expected ')'", r.pos);
                lx_.next();
                return p;
            }
            case lex::Tok::End: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    static std::uint64_t parse_uint(const lex::Token& t) {
        mpz_class v(t.text);
        if (!v.fits_ulong_p()) throw ParseError("exponent too large", t.pos);
        return v.get_ui();
    }

    lex::Lexer lx_;
    RingPtr ring_;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, RingPtr ring) {
    return detail::PolyParser(text, std::move(ring)).parse();
}

}  // namespace mfw
