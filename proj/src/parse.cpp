#include "crjet/parse.hpp"

#include <cctype>

namespace crjet {

Lexer::Lexer(std::string src) : src_(std::move(src)) {}

Token Lexer::scan() {
    while (at_ < src_.size()) {
        char c = src_[at_];
        if (std::isspace(static_cast<unsigned char>(c))) { ++at_; continue; }
        if (c == '#') {
            while (at_ < src_.size() && src_[at_] != '\n') ++at_;
            continue;
        }
        break;
    }
    Token t;
    t.pos = at_;
    if (at_ >= src_.size()) return t;
    char c = src_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = at_;
        while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
        if (at_ < src_.size() && (src_[at_] == '.' || src_[at_] == 'e' || src_[at_] == 'E'))
            throw ParseError("floating-point literals are not supported", at_);
        t.kind = Token::Number;
        t.text = src_.substr(b, at_ - b);
        return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = at_;
        while (at_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_')) ++at_;
        while (at_ < src_.size() && src_[at_] == '\'') ++at_;
        // x^(k) jet suffix; a power never takes a parenthesised exponent.
        if (at_ + 1 < src_.size() && src_[at_] == '^' && src_[at_ + 1] == '(') {
            std::size_t k = at_ + 2;
            while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
            if (k > at_ + 2 && k < src_.size() && src_[k] == ')') at_ = k + 1;
        }
        t.kind = Token::Ident;
        t.text = src_.substr(b, at_ - b);
        return t;
    }
    if (c == '"') {
        std::size_t b = ++at_;
        while (at_ < src_.size() && src_[at_] != '"') ++at_;
        if (at_ >= src_.size()) throw ParseError("unterminated string", b - 1);
        t.kind = Token::String;
        t.text = src_.substr(b, at_ - b);
        ++at_;
        return t;
    }
    static const std::string syms = "+-*/^()[];,={}:";
    if (syms.find(c) == std::string::npos) throw ParseError(std::string("unexpected character '") + c + "'", at_);
    ++at_;
    t.kind = Token::Sym;
    t.text = std::string(1, c);
    return t;
}

const Token& Lexer::peek(std::size_t ahead) {
    while (buf_.size() <= ahead) buf_.push_back(scan());
    return buf_[ahead];
}

Token Lexer::next() {
    peek();
    Token t = buf_.front();
    buf_.erase(buf_.begin());
    return t;
}

bool Lexer::accept_sym(const std::string& s) {
    if (peek().kind == Token::Sym && peek().text == s) { next(); return true; }
    return false;
}

void Lexer::expect_sym(const std::string& s) {
    if (!accept_sym(s)) throw ParseError("expected '" + s + "'", peek().pos);
}

std::string Lexer::expect_ident() {
    if (peek().kind != Token::Ident) throw ParseError("expected identifier", peek().pos);
    return next().text;
}

namespace {

RatExpr parse_sum(Lexer& lx);

long parse_int_exponent(Lexer& lx) {
    bool neg = lx.accept_sym("-");
    bool paren = !neg && lx.accept_sym("(");
    if (paren) neg = lx.accept_sym("-");
    if (lx.peek().kind != Token::Number) throw ParseError("expected integer exponent", lx.peek().pos);
    auto t = lx.next();
    if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
    if (paren) lx.expect_sym(")");
    long e = std::stol(t.text);
    return neg ? -e : e;
}

RatExpr parse_base(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::Number) {
        auto tok = lx.next();
        return RatExpr(GaussRat(Rational(mpq_class(mpz_class(tok.text)))));
    }
    if (t.kind == Token::Ident) {
        auto tok = lx.next();
        if (tok.text == "i") return RatExpr::I();
        auto& vt = VarTable::global();
        if (lx.peek().kind == Token::Sym && lx.peek().text == "(") {
            // f(args) names the underived symbol of a declared function.
            auto fi = vt.find_function(tok.text);
            if (!fi) throw ParseError("unknown function '" + tok.text + "' (only declared formal functions)", tok.pos);
            lx.next();
            const auto& f = vt.function(*fi);
            for (std::size_t k = 0; k < f.args.size(); ++k) {
                if (k) lx.expect_sym(",");
                auto a = lx.expect_ident();
                if (vt.find(a) != f.args[k]) throw ParseError("argument mismatch for '" + tok.text + "'", tok.pos);
            }
            lx.expect_sym(")");
            return RatExpr::var(vt.formal(*fi, MultiIndex{}));
        }
        try {
            return RatExpr::var(vt.resolve(tok.text, true));
        } catch (const UnknownVariable& e) {
            throw ParseError(e.what(), tok.pos);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), tok.pos);
        } catch (const std::overflow_error& e) {
            throw ParseError(e.what(), tok.pos);
        }
    }
    if (lx.accept_sym("(")) {
        RatExpr e = parse_sum(lx);
        lx.expect_sym(")");
        return e;
    }
    if (t.kind == Token::End) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
}

RatExpr parse_factor(Lexer& lx) {
    if (lx.accept_sym("-")) return -parse_factor(lx);
    if (lx.accept_sym("+")) return parse_factor(lx);
    RatExpr b = parse_base(lx);
    if (lx.accept_sym("^")) {
        auto pos = lx.peek().pos;
        long e = parse_int_exponent(lx);
        if (e < 0 && b.is_zero()) throw ParseError("zero to a negative power", pos);
        return b.pow(int(e));
    }
    return b;
}

RatExpr parse_term(Lexer& lx) {
    RatExpr acc = parse_factor(lx);
    for (;;) {
        if (lx.accept_sym("*")) {
            acc *= parse_factor(lx);
        } else if (lx.peek().kind == Token::Sym && lx.peek().text == "/") {
            auto pos = lx.next().pos;
            RatExpr d = parse_factor(lx);
            if (d.is_zero()) throw ParseError("division by zero", pos);
            acc /= d;
        } else {
            return acc;
        }
    }
}

RatExpr parse_sum(Lexer& lx) {
    RatExpr acc = parse_term(lx);
    for (;;) {
        if (lx.accept_sym("+")) acc += parse_term(lx);
        else if (lx.accept_sym("-")) acc -= parse_term(lx);
        else return acc;
    }
}

} // namespace

RatExpr parse_expression(Lexer& lx) {
    try {
        return parse_sum(lx);
    } catch (const ZeroDenominator&) {
        throw ParseError("denominator vanishes identically", lx.peek().pos);
    }
}

bool parse_declaration(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind != Token::Ident) return false;
    auto& vt = VarTable::global();
    if (t.text == "function" && lx.peek(1).kind == Token::Ident) {
        auto pos = lx.next().pos;
        auto name = lx.expect_ident();
        lx.expect_sym("(");
        std::vector<std::string> args;
        if (!lx.accept_sym(")")) {
            do args.push_back(lx.expect_ident());
            while (lx.accept_sym(","));
            lx.expect_sym(")");
        }
        bool real = false;
        if (lx.peek().kind == Token::Ident && lx.peek().text == "real") {
            lx.next();
            real = true;
        }
        lx.expect_sym(";");
        try {
            vt.declare_function(name, args, real);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), pos);
        }
        return true;
    }
    if (t.text == "var" && lx.peek(1).kind == Token::Ident) {
        auto pos = lx.next().pos;
        do {
            auto a = lx.expect_ident();
            try {
                if (lx.peek().kind == Token::Ident && lx.peek().text == "conj") {
                    lx.next();
                    vt.declare_conj(a, lx.expect_ident());
                } else {
                    vt.declare(a);
                }
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(e.what(), pos);
            }
        } while (lx.accept_sym(","));
        lx.expect_sym(";");
        return true;
    }
    return false;
}

std::vector<RatExpr> parse_program(const std::string& text) {
    Lexer lx(text);
    std::vector<RatExpr> out;
    for (;;) {
        while (lx.accept_sym(";")) {}
        if (lx.peek().kind == Token::End) break;
        if (parse_declaration(lx)) continue;
        out.push_back(parse_expression(lx));
        if (lx.peek().kind != Token::End && !lx.accept_sym(";"))
            throw ParseError("unexpected '" + lx.peek().text + "'", lx.peek().pos);
    }
    return out;
}

RatExpr parse(const std::string& text) {
    auto v = parse_program(text);
    if (v.size() != 1) throw ParseError("expected exactly one expression", 0);
    return v[0];
}

} // namespace crjet
