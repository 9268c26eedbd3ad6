#ifndef CRJET_PARSE_HPP
#define CRJET_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crjet/ratexpr.hpp"

namespace crjet {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct Token {
    enum Kind { End, Number, Ident, String, Sym } kind = End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string src);
    const Token& peek(std::size_t ahead = 0);
    Token next();
    bool accept_sym(const std::string& s);
    void expect_sym(const std::string& s);
    std::string expect_ident();
    const std::string& source() const { return src_; }

private:
    Token scan();
    std::string src_;
    std::size_t at_ = 0;
    std::vector<Token> buf_;
};

// Recursive-descent reader for the expression grammar. Unknown plain
// identifiers are declared on first use; formal symbols need their
// function declared first.
RatExpr parse_expression(Lexer& lx);

// Consumes `function f(args) [real];`, `var a [conj b];` if present.
bool parse_declaration(Lexer& lx);

// Declarations followed by ';'-separated expressions.
std::vector<RatExpr> parse_program(const std::string& text);
// Exactly one expression, optionally preceded by declarations.
RatExpr parse(const std::string& text);

} // namespace crjet

#endif
