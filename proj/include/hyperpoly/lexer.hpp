#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpoly/ast.hpp"

namespace hyperpoly {

struct ParseError : std::runtime_error {
    Loc loc;
    ParseError(const std::string& msg, Loc l)
        : std::runtime_error(msg + " at " + l.str()), loc(l) {}
};

enum class TokenKind {
    IDENT, NUMBER, DT,
    ASSIGN,                  // :=
    PLUS, MINUS, STAR, SLASH,
    LT, LE, GT, GE, EQ, NE,  // < <= > >= = !=
    AND_AND, OR_OR, BANG,    // && || !
    LPAREN, RPAREN, LBRACE, RBRACE, SEMI,
    KW_SKIP, KW_IF, KW_THEN, KW_ELSE, KW_WHILE, KW_DO, KW_TRUE, KW_FALSE,
    END
};

struct Token {
    TokenKind kind;
    std::string text;
    Rational number;  // NUMBER only
    Loc loc;
};

// Tokenizes While-dt source. Comments are (* ... *), nesting allowed;
// the (*@ ... *) pragma form is skipped here and read separately.
std::vector<Token> tokenize(const std::string& src);

// Reads a "(*@ modes p:{0,1}, s:{0,1} *)" pragma from the first line,
// or parses the same "p:{0,1},s:{0,1}" text given on the command line.
std::map<std::string, std::set<Rational>> parse_modes_text(const std::string& text);
std::map<std::string, std::set<Rational>> modes_pragma(const std::string& src);

}  // namespace hyperpoly
