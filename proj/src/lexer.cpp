#include "hyperpoly/lexer.hpp"

#include <cctype>

namespace hyperpoly {

namespace {

struct Cursor {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    Loc loc() const { return {line, col}; }
};

void skip_comment(Cursor& cur) {
    Loc start = cur.loc();
    cur.advance();  // (
    cur.advance();  // *
    int depth = 1;
    while (depth > 0) {
        if (cur.done()) throw ParseError("unterminated comment", start);
        if (cur.peek() == '(' && cur.peek(1) == '*') {
            cur.advance();
            cur.advance();
            ++depth;
        } else if (cur.peek() == '*' && cur.peek(1) == ')') {
            cur.advance();
            cur.advance();
            --depth;
        } else {
            cur.advance();
        }
    }
}

}  // namespace

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    Cursor cur{src};
    auto push = [&](TokenKind k, std::string text, Loc loc) {
        out.push_back(Token{k, std::move(text), Rational(), loc});
    };
    while (!cur.done()) {
        char c = cur.peek();
        Loc loc = cur.loc();
        if (std::isspace(static_cast<unsigned char>(c))) {
            cur.advance();
            continue;
        }
        if (c == '(' && cur.peek(1) == '*') {
            skip_comment(cur);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            bool saw_dot = false;
            while (!cur.done() &&
                   (std::isdigit(static_cast<unsigned char>(cur.peek())) ||
                    (cur.peek() == '.' && !saw_dot &&
                     std::isdigit(static_cast<unsigned char>(cur.peek(1)))))) {
                if (cur.peek() == '.') saw_dot = true;
                num += cur.advance();
            }
            Token t{TokenKind::NUMBER, num, Rational::parse(num), loc};
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
                                   cur.peek() == '_' || cur.peek() == '\''))
                id += cur.advance();
            TokenKind k = TokenKind::IDENT;
            if (id == "dt") k = TokenKind::DT;
            else if (id == "skip") k = TokenKind::KW_SKIP;
            else if (id == "if") k = TokenKind::KW_IF;
            else if (id == "then") k = TokenKind::KW_THEN;
            else if (id == "else") k = TokenKind::KW_ELSE;
            else if (id == "while") k = TokenKind::KW_WHILE;
            else if (id == "do") k = TokenKind::KW_DO;
            else if (id == "true") k = TokenKind::KW_TRUE;
            else if (id == "false") k = TokenKind::KW_FALSE;
            push(k, id, loc);
            continue;
        }
        cur.advance();
        switch (c) {
            case ':':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenKind::ASSIGN, ":=", loc);
                } else {
                    throw ParseError("expected ':='", loc);
                }
                break;
            case '+': push(TokenKind::PLUS, "+", loc); break;
            case '-': push(TokenKind::MINUS, "-", loc); break;
            case '*': push(TokenKind::STAR, "*", loc); break;
            case '/': push(TokenKind::SLASH, "/", loc); break;
            case '<':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenKind::LE, "<=", loc);
                } else {
                    push(TokenKind::LT, "<", loc);
                }
                break;
            case '>':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenKind::GE, ">=", loc);
                } else {
                    push(TokenKind::GT, ">", loc);
                }
                break;
            case '=': push(TokenKind::EQ, "=", loc); break;
            case '!':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenKind::NE, "!=", loc);
                } else {
                    push(TokenKind::BANG, "!", loc);
                }
                break;
            case '&':
                if (cur.peek() == '&') {
                    cur.advance();
                    push(TokenKind::AND_AND, "&&", loc);
                } else {
                    throw ParseError("expected '&&'", loc);
                }
                break;
            case '|':
                if (cur.peek() == '|') {
                    cur.advance();
                    push(TokenKind::OR_OR, "||", loc);
                } else {
                    throw ParseError("expected '||'", loc);
                }
                break;
            case '(': push(TokenKind::LPAREN, "(", loc); break;
            case ')': push(TokenKind::RPAREN, ")", loc); break;
            case '{': push(TokenKind::LBRACE, "{", loc); break;
            case '}': push(TokenKind::RBRACE, "}", loc); break;
            case ';': push(TokenKind::SEMI, ";", loc); break;
            default:
                throw ParseError(std::string("unknown character '") + c + "'", loc);
        }
    }
    push(TokenKind::END, "", cur.loc());
    return out;
}

std::map<std::string, std::set<Rational>> parse_modes_text(const std::string& text) {
    std::map<std::string, std::set<Rational>> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        std::string name;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
            name += text[i++];
        skip_ws();
        if (name.empty() || i >= text.size() || text[i] != ':')
            throw std::invalid_argument("bad mode declaration: " + text);
        ++i;  // :
        skip_ws();
        if (i >= text.size() || text[i] != '{')
            throw std::invalid_argument("bad mode declaration: " + text);
        ++i;  // {
        std::set<Rational> values;
        std::string cur;
        while (i < text.size() && text[i] != '}') {
            if (text[i] == ',') {
                values.insert(Rational::parse(cur));
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                cur += text[i];
            }
            ++i;
        }
        if (i >= text.size()) throw std::invalid_argument("bad mode declaration: " + text);
        if (!cur.empty()) values.insert(Rational::parse(cur));
        if (values.empty()) throw std::invalid_argument("empty mode value set: " + name);
        ++i;  // }
        out[name] = std::move(values);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    return out;
}

std::map<std::string, std::set<Rational>> modes_pragma(const std::string& src) {
    auto eol = src.find('\n');
    std::string first = src.substr(0, eol == std::string::npos ? src.size() : eol);
    auto open = first.find("(*@");
    if (open == std::string::npos) return {};
    auto close = first.find("*)", open);
    if (close == std::string::npos)
        throw ParseError("unterminated pragma", Loc{1, static_cast<int>(open) + 1});
    std::string inner = first.substr(open + 3, close - open - 3);
    auto kw = inner.find("modes");
    if (kw == std::string::npos) return {};
    return parse_modes_text(inner.substr(kw + 5));
}

}  // namespace hyperpoly
