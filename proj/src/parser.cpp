#include "hyperpoly/parser.hpp"

#include <set>

namespace hyperpoly {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    CmdPtr command() {
        CmdPtr c = statement();
        while (accept(TokenKind::SEMI)) {
            if (peek() == TokenKind::RBRACE || peek() == TokenKind::END) break;  // trailing ;
            CmdPtr rhs = statement();
            c = cmd_seq(c, rhs, c->loc);
        }
        return c;
    }

    void expect_end() { expect(TokenKind::END, "end of input"); }

private:
    const std::vector<Token>& toks_;
    size_t pos_ = 0;

    TokenKind peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i].kind : TokenKind::END;
    }
    const Token& cur() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
    const Token& take() { return toks_[pos_++]; }
    bool accept(TokenKind k) {
        if (peek() != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(TokenKind k, const std::string& what) {
        if (peek() != k) throw ParseError("expected " + what + ", got '" + cur().text + "'",
                                          cur().loc);
        return take();
    }

    CmdPtr statement() {
        Loc loc = cur().loc;
        switch (peek()) {
            case TokenKind::KW_SKIP:
                take();
                return cmd_skip(loc);
            case TokenKind::LBRACE: {
                take();
                CmdPtr c = command();
                expect(TokenKind::RBRACE, "'}'");
                return c;
            }
            case TokenKind::KW_IF: {
                take();
                BExpPtr g = bexp();
                expect(TokenKind::KW_THEN, "'then'");
                CmdPtr then_c = statement();
                CmdPtr else_c =
                    accept(TokenKind::KW_ELSE) ? statement() : cmd_skip(loc);
                return cmd_if(g, then_c, else_c, loc);
            }
            case TokenKind::KW_WHILE: {
                take();
                BExpPtr g = bexp();
                expect(TokenKind::KW_DO, "'do'");
                CmdPtr body = statement();
                return cmd_while(g, body, loc);
            }
            case TokenKind::DT:
                throw ParseError("cannot assign to dt", loc);
            case TokenKind::IDENT: {
                std::string var = take().text;
                expect(TokenKind::ASSIGN, "':='");
                AExpPtr rhs = aexp();
                return cmd_assign(var, rhs, loc);
            }
            default:
                throw ParseError("expected statement, got '" + cur().text + "'", loc);
        }
    }

    // ---- boolean expressions (surface ops desugared to the core) ----

    BExpPtr bexp() { return b_or(); }

    BExpPtr b_or() {
        BExpPtr b = b_and();
        while (peek() == TokenKind::OR_OR) {
            Loc loc = take().loc;
            BExpPtr rhs = b_and();
            // b1 || b2  ==>  !(!b1 && !b2)
            b = bexp_not(bexp_and(bexp_not(b, loc), bexp_not(rhs, loc), loc), loc);
        }
        return b;
    }

    BExpPtr b_and() {
        BExpPtr b = b_atom();
        while (peek() == TokenKind::AND_AND) {
            Loc loc = take().loc;
            b = bexp_and(b, b_atom(), loc);
        }
        return b;
    }

    BExpPtr b_atom() {
        Loc loc = cur().loc;
        switch (peek()) {
            case TokenKind::KW_TRUE: take(); return bexp_true(loc);
            case TokenKind::KW_FALSE: take(); return bexp_false(loc);
            case TokenKind::BANG: take(); return bexp_not(b_atom(), loc);
            case TokenKind::LPAREN: {
                // Either a parenthesized boolean or the start of an
                // arithmetic comparison; try the boolean reading first.
                size_t save = pos_;
                take();
                try {
                    BExpPtr b = b_or();
                    expect(TokenKind::RPAREN, "')'");
                    return b;
                } catch (const ParseError&) {
                    pos_ = save;
                    return comparison();
                }
            }
            default:
                return comparison();
        }
    }

    BExpPtr comparison() {
        Loc loc = cur().loc;
        AExpPtr a1 = aexp();
        TokenKind rel = peek();
        switch (rel) {
            case TokenKind::LT:
            case TokenKind::LE:
            case TokenKind::GT:
            case TokenKind::GE:
            case TokenKind::EQ:
            case TokenKind::NE: break;
            default:
                throw ParseError("expected comparison operator, got '" + cur().text + "'",
                                 cur().loc);
        }
        take();
        AExpPtr a2 = aexp();
        switch (rel) {
            case TokenKind::LT: return bexp_lt(a1, a2, loc);
            case TokenKind::LE: return bexp_not(bexp_lt(a2, a1, loc), loc);
            case TokenKind::GT: return bexp_lt(a2, a1, loc);
            case TokenKind::GE: return bexp_not(bexp_lt(a1, a2, loc), loc);
            case TokenKind::EQ:
                return bexp_and(bexp_not(bexp_lt(a1, a2, loc), loc),
                                bexp_not(bexp_lt(a2, a1, loc), loc), loc);
            default:  // NE
                return bexp_not(bexp_and(bexp_not(bexp_lt(a1, a2, loc), loc),
                                         bexp_not(bexp_lt(a2, a1, loc), loc), loc),
                                loc);
        }
    }

    // ---- arithmetic expressions ----

    AExpPtr aexp() {
        AExpPtr a = term();
        while (peek() == TokenKind::PLUS || peek() == TokenKind::MINUS) {
            char op = peek() == TokenKind::PLUS ? '+' : '-';
            Loc loc = take().loc;
            a = aexp_bin(op, a, term(), loc);
        }
        return a;
    }

    AExpPtr term() {
        AExpPtr a = factor();
        while (peek() == TokenKind::STAR || peek() == TokenKind::SLASH) {
            char op = peek() == TokenKind::STAR ? '*' : '/';
            Loc loc = take().loc;
            a = aexp_bin(op, a, factor(), loc);
        }
        return a;
    }

    AExpPtr factor() {
        Loc loc = cur().loc;
        switch (peek()) {
            case TokenKind::NUMBER: return aexp_lit(take().number, loc);
            case TokenKind::DT: take(); return aexp_dt(loc);
            case TokenKind::IDENT: return aexp_var(take().text, loc);
            case TokenKind::MINUS: {
                take();
                AExpPtr f = factor();
                if (f->kind == AExp::Kind::LIT) return aexp_lit(-f->lit, loc);
                return aexp_bin('-', aexp_lit(Rational(0), loc), f, loc);
            }
            case TokenKind::LPAREN: {
                take();
                AExpPtr a = aexp();
                expect(TokenKind::RPAREN, "')'");
                return a;
            }
            default:
                throw ParseError("expected expression, got '" + cur().text + "'", loc);
        }
    }
};

void collect_vars(const AExpPtr& a, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
    switch (a->kind) {
        case AExp::Kind::VAR:
            if (seen.insert(a->var).second) order.push_back(a->var);
            break;
        case AExp::Kind::BINOP:
            collect_vars(a->lhs, order, seen);
            collect_vars(a->rhs, order, seen);
            break;
        default: break;
    }
}

void collect_vars(const BExpPtr& b, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
    switch (b->kind) {
        case BExp::Kind::AND:
            collect_vars(b->lhs, order, seen);
            collect_vars(b->rhs, order, seen);
            break;
        case BExp::Kind::NOT: collect_vars(b->lhs, order, seen); break;
        case BExp::Kind::LT:
            collect_vars(b->a1, order, seen);
            collect_vars(b->a2, order, seen);
            break;
        default: break;
    }
}

void collect_vars(const CmdPtr& c, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
    switch (c->kind) {
        case Cmd::Kind::SKIP: break;
        case Cmd::Kind::ASSIGN:
            if (seen.insert(c->var).second) order.push_back(c->var);
            collect_vars(c->rhs, order, seen);
            break;
        case Cmd::Kind::SEQ:
            collect_vars(c->c1, order, seen);
            collect_vars(c->c2, order, seen);
            break;
        case Cmd::Kind::IF:
            collect_vars(c->guard, order, seen);
            collect_vars(c->c1, order, seen);
            collect_vars(c->c2, order, seen);
            break;
        case Cmd::Kind::WHILE:
            collect_vars(c->guard, order, seen);
            collect_vars(c->c1, order, seen);
            break;
    }
}

void reads_of(const AExpPtr& a, std::set<std::string>& out) {
    if (a->kind == AExp::Kind::VAR) out.insert(a->var);
    if (a->kind == AExp::Kind::BINOP) {
        reads_of(a->lhs, out);
        reads_of(a->rhs, out);
    }
}

void reads_of(const BExpPtr& b, std::set<std::string>& out) {
    if (b->kind == BExp::Kind::AND) {
        reads_of(b->lhs, out);
        reads_of(b->rhs, out);
    }
    if (b->kind == BExp::Kind::NOT) reads_of(b->lhs, out);
    if (b->kind == BExp::Kind::LT) {
        reads_of(b->a1, out);
        reads_of(b->a2, out);
    }
}

// Assigned-before-read check (best effort; warnings only).
void check_initialized(const CmdPtr& c, std::set<std::string>& assigned,
                       std::vector<std::string>& warnings) {
    auto warn_reads = [&](const std::set<std::string>& reads, Loc loc) {
        for (const auto& v : reads)
            if (!assigned.count(v))
                warnings.push_back("variable '" + v + "' may be read before assignment at " +
                                   loc.str());
    };
    switch (c->kind) {
        case Cmd::Kind::SKIP: break;
        case Cmd::Kind::ASSIGN: {
            std::set<std::string> reads;
            reads_of(c->rhs, reads);
            warn_reads(reads, c->loc);
            assigned.insert(c->var);
            break;
        }
        case Cmd::Kind::SEQ:
            check_initialized(c->c1, assigned, warnings);
            check_initialized(c->c2, assigned, warnings);
            break;
        case Cmd::Kind::IF: {
            std::set<std::string> reads;
            reads_of(c->guard, reads);
            warn_reads(reads, c->loc);
            std::set<std::string> left = assigned, right = assigned;
            check_initialized(c->c1, left, warnings);
            check_initialized(c->c2, right, warnings);
            for (const auto& v : left)
                if (right.count(v)) assigned.insert(v);
            break;
        }
        case Cmd::Kind::WHILE: {
            std::set<std::string> reads;
            reads_of(c->guard, reads);
            warn_reads(reads, c->loc);
            std::set<std::string> inner = assigned;
            check_initialized(c->c1, inner, warnings);
            break;
        }
    }
}

}  // namespace

CmdPtr parse_command(const std::vector<Token>& tokens) {
    Parser p(tokens);
    CmdPtr c = p.command();
    p.expect_end();
    return c;
}

Program parse_program(const std::string& src,
                      const std::optional<std::string>& modes_override) {
    Program prog;
    prog.mode_vars = modes_pragma(src);
    if (modes_override) {
        for (auto& [name, values] : parse_modes_text(*modes_override))
            prog.mode_vars[name] = values;
    }
    prog.body = parse_command(tokenize(src));

    std::vector<std::string> order;
    std::set<std::string> seen;
    collect_vars(prog.body, order, seen);
    for (const auto& v : order)
        if (!prog.mode_vars.count(v)) prog.numeric_vars.push_back(v);
    for (const auto& [mv, values] : prog.mode_vars) {
        if (!seen.count(mv))
            prog.warnings.push_back("declared mode variable '" + mv +
                                    "' does not occur in the program");
        (void)values;
    }

    std::set<std::string> assigned;
    check_initialized(prog.body, assigned, prog.warnings);
    return prog;
}

}  // namespace hyperpoly
