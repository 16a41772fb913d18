#include "hyperpoly/ast.hpp"

#include <sstream>

namespace hyperpoly {

AExpPtr aexp_var(std::string name, Loc loc) {
    auto e = std::make_shared<AExp>();
    e->kind = AExp::Kind::VAR;
    e->var = std::move(name);
    e->loc = loc;
    return e;
}

AExpPtr aexp_lit(Rational r, Loc loc) {
    auto e = std::make_shared<AExp>();
    e->kind = AExp::Kind::LIT;
    e->lit = std::move(r);
    e->loc = loc;
    return e;
}

AExpPtr aexp_dt(Loc loc) {
    auto e = std::make_shared<AExp>();
    e->kind = AExp::Kind::DT;
    e->loc = loc;
    return e;
}

AExpPtr aexp_bin(char op, AExpPtr lhs, AExpPtr rhs, Loc loc) {
    auto e = std::make_shared<AExp>();
    e->kind = AExp::Kind::BINOP;
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->loc = loc;
    return e;
}

BExpPtr bexp_true(Loc loc) {
    auto b = std::make_shared<BExp>();
    b->kind = BExp::Kind::TRUE;
    b->loc = loc;
    return b;
}

BExpPtr bexp_false(Loc loc) {
    auto b = std::make_shared<BExp>();
    b->kind = BExp::Kind::FALSE;
    b->loc = loc;
    return b;
}

BExpPtr bexp_and(BExpPtr lhs, BExpPtr rhs, Loc loc) {
    auto b = std::make_shared<BExp>();
    b->kind = BExp::Kind::AND;
    b->lhs = std::move(lhs);
    b->rhs = std::move(rhs);
    b->loc = loc;
    return b;
}

BExpPtr bexp_not(BExpPtr inner, Loc loc) {
    auto b = std::make_shared<BExp>();
    b->kind = BExp::Kind::NOT;
    b->lhs = std::move(inner);
    b->loc = loc;
    return b;
}

BExpPtr bexp_lt(AExpPtr a1, AExpPtr a2, Loc loc) {
    auto b = std::make_shared<BExp>();
    b->kind = BExp::Kind::LT;
    b->a1 = std::move(a1);
    b->a2 = std::move(a2);
    b->loc = loc;
    return b;
}

CmdPtr cmd_skip(Loc loc) {
    auto c = std::make_shared<Cmd>();
    c->kind = Cmd::Kind::SKIP;
    c->loc = loc;
    return c;
}

CmdPtr cmd_assign(std::string var, AExpPtr rhs, Loc loc) {
    auto c = std::make_shared<Cmd>();
    c->kind = Cmd::Kind::ASSIGN;
    c->var = std::move(var);
    c->rhs = std::move(rhs);
    c->loc = loc;
    return c;
}

CmdPtr cmd_seq(CmdPtr c1, CmdPtr c2, Loc loc) {
    auto c = std::make_shared<Cmd>();
    c->kind = Cmd::Kind::SEQ;
    c->c1 = std::move(c1);
    c->c2 = std::move(c2);
    c->loc = loc;
    return c;
}

CmdPtr cmd_if(BExpPtr guard, CmdPtr then_c, CmdPtr else_c, Loc loc) {
    auto c = std::make_shared<Cmd>();
    c->kind = Cmd::Kind::IF;
    c->guard = std::move(guard);
    c->c1 = std::move(then_c);
    c->c2 = std::move(else_c);
    c->loc = loc;
    return c;
}

CmdPtr cmd_while(BExpPtr guard, CmdPtr body, Loc loc) {
    auto c = std::make_shared<Cmd>();
    c->kind = Cmd::Kind::WHILE;
    c->guard = std::move(guard);
    c->c1 = std::move(body);
    c->loc = loc;
    return c;
}

std::string to_string(const AExpPtr& a) {
    switch (a->kind) {
        case AExp::Kind::VAR: return a->var;
        case AExp::Kind::LIT: return a->lit.str();
        case AExp::Kind::DT: return "dt";
        case AExp::Kind::BINOP:
            return "(" + to_string(a->lhs) + " " + a->op + " " + to_string(a->rhs) + ")";
    }
    return "?";
}

std::string to_string(const BExpPtr& b) {
    switch (b->kind) {
        case BExp::Kind::TRUE: return "true";
        case BExp::Kind::FALSE: return "false";
        case BExp::Kind::AND: return "(" + to_string(b->lhs) + " && " + to_string(b->rhs) + ")";
        case BExp::Kind::NOT: return "!" + to_string(b->lhs);
        case BExp::Kind::LT: return "(" + to_string(b->a1) + " < " + to_string(b->a2) + ")";
    }
    return "?";
}

std::string to_string(const CmdPtr& c, int indent) {
    std::string pad(indent * 2, ' ');
    switch (c->kind) {
        case Cmd::Kind::SKIP: return pad + "skip";
        case Cmd::Kind::ASSIGN: return pad + c->var + " := " + to_string(c->rhs);
        case Cmd::Kind::SEQ:
            return to_string(c->c1, indent) + ";\n" + to_string(c->c2, indent);
        case Cmd::Kind::IF:
            return pad + "if " + to_string(c->guard) + " then {\n" + to_string(c->c1, indent + 1) +
                   "\n" + pad + "} else {\n" + to_string(c->c2, indent + 1) + "\n" + pad + "}";
        case Cmd::Kind::WHILE:
            return pad + "while " + to_string(c->guard) + " do {\n" + to_string(c->c1, indent + 1) +
                   "\n" + pad + "}";
    }
    return "?";
}

bool ast_equal(const AExpPtr& a, const AExpPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case AExp::Kind::VAR: return a->var == b->var;
        case AExp::Kind::LIT: return a->lit == b->lit;
        case AExp::Kind::DT: return true;
        case AExp::Kind::BINOP:
            return a->op == b->op && ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
    }
    return false;
}

bool ast_equal(const BExpPtr& a, const BExpPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case BExp::Kind::TRUE:
        case BExp::Kind::FALSE: return true;
        case BExp::Kind::AND:
            return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
        case BExp::Kind::NOT: return ast_equal(a->lhs, b->lhs);
        case BExp::Kind::LT: return ast_equal(a->a1, b->a1) && ast_equal(a->a2, b->a2);
    }
    return false;
}

bool ast_equal(const CmdPtr& a, const CmdPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Cmd::Kind::SKIP: return true;
        case Cmd::Kind::ASSIGN: return a->var == b->var && ast_equal(a->rhs, b->rhs);
        case Cmd::Kind::SEQ: return ast_equal(a->c1, b->c1) && ast_equal(a->c2, b->c2);
        case Cmd::Kind::IF:
            return ast_equal(a->guard, b->guard) && ast_equal(a->c1, b->c1) &&
                   ast_equal(a->c2, b->c2);
        case Cmd::Kind::WHILE:
            return ast_equal(a->guard, b->guard) && ast_equal(a->c1, b->c1);
    }
    return false;
}

namespace {
void index_loops_rec(const CmdPtr& c, std::map<const Cmd*, size_t>& out) {
    switch (c->kind) {
        case Cmd::Kind::SKIP:
        case Cmd::Kind::ASSIGN: return;
        case Cmd::Kind::SEQ:
            index_loops_rec(c->c1, out);
            index_loops_rec(c->c2, out);
            return;
        case Cmd::Kind::IF:
            index_loops_rec(c->c1, out);
            index_loops_rec(c->c2, out);
            return;
        case Cmd::Kind::WHILE:
            out.emplace(c.get(), out.size());
            index_loops_rec(c->c1, out);
            return;
    }
}
}  // namespace

std::map<const Cmd*, size_t> index_loops(const CmdPtr& body) {
    std::map<const Cmd*, size_t> out;
    index_loops_rec(body, out);
    return out;
}

}  // namespace hyperpoly
