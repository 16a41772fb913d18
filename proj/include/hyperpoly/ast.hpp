#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

struct Loc {
    int line = 0;
    int col = 0;
    std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct AExp;
struct BExp;
struct Cmd;
using AExpPtr = std::shared_ptr<const AExp>;
using BExpPtr = std::shared_ptr<const BExp>;
using CmdPtr = std::shared_ptr<const Cmd>;

// Arithmetic expressions: x | r | a1 op a2 | dt.
struct AExp {
    enum class Kind { VAR, LIT, DT, BINOP };
    Kind kind;
    Loc loc;
    std::string var;   // VAR
    Rational lit;      // LIT
    char op = 0;       // BINOP: + - * /
    AExpPtr lhs, rhs;  // BINOP
};

AExpPtr aexp_var(std::string name, Loc loc = {});
AExpPtr aexp_lit(Rational r, Loc loc = {});
AExpPtr aexp_dt(Loc loc = {});
AExpPtr aexp_bin(char op, AExpPtr lhs, AExpPtr rhs, Loc loc = {});

// Boolean expressions, core grammar only: surface comparisons and
// disjunctions are desugared into this form at parse time.
struct BExp {
    enum class Kind { TRUE, FALSE, AND, NOT, LT };
    Kind kind;
    Loc loc;
    BExpPtr lhs, rhs;  // AND both, NOT lhs
    AExpPtr a1, a2;    // LT
};

BExpPtr bexp_true(Loc loc = {});
BExpPtr bexp_false(Loc loc = {});
BExpPtr bexp_and(BExpPtr lhs, BExpPtr rhs, Loc loc = {});
BExpPtr bexp_not(BExpPtr b, Loc loc = {});
BExpPtr bexp_lt(AExpPtr a1, AExpPtr a2, Loc loc = {});

struct Cmd {
    enum class Kind { SKIP, ASSIGN, SEQ, IF, WHILE };
    Kind kind;
    Loc loc;
    std::string var;  // ASSIGN target
    AExpPtr rhs;      // ASSIGN
    CmdPtr c1, c2;    // SEQ both; IF branches; WHILE body in c1
    BExpPtr guard;    // IF, WHILE
};

CmdPtr cmd_skip(Loc loc = {});
CmdPtr cmd_assign(std::string var, AExpPtr rhs, Loc loc = {});
CmdPtr cmd_seq(CmdPtr c1, CmdPtr c2, Loc loc = {});
CmdPtr cmd_if(BExpPtr guard, CmdPtr then_c, CmdPtr else_c, Loc loc = {});
CmdPtr cmd_while(BExpPtr guard, CmdPtr body, Loc loc = {});

struct Program {
    CmdPtr body;
    // Declared finite-valued discrete variables and their value sets.
    std::map<std::string, std::set<Rational>> mode_vars;
    // Remaining variables, ordered by first occurrence.
    std::vector<std::string> numeric_vars;
    std::vector<std::string> warnings;

    bool is_mode_var(const std::string& v) const { return mode_vars.count(v) > 0; }
};

std::string to_string(const AExpPtr& a);
std::string to_string(const BExpPtr& b);
std::string to_string(const CmdPtr& c, int indent = 0);

bool ast_equal(const AExpPtr& a, const AExpPtr& b);
bool ast_equal(const BExpPtr& a, const BExpPtr& b);
bool ast_equal(const CmdPtr& a, const CmdPtr& b);

// Pre-order numbering of While nodes; the analyzer and the simulator
// identify loops by these indices.
std::map<const Cmd*, size_t> index_loops(const CmdPtr& body);

}  // namespace hyperpoly
