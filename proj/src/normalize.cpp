#include "hyperpoly/normalize.hpp"

#include <set>

namespace hyperpoly {

BExpPtr nnf(const BExpPtr& b) {
    switch (b->kind) {
        case BExp::Kind::TRUE:
        case BExp::Kind::FALSE:
        case BExp::Kind::LT: return b;
        case BExp::Kind::AND: return bexp_and(nnf(b->lhs), nnf(b->rhs), b->loc);
        case BExp::Kind::NOT: return negate_nnf(b->lhs);
    }
    return b;
}

BExpPtr negate_nnf(const BExpPtr& b) {
    switch (b->kind) {
        case BExp::Kind::TRUE: return bexp_false(b->loc);
        case BExp::Kind::FALSE: return bexp_true(b->loc);
        case BExp::Kind::LT: return bexp_not(b, b->loc);
        case BExp::Kind::NOT: return nnf(b->lhs);
        case BExp::Kind::AND:
            // The disjunction of the negated branches, kept as a marked
            // Not(And(..)) over normalized children.
            return bexp_not(bexp_and(nnf(b->lhs), nnf(b->rhs), b->loc), b->loc);
    }
    return b;
}

namespace {

CmdPtr normalize_cmd(const CmdPtr& c) {
    switch (c->kind) {
        case Cmd::Kind::SKIP:
        case Cmd::Kind::ASSIGN: return c;
        case Cmd::Kind::SEQ:
            return cmd_seq(normalize_cmd(c->c1), normalize_cmd(c->c2), c->loc);
        case Cmd::Kind::IF:
            return cmd_if(nnf(c->guard), normalize_cmd(c->c1), normalize_cmd(c->c2), c->loc);
        case Cmd::Kind::WHILE:
            return cmd_while(nnf(c->guard), normalize_cmd(c->c1), c->loc);
    }
    return c;
}

void collect_from_bexp(const BExpPtr& b, const Program& p, std::set<Constraint>& out) {
    switch (b->kind) {
        case BExp::Kind::TRUE:
        case BExp::Kind::FALSE: return;
        case BExp::Kind::AND:
            collect_from_bexp(b->lhs, p, out);
            collect_from_bexp(b->rhs, p, out);
            return;
        case BExp::Kind::NOT:
            collect_from_bexp(b->lhs, p, out);
            return;
        case BExp::Kind::LT: {
            AffineForm lhs = to_affine(b->a1, p.mode_vars, nullptr);
            AffineForm rhs = to_affine(b->a2, p.mode_vars, nullptr);
            if (lhs.kind != AffineKind::AFFINE || rhs.kind != AffineKind::AFFINE) return;
            LinearExpr d = rhs.expr - lhs.expr;
            if (d.is_constant()) return;
            out.insert(Constraint(d, Relation::GEQ0));   // a1 <= a2, relaxed
            out.insert(Constraint(-d, Relation::GEQ0));  // the reversal a1 >= a2
            return;
        }
    }
}

void collect_from_cmd(const CmdPtr& c, const Program& p, std::set<Constraint>& out) {
    switch (c->kind) {
        case Cmd::Kind::SKIP:
        case Cmd::Kind::ASSIGN: return;
        case Cmd::Kind::SEQ:
            collect_from_cmd(c->c1, p, out);
            collect_from_cmd(c->c2, p, out);
            return;
        case Cmd::Kind::IF:
            collect_from_bexp(c->guard, p, out);
            collect_from_cmd(c->c1, p, out);
            collect_from_cmd(c->c2, p, out);
            return;
        case Cmd::Kind::WHILE:
            collect_from_bexp(c->guard, p, out);
            collect_from_cmd(c->c1, p, out);
            return;
    }
}

}  // namespace

Program normalize(const Program& p) {
    Program out = p;
    out.body = normalize_cmd(p.body);
    return out;
}

std::vector<Constraint> collect_m_set(const Program& p) {
    std::set<Constraint> out;
    collect_from_cmd(p.body, p, out);
    return {out.begin(), out.end()};
}

AffineForm to_affine(const AExpPtr& a,
                     const std::map<std::string, std::set<Rational>>& mode_vars,
                     const std::map<std::string, Rational>* mode_values) {
    switch (a->kind) {
        case AExp::Kind::VAR: {
            if (mode_vars.count(a->var)) {
                if (!mode_values) return {AffineKind::MODE_DEPENDENT, {}};
                auto it = mode_values->find(a->var);
                if (it == mode_values->end())
                    throw AnalysisError("mode variable '" + a->var + "' has no value", a->loc);
                return {AffineKind::AFFINE, LinearExpr{DtScalar(it->second)}};
            }
            return {AffineKind::AFFINE, LinearExpr::variable(a->var)};
        }
        case AExp::Kind::LIT: return {AffineKind::AFFINE, LinearExpr{DtScalar(a->lit)}};
        case AExp::Kind::DT: return {AffineKind::AFFINE, LinearExpr{DtScalar::dt()}};
        case AExp::Kind::BINOP: {
            AffineForm lhs = to_affine(a->lhs, mode_vars, mode_values);
            AffineForm rhs = to_affine(a->rhs, mode_vars, mode_values);
            // A constant zero divisor is an error regardless of the
            // left operand.
            if (a->op == '/' && rhs.kind == AffineKind::AFFINE && rhs.expr.is_constant() &&
                rhs.expr.constant().is_zero())
                throw AnalysisError("division by zero", a->loc);
            if (lhs.kind == AffineKind::MODE_DEPENDENT || rhs.kind == AffineKind::MODE_DEPENDENT)
                return {AffineKind::MODE_DEPENDENT, {}};
            if (lhs.kind == AffineKind::NONLINEAR || rhs.kind == AffineKind::NONLINEAR)
                return {AffineKind::NONLINEAR, {}};
            switch (a->op) {
                case '+': return {AffineKind::AFFINE, lhs.expr + rhs.expr};
                case '-': return {AffineKind::AFFINE, lhs.expr - rhs.expr};
                case '*':
                    if (rhs.expr.is_constant())
                        return {AffineKind::AFFINE, lhs.expr.scaled(rhs.expr.constant())};
                    if (lhs.expr.is_constant())
                        return {AffineKind::AFFINE, rhs.expr.scaled(lhs.expr.constant())};
                    return {AffineKind::NONLINEAR, {}};
                case '/':
                    if (rhs.expr.is_constant())
                        return {AffineKind::AFFINE,
                                lhs.expr.scaled(rhs.expr.constant().inverse())};
                    return {AffineKind::NONLINEAR, {}};
            }
            return {AffineKind::NONLINEAR, {}};
        }
    }
    return {AffineKind::NONLINEAR, {}};
}

}  // namespace hyperpoly
