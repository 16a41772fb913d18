#include "hyperpoly/analyzer.hpp"

#include <set>

namespace hyperpoly {

namespace {

AExpPtr subst_dt_aexp(const AExpPtr& a, const Rational& r) {
    switch (a->kind) {
        case AExp::Kind::DT: return aexp_lit(r, a->loc);
        case AExp::Kind::BINOP:
            return aexp_bin(a->op, subst_dt_aexp(a->lhs, r), subst_dt_aexp(a->rhs, r), a->loc);
        default: return a;
    }
}

BExpPtr subst_dt_bexp(const BExpPtr& b, const Rational& r) {
    switch (b->kind) {
        case BExp::Kind::AND:
            return bexp_and(subst_dt_bexp(b->lhs, r), subst_dt_bexp(b->rhs, r), b->loc);
        case BExp::Kind::NOT: return bexp_not(subst_dt_bexp(b->lhs, r), b->loc);
        case BExp::Kind::LT:
            return bexp_lt(subst_dt_aexp(b->a1, r), subst_dt_aexp(b->a2, r), b->loc);
        default: return b;
    }
}

CmdPtr subst_dt_cmd(const CmdPtr& c, const Rational& r) {
    switch (c->kind) {
        case Cmd::Kind::SKIP: return c;
        case Cmd::Kind::ASSIGN: return cmd_assign(c->var, subst_dt_aexp(c->rhs, r), c->loc);
        case Cmd::Kind::SEQ:
            return cmd_seq(subst_dt_cmd(c->c1, r), subst_dt_cmd(c->c2, r), c->loc);
        case Cmd::Kind::IF:
            return cmd_if(subst_dt_bexp(c->guard, r), subst_dt_cmd(c->c1, r),
                          subst_dt_cmd(c->c2, r), c->loc);
        case Cmd::Kind::WHILE:
            return cmd_while(subst_dt_bexp(c->guard, r), subst_dt_cmd(c->c1, r), c->loc);
    }
    return c;
}

}  // namespace

Program substitute_dt(const Program& p, const Rational& r) {
    if (!(Rational(0) < r))
        throw std::invalid_argument("dt substitution must be positive");
    Program out = p;
    out.body = subst_dt_cmd(p.body, r);
    return out;
}

Analyzer::Analyzer(Program normalized_program, AnalysisConfig cfg)
    : prog_(std::move(normalized_program)), cfg_(std::move(cfg)) {
    wcfg_.kind = cfg_.widening;
    wcfg_.delay = cfg_.delay;
    if (cfg_.widening == WideningKind::UPTO_M)
        wcfg_.m_set = cfg_.m_override ? *cfg_.m_override : collect_m_set(prog_);
    loop_ids_ = index_loops(prog_.body);
}

AbstractState Analyzer::initial_state() const {
    // Every mode valuation paired with the universe over the numeric
    // variables; the pre-loop prefix narrows this down.
    std::vector<ModeValuation> valuations{{}};
    for (const auto& [name, values] : prog_.mode_vars) {
        std::vector<ModeValuation> next;
        for (const auto& mv : valuations) {
            for (const auto& v : values) {
                ModeValuation ext = mv;
                ext.emplace(name, v);
                next.push_back(std::move(ext));
            }
        }
        valuations = std::move(next);
    }
    AbstractState st;
    for (auto& mv : valuations) st.set_part(mv, Polyhedron::universe(prog_.numeric_vars));
    return st;
}

AbstractState Analyzer::meet_guard(const AbstractState& state, const BExpPtr& b) {
    switch (b->kind) {
        case BExp::Kind::TRUE: return state;
        case BExp::Kind::FALSE: return {};
        case BExp::Kind::AND: return meet_guard(meet_guard(state, b->lhs), b->rhs);
        case BExp::Kind::LT:
        case BExp::Kind::NOT: break;
    }

    if (b->kind == BExp::Kind::NOT && b->lhs->kind == BExp::Kind::AND) {
        // Marked disjunction: split, transfer both sides, join.
        return join_states(meet_guard(state, negate_nnf(b->lhs->lhs)),
                           meet_guard(state, negate_nnf(b->lhs->rhs)));
    }
    if (b->kind == BExp::Kind::NOT && b->lhs->kind != BExp::Kind::LT) {
        return meet_guard(state, nnf(b));
    }

    // A literal: a1 < a2, or its negation a1 >= a2.
    bool negated = b->kind == BExp::Kind::NOT;
    const BExpPtr& lt = negated ? b->lhs : b;

    AbstractState out;
    for (const auto& [mv, poly] : state.parts()) {
        AffineForm lhs = to_affine(lt->a1, prog_.mode_vars, &mv);
        AffineForm rhs = to_affine(lt->a2, prog_.mode_vars, &mv);
        if (lhs.kind != AffineKind::AFFINE || rhs.kind != AffineKind::AFFINE) {
            out.join_part(mv, poly);  // not expressible; keep everything
            continue;
        }
        // d >= 0 encodes the closed relaxation of the tested literal.
        LinearExpr d = negated ? lhs.expr - rhs.expr : rhs.expr - lhs.expr;
        if (d.is_constant()) {
            // Decidable exactly; strictness preserved.
            int s = d.constant().sign();
            bool holds = negated ? s >= 0 : s > 0;
            if (holds) out.join_part(mv, poly);
            continue;
        }
        out.join_part(mv, meet(poly, Constraint(d, Relation::GEQ0)));
    }
    return out;
}

AbstractState Analyzer::transfer_assign(const AbstractState& state, const CmdPtr& c) {
    AbstractState out;
    if (prog_.is_mode_var(c->var)) {
        const auto& declared = prog_.mode_vars.at(c->var);
        for (const auto& [mv, poly] : state.parts()) {
            AffineForm f = to_affine(c->rhs, prog_.mode_vars, &mv);
            if (f.kind != AffineKind::AFFINE || !f.expr.is_constant() ||
                !f.expr.constant().is_rational())
                throw AnalysisError("mode update not finite", c->loc);
            Rational value = f.expr.constant().rational_value();
            if (!declared.count(value))
                throw AnalysisError("mode update not finite: '" + c->var + " := " +
                                        value.str() + "' is not a declared value",
                                    c->loc);
            ModeValuation target = mv;
            target[c->var] = value;
            out.join_part(target, poly);
        }
        return out;
    }
    for (const auto& [mv, poly] : state.parts()) {
        AffineForm f = to_affine(c->rhs, prog_.mode_vars, &mv);
        if (f.kind == AffineKind::AFFINE) {
            out.join_part(mv, affine_image(poly, c->var, f.expr));
        } else {
            std::string note = "nonlinear assignment to '" + c->var + "' at " +
                               c->loc.str() + " over-approximated by forget";
            if (notes_.empty() || notes_.back() != note) notes_.push_back(note);
            out.join_part(mv, forget(poly, c->var));
        }
    }
    return out;
}

AbstractState Analyzer::transfer(const AbstractState& state, const CmdPtr& c) {
    switch (c->kind) {
        case Cmd::Kind::SKIP: return state;
        case Cmd::Kind::ASSIGN: return transfer_assign(state, c);
        case Cmd::Kind::SEQ: return transfer(transfer(state, c->c1), c->c2);
        case Cmd::Kind::IF: {
            AbstractState then_in = meet_guard(state, c->guard);
            AbstractState else_in = meet_guard(state, negate_nnf(c->guard));
            return join_states(transfer(then_in, c->c1), transfer(else_in, c->c2));
        }
        case Cmd::Kind::WHILE: {
            WhileAnalysis wa = analyze_while(state, c->guard, c->c1);
            LoopReport report;
            auto it = loop_ids_.find(c.get());
            report.id = it == loop_ids_.end() ? loops_.size() : it->second;
            report.loc = c->loc;
            report.invariant = wa.invariant;
            report.exit = wa.exit;
            report.exit_empty = wa.exit.empty();
            if (cfg_.record_trace) report.trace = wa.trace;
            report.iterations = wa.iterations;
            report.widenings = wa.widenings;
            loops_.push_back(std::move(report));
            return wa.exit;
        }
    }
    return state;
}

Analyzer::WhileAnalysis Analyzer::analyze_while(const AbstractState& state0,
                                                const BExpPtr& guard, const CmdPtr& body) {
    WhileAnalysis wa;
    AbstractState x = state0;
    std::map<ModeValuation, unsigned> counters;  // updates since adoption or widening
    std::set<ModeValuation> seen;
    for (const auto& [mv, poly] : x.parts()) seen.insert(mv);
    wa.trace.push_back(x);

    for (size_t iter = 0; iter < cfg_.max_iterations; ++iter) {
        ++wa.iterations;
        AbstractState f = join_states(state0, transfer(meet_guard(x, guard), body));
        if (state_includes(x, f)) {
            wa.invariant = x;
            wa.exit = meet_guard(x, negate_nnf(guard));
            return wa;
        }

        // A component becoming nonempty for the first time re-engages
        // the delay everywhere.
        bool fresh = false;
        for (const auto& [mv, poly] : f.parts())
            if (!seen.count(mv)) fresh = true;
        if (fresh) counters.clear();

        AbstractState next = x;
        for (const auto& [mv, fpoly] : f.parts()) {
            if (!seen.count(mv)) {
                seen.insert(mv);
                next.set_part(mv, fpoly);  // adopted as-is on first appearance
                counters[mv] = 0;
                continue;
            }
            const Polyhedron& old = x.at(mv);
            if (includes(old, fpoly)) continue;  // component already stable
            unsigned idx = counters[mv];
            next.set_part(mv, widen_step(wcfg_, idx, old, join(old, fpoly)));
            if (idx < wcfg_.delay) {
                counters[mv] = idx + 1;
            } else {
                counters[mv] = 0;  // delay re-engages after each widening
                ++wa.widenings;
            }
        }
        x = std::move(next);
        wa.trace.push_back(x);
    }
    throw AnalysisError("widening failed to stabilize", guard->loc);
}

AnalysisResult Analyzer::run() {
    loops_.clear();
    notes_.clear();
    AnalysisResult result;
    result.initial = initial_state();
    result.final_state = transfer(result.initial, prog_.body);
    result.loops = std::move(loops_);
    result.notes = notes_;
    for (const auto& lr : result.loops) {
        result.iterations += lr.iterations;
        result.widenings_applied += lr.widenings;
    }
    return result;
}

AnalysisResult analyze_program(const Program& p, const AnalysisConfig& cfg) {
    Analyzer an(normalize(p), cfg);
    return an.run();
}

}  // namespace hyperpoly
