#include "hyperpoly/simulator.hpp"

namespace hyperpoly {

namespace {

struct Budget {
    size_t remaining;
    size_t executed = 0;
};

struct StopRun {};  // unwinds the interpreter when the budget is spent

Rational eval_a(const AExpPtr& a, const ConcreteStore& store, size_t step) {
    switch (a->kind) {
        case AExp::Kind::VAR: {
            auto it = store.find(a->var);
            if (it == store.end())
                throw SimulationError("unbound variable '" + a->var + "'", step);
            return it->second;
        }
        case AExp::Kind::LIT: return a->lit;
        case AExp::Kind::DT:
            throw SimulationError("dt reached the simulator unsubstituted", step);
        case AExp::Kind::BINOP: {
            Rational l = eval_a(a->lhs, store, step);
            Rational r = eval_a(a->rhs, store, step);
            switch (a->op) {
                case '+': return l + r;
                case '-': return l - r;
                case '*': return l * r;
                case '/':
                    if (r.is_zero()) throw SimulationError("division by zero", step);
                    return l / r;
            }
        }
    }
    throw SimulationError("malformed expression", step);
}

bool eval_b(const BExpPtr& b, const ConcreteStore& store, size_t step) {
    switch (b->kind) {
        case BExp::Kind::TRUE: return true;
        case BExp::Kind::FALSE: return false;
        case BExp::Kind::AND: return eval_b(b->lhs, store, step) && eval_b(b->rhs, store, step);
        case BExp::Kind::NOT: return !eval_b(b->lhs, store, step);
        case BExp::Kind::LT: return eval_a(b->a1, store, step) < eval_a(b->a2, store, step);
    }
    return false;
}

struct Interp {
    const std::map<const Cmd*, size_t>& loop_ids;
    Budget& budget;
    std::vector<LoopHeadRecord>& records;
    bool stopped = false;

    void exec(const CmdPtr& c, ConcreteStore& store) {
        switch (c->kind) {
            case Cmd::Kind::SKIP: return;
            case Cmd::Kind::ASSIGN:
                store[c->var] = eval_a(c->rhs, store, budget.executed);
                return;
            case Cmd::Kind::SEQ:
                exec(c->c1, store);
                exec(c->c2, store);
                return;
            case Cmd::Kind::IF:
                exec(eval_b(c->guard, store, budget.executed) ? c->c1 : c->c2, store);
                return;
            case Cmd::Kind::WHILE: {
                size_t id = loop_ids.at(c.get());
                for (;;) {
                    records.push_back(LoopHeadRecord{id, budget.executed, store});
                    if (!eval_b(c->guard, store, budget.executed)) return;
                    if (budget.remaining == 0) throw StopRun{};
                    --budget.remaining;
                    ++budget.executed;
                    exec(c->c1, store);
                }
            }
        }
    }
};

}  // namespace

Rational eval_concrete(const AExpPtr& a, const ConcreteStore& store) {
    return eval_a(a, store, 0);
}

bool eval_concrete(const BExpPtr& b, const ConcreteStore& store) {
    return eval_b(b, store, 0);
}

SimulationResult simulate_section(const Program& p, long n, size_t max_steps) {
    if (n < 1) throw std::invalid_argument("section index must be >= 1");
    Program section = substitute_dt(p, Rational(1, n));
    auto loop_ids = index_loops(section.body);

    ConcreteStore store;
    for (const auto& v : section.numeric_vars) store[v] = Rational(0);
    for (const auto& [mv, values] : section.mode_vars) store[mv] = Rational(0);

    SimulationResult result;
    Budget budget{max_steps};
    Interp interp{loop_ids, budget, result.records};
    try {
        interp.exec(section.body, store);
        result.terminated = true;
    } catch (const StopRun&) {
        result.terminated = false;
    }
    result.final_store = store;
    result.steps_executed = budget.executed;
    return result;
}

}  // namespace hyperpoly
