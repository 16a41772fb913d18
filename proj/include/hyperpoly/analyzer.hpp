#pragma once

#include <optional>

#include "hyperpoly/abstract_state.hpp"
#include "hyperpoly/normalize.hpp"
#include "hyperpoly/widening.hpp"

namespace hyperpoly {

struct AnalysisConfig {
    WideningKind widening = WideningKind::UPTO_M;
    // M for the up-to widening; collected from the program when absent.
    std::optional<std::vector<Constraint>> m_override;
    unsigned delay = 3;
    size_t max_iterations = 10000;  // safety net only
    bool record_trace = true;
};

struct LoopReport {
    size_t id = 0;
    Loc loc;
    AbstractState invariant;  // stabilized loop-head states
    AbstractState exit;       // invariant meet the negated guard
    bool exit_empty = false;  // flagged for while-true loops
    std::vector<AbstractState> trace;
    size_t iterations = 0;
    size_t widenings = 0;
};

struct AnalysisResult {
    AbstractState initial;
    AbstractState final_state;
    std::vector<LoopReport> loops;
    std::vector<std::string> notes;  // nonlinear fallbacks and similar
    size_t iterations = 0;
    size_t widenings_applied = 0;
};

// Replaces every dt leaf by the positive rational r (the sectionwise
// substitution). Throws std::invalid_argument for r <= 0.
Program substitute_dt(const Program& p, const Rational& r);

// Abstract interpreter for a (normalized) program over the
// mode-partitioned polyhedra domain.
class Analyzer {
public:
    Analyzer(Program normalized_program, AnalysisConfig cfg);

    AnalysisResult run();

    // Exposed building blocks (also used by the test suites).
    AbstractState initial_state() const;
    AbstractState transfer(const AbstractState& state, const CmdPtr& c);
    AbstractState meet_guard(const AbstractState& state, const BExpPtr& b);

    struct WhileAnalysis {
        AbstractState invariant;
        AbstractState exit;
        std::vector<AbstractState> trace;
        size_t iterations = 0;
        size_t widenings = 0;
    };
    WhileAnalysis analyze_while(const AbstractState& state0, const BExpPtr& guard,
                                const CmdPtr& body);

    const Program& program() const { return prog_; }
    const WideningConfig& widening_config() const { return wcfg_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    AbstractState transfer_assign(const AbstractState& state, const CmdPtr& c);

    Program prog_;
    AnalysisConfig cfg_;
    WideningConfig wcfg_;
    std::map<const Cmd*, size_t> loop_ids_;
    std::vector<LoopReport> loops_;
    std::vector<std::string> notes_;
};

// Convenience wrapper: normalize, resolve M, run.
AnalysisResult analyze_program(const Program& p, const AnalysisConfig& cfg = {});

}  // namespace hyperpoly
