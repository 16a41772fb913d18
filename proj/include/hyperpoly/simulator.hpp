#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperpoly/analyzer.hpp"

namespace hyperpoly {

using ConcreteStore = std::map<std::string, Rational>;

struct SimulationError : std::runtime_error {
    size_t step;
    SimulationError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " at step " + std::to_string(at)), step(at) {}
};

struct LoopHeadRecord {
    size_t loop_id = 0;
    size_t step = 0;  // body iterations executed so far (globally)
    ConcreteStore store;
};

struct SimulationResult {
    std::vector<LoopHeadRecord> records;
    ConcreteStore final_store;
    size_t steps_executed = 0;
    bool terminated = false;  // guard went false before the budget ran out
};

// Exact small-step run of the dt := 1/n section, recording the store at
// every loop head, for at most max_steps loop-body iterations. Strict
// comparisons are evaluated strictly.
SimulationResult simulate_section(const Program& p, long n, size_t max_steps);

// Exact evaluation helpers (also used by normalization tests).
Rational eval_concrete(const AExpPtr& a, const ConcreteStore& store);
bool eval_concrete(const BExpPtr& b, const ConcreteStore& store);

}  // namespace hyperpoly
