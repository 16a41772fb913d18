#pragma once

#include <iosfwd>

#include <json.hpp>

#include "hyperpoly/analyzer.hpp"
#include "hyperpoly/simulator.hpp"

namespace hyperpoly {

// Interval hull of the union of mode components, per variable.
struct ProjectionBound {
    bool bounded_below = false, bounded_above = false;
    DtScalar lower, upper;  // valid when the matching flag is set
};
std::map<std::string, ProjectionBound> union_projection(const AbstractState& st,
                                                        const std::vector<std::string>& vars);

// "exact" when the bound equals its standard part, otherwise
// "+infinitesimal slack".
std::string bound_classification(const DtScalar& bound);

nlohmann::json state_to_json(const AbstractState& st);
nlohmann::json result_to_json(const AnalysisResult& result, const Program& prog);
void print_text_report(std::ostream& out, const AnalysisResult& result, const Program& prog);

// Fig-2 style plot data: one entry per trace step of the first loop,
// with constraints and vertices rendered symbolically and at dt :=
// at_dt (exact rationals; poles become null).
nlohmann::json export_plot_data(const AnalysisResult& result, const Rational& at_dt);

struct Violation {
    size_t step = 0;
    std::string mode;
    std::string constraint;  // empty: the mode component itself is missing
    std::string store;
};

struct ContainmentReport {
    size_t stores_checked = 0;
    std::vector<Violation> violations;
};

// Verifies every recorded loop-head store against the loop invariant
// after the exact substitution dt := 1/n.
ContainmentReport check_containment(const AnalysisResult& result, const Program& prog,
                                    const std::vector<LoopHeadRecord>& records, long n);

}  // namespace hyperpoly
