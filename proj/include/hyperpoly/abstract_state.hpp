#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperpoly/polyhedron.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

// Total assignment of declared values to the mode variables.
using ModeValuation = std::map<std::string, Rational>;

std::string mode_key(const ModeValuation& mv);  // "p=1,s=0"

// One polyhedron over the numeric variables per reachable mode
// valuation; an absent key means the empty polyhedron. Stored parts are
// always nonempty.
class AbstractState {
public:
    AbstractState() = default;

    const std::map<ModeValuation, Polyhedron>& parts() const { return parts_; }
    bool has(const ModeValuation& mv) const { return parts_.count(mv) > 0; }
    const Polyhedron& at(const ModeValuation& mv) const { return parts_.at(mv); }
    bool empty() const { return parts_.empty(); }

    // Joins the polyhedron into the component (drops empties).
    void join_part(const ModeValuation& mv, const Polyhedron& p);
    void set_part(const ModeValuation& mv, Polyhedron p);

    std::string str() const;

private:
    std::map<ModeValuation, Polyhedron> parts_;
};

AbstractState join_states(const AbstractState& a, const AbstractState& b);
// Componentwise inclusion (the product order of the mode partition).
bool state_includes(const AbstractState& a, const AbstractState& b);
bool state_equal(const AbstractState& a, const AbstractState& b);

}  // namespace hyperpoly
