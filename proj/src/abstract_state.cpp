#include "hyperpoly/abstract_state.hpp"

#include <sstream>

namespace hyperpoly {

std::string mode_key(const ModeValuation& mv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : mv) {
        if (!first) out << ",";
        first = false;
        out << name << "=" << value.str();
    }
    return out.str();
}

void AbstractState::join_part(const ModeValuation& mv, const Polyhedron& p) {
    if (p.is_empty()) return;
    auto it = parts_.find(mv);
    if (it == parts_.end())
        parts_.emplace(mv, p);
    else
        it->second = join(it->second, p);
}

void AbstractState::set_part(const ModeValuation& mv, Polyhedron p) {
    if (p.is_empty())
        parts_.erase(mv);
    else
        parts_.insert_or_assign(mv, std::move(p));
}

std::string AbstractState::str() const {
    if (parts_.empty()) return "(unreachable)";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mv, poly] : parts_) {
        if (!first) out << "\n";
        first = false;
        std::string key = mode_key(mv);
        out << (key.empty() ? "*" : key) << ": " << poly.str();
    }
    return out.str();
}

AbstractState join_states(const AbstractState& a, const AbstractState& b) {
    AbstractState out = a;
    for (const auto& [mv, poly] : b.parts()) out.join_part(mv, poly);
    return out;
}

bool state_includes(const AbstractState& a, const AbstractState& b) {
    for (const auto& [mv, poly] : b.parts()) {
        if (!a.has(mv)) return false;
        if (!includes(a.at(mv), poly)) return false;
    }
    return true;
}

bool state_equal(const AbstractState& a, const AbstractState& b) {
    return state_includes(a, b) && state_includes(b, a);
}

}  // namespace hyperpoly
