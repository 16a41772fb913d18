#include "hyperpoly/report.hpp"

#include <ostream>

namespace hyperpoly {

std::map<std::string, ProjectionBound> union_projection(const AbstractState& st,
                                                        const std::vector<std::string>& vars) {
    std::map<std::string, ProjectionBound> out;
    for (const auto& v : vars) {
        ProjectionBound pb;
        bool first = true;
        bool lower_ok = true, upper_ok = true;
        for (const auto& [mv, poly] : st.parts()) {
            auto lo = poly.lower_bound(v);
            auto hi = poly.upper_bound(v);
            if (!lo) lower_ok = false;
            if (!hi) upper_ok = false;
            if (lo && lower_ok && (first || *lo < pb.lower)) pb.lower = *lo;
            if (hi && upper_ok && (first || pb.upper < *hi)) pb.upper = *hi;
            first = false;
        }
        pb.bounded_below = lower_ok && !st.empty();
        pb.bounded_above = upper_ok && !st.empty();
        out.emplace(v, std::move(pb));
    }
    return out;
}

std::string bound_classification(const DtScalar& bound) {
    auto st = bound.standard_part();
    if (st && DtScalar(*st) == bound) return "exact";
    return "+infinitesimal slack";
}

namespace {

nlohmann::json poly_to_json(const Polyhedron& poly) {
    nlohmann::json j;
    j["constraints"] = nlohmann::json::array();
    for (const Constraint& c : poly.minimized_constraints())
        j["constraints"].push_back(c.str());
    j["vertices"] = nlohmann::json::array();
    for (const Generator& g : poly.generators()) {
        if (g.kind != GeneratorKind::POINT) continue;
        nlohmann::json v = nlohmann::json::array();
        for (const auto& d : poly.dims()) v.push_back(g.coord(d).str());
        j["vertices"].push_back(std::move(v));
    }
    return j;
}

nlohmann::json projection_to_json(const AbstractState& st,
                                  const std::vector<std::string>& vars) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, pb] : union_projection(st, vars)) {
        nlohmann::json b;
        if (pb.bounded_below) {
            b["lower"] = pb.lower.str();
            auto sp = pb.lower.standard_part();
            b["lower_standard"] = sp ? sp->str() : "infinite";
            b["lower_class"] = bound_classification(pb.lower);
        }
        if (pb.bounded_above) {
            b["upper"] = pb.upper.str();
            auto sp = pb.upper.standard_part();
            b["upper_standard"] = sp ? sp->str() : "infinite";
            b["upper_class"] = bound_classification(pb.upper);
        }
        j[v] = std::move(b);
    }
    return j;
}

}  // namespace

nlohmann::json state_to_json(const AbstractState& st) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [mv, poly] : st.parts()) j[mode_key(mv)] = poly_to_json(poly);
    return j;
}

nlohmann::json result_to_json(const AnalysisResult& result, const Program& prog) {
    nlohmann::json j;
    j["loops"] = nlohmann::json::array();
    for (const LoopReport& lr : result.loops) {
        nlohmann::json lj;
        lj["id"] = lr.id;
        lj["line"] = lr.loc.line;
        lj["invariant"] = state_to_json(lr.invariant);
        lj["exit"] = state_to_json(lr.exit);
        lj["exit_empty"] = lr.exit_empty;
        lj["iterations"] = lr.iterations;
        lj["widenings"] = lr.widenings;
        lj["projection"] = projection_to_json(lr.invariant, prog.numeric_vars);
        j["loops"].push_back(std::move(lj));
    }
    j["final"] = state_to_json(result.final_state);
    j["final_projection"] = projection_to_json(result.final_state, prog.numeric_vars);
    j["iterations"] = result.iterations;
    j["widenings"] = result.widenings_applied;
    j["notes"] = result.notes;
    j["warnings"] = prog.warnings;
    return j;
}

void print_text_report(std::ostream& out, const AnalysisResult& result, const Program& prog) {
    for (const auto& w : prog.warnings) out << "warning: " << w << "\n";
    for (const auto& n : result.notes) out << "note: " << n << "\n";
    for (const LoopReport& lr : result.loops) {
        out << "loop " << lr.id << " (line " << lr.loc.line << "): stabilized after "
            << lr.iterations << " iterations, " << lr.widenings << " widenings\n";
        out << "  loop-head invariant:\n";
        if (lr.invariant.empty()) out << "    (unreachable)\n";
        for (const auto& [mv, poly] : lr.invariant.parts()) {
            std::string key = mode_key(mv);
            out << "    " << (key.empty() ? "*" : key) << ": " << poly.str() << "\n";
        }
        for (const auto& [v, pb] : union_projection(lr.invariant, prog.numeric_vars)) {
            out << "    " << v << ": ";
            if (pb.bounded_below) {
                auto sp = pb.lower.standard_part();
                out << v << " >= " << pb.lower.str() << "  (standard part "
                    << (sp ? sp->str() : "-inf") << ", " << bound_classification(pb.lower)
                    << ")";
            } else {
                out << "unbounded below";
            }
            out << "; ";
            if (pb.bounded_above) {
                auto sp = pb.upper.standard_part();
                out << v << " <= " << pb.upper.str() << "  (standard part "
                    << (sp ? sp->str() : "+inf") << ", " << bound_classification(pb.upper)
                    << ")";
            } else {
                out << "unbounded above";
            }
            out << "\n";
        }
        if (lr.exit_empty) {
            out << "  exit: empty (guard never fails)\n";
        } else {
            out << "  exit:\n";
            for (const auto& [mv, poly] : lr.exit.parts()) {
                std::string key = mode_key(mv);
                out << "    " << (key.empty() ? "*" : key) << ": " << poly.str() << "\n";
            }
        }
    }
    out << "final state:\n";
    if (result.final_state.empty()) {
        out << "  (unreachable)\n";
    } else {
        for (const auto& [mv, poly] : result.final_state.parts()) {
            std::string key = mode_key(mv);
            out << "  " << (key.empty() ? "*" : key) << ": " << poly.str() << "\n";
        }
    }
}

nlohmann::json export_plot_data(const AnalysisResult& result, const Rational& at_dt) {
    nlohmann::json steps = nlohmann::json::array();
    if (result.loops.empty()) return steps;
    const LoopReport& lr = result.loops.front();
    for (size_t i = 0; i < lr.trace.size(); ++i) {
        nlohmann::json entry;
        entry["step"] = i;
        nlohmann::json modes = nlohmann::json::object();
        for (const auto& [mv, poly] : lr.trace[i].parts()) {
            nlohmann::json pj;
            pj["constraints"] = nlohmann::json::array();
            for (const Constraint& c : poly.minimized_constraints())
                pj["constraints"].push_back(c.str());
            pj["vertices"] = nlohmann::json::array();
            for (const Generator& g : poly.generators()) {
                if (g.kind != GeneratorKind::POINT) continue;
                nlohmann::json sym = nlohmann::json::array();
                nlohmann::json num = nlohmann::json::array();
                for (const auto& d : poly.dims()) {
                    DtScalar c = g.coord(d);
                    sym.push_back(c.str());
                    try {
                        num.push_back(c.eval_at(at_dt).str());
                    } catch (const std::domain_error&) {
                        num.push_back(nullptr);
                    }
                }
                pj["vertices"].push_back({{"sym", sym}, {"num", num}});
            }
            modes[mode_key(mv)] = std::move(pj);
        }
        entry["modes"] = std::move(modes);
        steps.push_back(std::move(entry));
    }
    return steps;
}

ContainmentReport check_containment(const AnalysisResult& result, const Program& prog,
                                    const std::vector<LoopHeadRecord>& records, long n) {
    ContainmentReport report;
    const Rational at(1, n);

    auto store_str = [](const ConcreteStore& st) {
        std::string s;
        for (const auto& [v, val] : st) {
            if (!s.empty()) s += ", ";
            s += v + "=" + val.str();
        }
        return s;
    };

    for (const LoopHeadRecord& rec : records) {
        ++report.stores_checked;
        const LoopReport* loop = nullptr;
        for (const auto& lr : result.loops)
            if (lr.id == rec.loop_id) loop = &lr;
        if (!loop) {
            report.violations.push_back(
                Violation{rec.step, "", "loop " + std::to_string(rec.loop_id) + " not analyzed",
                          store_str(rec.store)});
            continue;
        }
        ModeValuation mv;
        for (const auto& [name, values] : prog.mode_vars) {
            auto it = rec.store.find(name);
            mv[name] = it == rec.store.end() ? Rational(0) : it->second;
        }
        if (!loop->invariant.has(mv)) {
            report.violations.push_back(Violation{rec.step, mode_key(mv),
                                                  "mode valuation absent from invariant",
                                                  store_str(rec.store)});
            continue;
        }
        const Polyhedron& poly = loop->invariant.at(mv);
        for (const Constraint& c : poly.minimized_constraints()) {
            Rational value = c.expr.constant().eval_at(at);
            for (const auto& [v, k] : c.expr.coeffs()) {
                auto it = rec.store.find(v);
                Rational x = it == rec.store.end() ? Rational(0) : it->second;
                value += k.eval_at(at) * x;
            }
            bool ok = c.relation == Relation::EQ0 ? value.is_zero() : value >= Rational(0);
            if (!ok)
                report.violations.push_back(
                    Violation{rec.step, mode_key(mv), c.str(), store_str(rec.store)});
        }
    }
    return report;
}

}  // namespace hyperpoly
