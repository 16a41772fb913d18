#include "hyperpoly/widening.hpp"

#include <set>
#include <stdexcept>

namespace hyperpoly {

std::vector<Constraint> split_inequalities(const std::vector<Constraint>& cs) {
    std::set<Constraint> out;
    for (const Constraint& c : cs) {
        if (c.relation == Relation::GEQ0) {
            out.insert(c);
        } else {
            out.insert(Constraint(c.expr, Relation::GEQ0));
            out.insert(Constraint(-c.expr, Relation::GEQ0));
        }
    }
    return {out.begin(), out.end()};
}

Polyhedron widen_standard(const Polyhedron& p1, const Polyhedron& p2) {
    if (p1.is_empty()) return p2;
    const auto& dims = p1.dims();
    std::vector<Constraint> c1 = split_inequalities(p1.minimized_constraints());
    std::vector<Constraint> c2 = split_inequalities(p2.minimized_constraints());

    std::set<Constraint> kept;
    for (const Constraint& phi : c1)
        if (entails(p2, phi)) kept.insert(phi);

    // Swap clause: psi from C2 that can stand in for some phi of C1
    // without changing the set. Tried pairwise; entailment by p1 prunes
    // candidates (psi belongs to the replacement system).
    for (const Constraint& psi : c2) {
        if (kept.count(psi)) continue;
        if (!entails(p1, psi)) continue;
        for (size_t i = 0; i < c1.size(); ++i) {
            std::vector<Constraint> swapped;
            swapped.reserve(c1.size());
            for (size_t j = 0; j < c1.size(); ++j) swapped.push_back(j == i ? psi : c1[j]);
            if (poly_equal(p1, Polyhedron::from_constraints(dims, swapped))) {
                kept.insert(psi);
                break;
            }
        }
    }
    return Polyhedron::from_constraints(dims, {kept.begin(), kept.end()});
}

Polyhedron widen_upto(const Polyhedron& p1, const Polyhedron& p2,
                      const std::vector<Constraint>& m) {
    Polyhedron base = widen_standard(p1, p2);
    std::vector<Constraint> kept = base.constraints();
    for (const Constraint& phi : m)
        if (entails(p1, phi) && entails(p2, phi)) kept.push_back(phi);
    return Polyhedron::from_constraints(p1.dims(), std::move(kept));
}

Polyhedron widen_step(const WideningConfig& config, unsigned step_index,
                      const Polyhedron& p_old, const Polyhedron& p_new) {
    if (step_index < config.delay) return join(p_old, p_new);
    if (config.kind == WideningKind::STANDARD) return widen_standard(p_old, p_new);
    return widen_upto(p_old, p_new, config.m_set);
}

unsigned uniform_bound(const Polyhedron& p0, const WideningConfig& config) {
    if (p0.is_empty()) throw std::logic_error("uniform bound of empty polyhedron");
    unsigned n = static_cast<unsigned>(split_inequalities(p0.minimized_constraints()).size());
    if (config.kind == WideningKind::UPTO_M)
        n += static_cast<unsigned>(config.m_set.size());
    return n;
}

}  // namespace hyperpoly
