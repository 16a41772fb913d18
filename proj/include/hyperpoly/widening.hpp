#pragma once

#include <vector>

#include "hyperpoly/polyhedron.hpp"

namespace hyperpoly {

enum class WideningKind { STANDARD, UPTO_M };

struct WideningConfig {
    WideningKind kind = WideningKind::UPTO_M;
    std::vector<Constraint> m_set;  // empty unless UPTO_M
    unsigned delay = 3;
};

// Halbwachs' standard widening: keep the constraints of p1 that p2
// satisfies, plus constraints of p2 that can replace one of p1's
// without changing p1 (decided by mutual inclusion). Equalities take
// part as their two inequality halves. Both arguments contribute their
// minimized systems.
Polyhedron widen_standard(const Polyhedron& p1, const Polyhedron& p2);

// Widening up to M: the standard widening intersected with every
// constraint of m satisfied by both arguments.
Polyhedron widen_upto(const Polyhedron& p1, const Polyhedron& p2,
                      const std::vector<Constraint>& m);

// One engine step: a plain join while step_index < delay, the
// configured widening afterwards. Callers pass p_new = join(p_old, F).
Polyhedron widen_step(const WideningConfig& config, unsigned step_index,
                      const Polyhedron& p_old, const Polyhedron& p_new);

// Upper bound on the stabilization step of iteration sequences started
// at p0 (uniformity): the number of inequalities defining p0, plus |M|
// for UPTO_M. Equalities count as two inequalities.
unsigned uniform_bound(const Polyhedron& p0, const WideningConfig& config);

// The two inequality halves of every constraint (the widening's view
// of a constraint system).
std::vector<Constraint> split_inequalities(const std::vector<Constraint>& cs);

}  // namespace hyperpoly
