#pragma once

// Shared random generators for property tests (deterministic seeds).

#include <random>
#include <vector>

#include "hyperpoly/polyhedron.hpp"

namespace hyperpoly::test {

inline DtScalar random_coeff(std::mt19937_64& rng, bool with_dt) {
    std::uniform_int_distribution<int> small(-4, 4);
    DtScalar c{Rational(small(rng))};
    if (with_dt && std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        c = c + DtScalar(Rational(small(rng))) * DtScalar::dt();
    return c;
}

inline Constraint random_constraint(std::mt19937_64& rng,
                                    const std::vector<std::string>& dims, bool with_dt) {
    LinearExpr e;
    bool nonzero = false;
    for (const auto& v : dims) {
        DtScalar c = random_coeff(rng, false);
        if (!c.is_zero()) nonzero = true;
        e.set_coeff(v, c);
    }
    if (!nonzero) e.set_coeff(dims[std::uniform_int_distribution<size_t>(0, dims.size() - 1)(rng)],
                              DtScalar(1));
    std::uniform_int_distribution<int> cst(-6, 6);
    DtScalar k{Rational(cst(rng))};
    if (with_dt && std::uniform_int_distribution<int>(0, 1)(rng) == 0)
        k = k + DtScalar(Rational(cst(rng))) * DtScalar::dt();
    e.set_constant(k);
    bool eq = std::uniform_int_distribution<int>(0, 9)(rng) == 0;
    return Constraint(e, eq ? Relation::EQ0 : Relation::GEQ0);
}

inline std::vector<std::string> random_dims(std::mt19937_64& rng, size_t max_dims = 3) {
    static const std::vector<std::string> names{"x", "y", "z"};
    size_t n = std::uniform_int_distribution<size_t>(1, max_dims)(rng);
    return {names.begin(), names.begin() + n};
}

inline Polyhedron random_polyhedron(std::mt19937_64& rng,
                                    const std::vector<std::string>& dims, bool with_dt,
                                    size_t max_constraints = 5) {
    std::uniform_int_distribution<size_t> ncons(1, max_constraints);
    std::vector<Constraint> cs;
    size_t n = ncons(rng);
    for (size_t i = 0; i < n; ++i) cs.push_back(random_constraint(rng, dims, with_dt));
    return Polyhedron::from_constraints(dims, std::move(cs));
}

// Nonempty random polyhedron (resamples until satisfiable).
inline Polyhedron random_nonempty(std::mt19937_64& rng, const std::vector<std::string>& dims,
                                  bool with_dt, size_t max_constraints = 5) {
    for (;;) {
        Polyhedron p = random_polyhedron(rng, dims, with_dt, max_constraints);
        if (!p.is_empty()) return p;
    }
}

}  // namespace hyperpoly::test
