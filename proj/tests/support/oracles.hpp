#pragma once

// Test-only oracles, independent of the double-description conversion
// path they are used to check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/polyhedron.hpp"

namespace hyperpoly::test {

// --- Fourier-Motzkin elimination over the dt field -------------------

// Eliminates one variable from an inequality system (equalities are
// split first). Returns the projected system.
inline std::vector<Constraint> fourier_motzkin(const std::vector<Constraint>& cs,
                                               const std::string& var) {
    std::vector<LinearExpr> ineqs;  // each meaning expr >= 0
    for (const Constraint& c : cs) {
        ineqs.push_back(c.expr);
        if (c.relation == Relation::EQ0) ineqs.push_back(-c.expr);
    }
    std::vector<LinearExpr> lower, upper, rest;
    for (const LinearExpr& e : ineqs) {
        int s = e.coeff(var).sign();
        if (s > 0)
            lower.push_back(e);
        else if (s < 0)
            upper.push_back(e);
        else
            rest.push_back(e);
    }
    std::vector<Constraint> out;
    for (const LinearExpr& e : rest) out.push_back(Constraint(e, Relation::GEQ0));
    for (const LinearExpr& lo : lower) {
        for (const LinearExpr& up : upper) {
            // lo: a*var + ... >= 0 with a > 0; up: -b*var + ... >= 0 with b > 0.
            DtScalar a = lo.coeff(var);
            DtScalar b = -up.coeff(var);
            LinearExpr combo = lo.scaled(b) + up.scaled(a);
            combo.set_coeff(var, DtScalar(0));
            out.push_back(Constraint(combo, Relation::GEQ0));
        }
    }
    return out;
}

// --- pairwise-intersection vertex enumeration (1D / 2D) --------------

// Brute-force vertices of a constraint system by intersecting boundary
// (hyper)planes pairwise and keeping feasible intersection points.
inline std::vector<std::map<std::string, DtScalar>> brute_force_vertices(
    const std::vector<Constraint>& cs, const std::vector<std::string>& dims) {
    std::vector<std::map<std::string, DtScalar>> out;
    auto feasible = [&](const std::map<std::string, DtScalar>& pt) {
        for (const Constraint& c : cs)
            if (!c.satisfied_by(pt)) return false;
        return true;
    };
    auto push_unique = [&](std::map<std::string, DtScalar> pt) {
        for (const auto& q : out)
            if (q == pt) return;
        out.push_back(std::move(pt));
    };
    if (dims.size() == 1) {
        const std::string& x = dims[0];
        for (const Constraint& c : cs) {
            DtScalar a = c.expr.coeff(x);
            if (a.is_zero()) continue;
            DtScalar val = -c.expr.constant() / a;
            std::map<std::string, DtScalar> pt;
            if (!val.is_zero()) pt.emplace(x, std::move(val));
            if (feasible(pt)) push_unique(std::move(pt));
        }
        return out;
    }
    if (dims.size() == 2) {
        const std::string& x = dims[0];
        const std::string& y = dims[1];
        for (size_t i = 0; i < cs.size(); ++i) {
            for (size_t j = i + 1; j < cs.size(); ++j) {
                DtScalar a1 = cs[i].expr.coeff(x), b1 = cs[i].expr.coeff(y),
                         c1 = cs[i].expr.constant();
                DtScalar a2 = cs[j].expr.coeff(x), b2 = cs[j].expr.coeff(y),
                         c2 = cs[j].expr.constant();
                DtScalar det = a1 * b2 - a2 * b1;
                if (det.is_zero()) continue;
                DtScalar vx = (b1 * c2 - b2 * c1) / det;
                DtScalar vy = (a2 * c1 - a1 * c2) / det;
                std::map<std::string, DtScalar> pt{{x, vx}, {y, vy}};
                std::map<std::string, DtScalar> tidy;
                for (auto& [k, v] : pt)
                    if (!v.is_zero()) tidy.emplace(k, v);
                if (feasible(tidy)) push_unique(std::move(tidy));
            }
        }
        return out;
    }
    throw std::logic_error("brute_force_vertices supports 1 or 2 dims");
}

// --- exact rational linear programming (feasibility) -----------------

// Decides whether the system  A q = b,  q_i >= 0 for i in `nonneg` has
// a solution, by Gaussian elimination on the equalities followed by
// Fourier-Motzkin on the remaining inequalities. Exact rationals.
struct RationalSystem {
    // rows: coefficients per variable plus right-hand side.
    std::vector<std::vector<Rational>> eq_rows;  // sum a_i q_i = rhs
    size_t nvars = 0;
    std::vector<bool> nonneg;
};

inline bool rational_lp_feasible(RationalSystem sys) {
    // Inequalities as rows of (coeffs, rhs) meaning sum a_i q_i >= rhs.
    std::vector<std::vector<Rational>> ineqs;
    for (size_t v = 0; v < sys.nvars; ++v) {
        if (!sys.nonneg[v]) continue;
        std::vector<Rational> row(sys.nvars + 1);
        row[v] = Rational(1);
        ineqs.push_back(std::move(row));
    }
    // Use each equality to substitute one variable away.
    std::vector<std::vector<Rational>> eqs = sys.eq_rows;
    std::vector<bool> eliminated(sys.nvars, false);
    for (auto& eq : eqs) {
        size_t pivot = sys.nvars;
        for (size_t v = 0; v < sys.nvars; ++v) {
            if (!eliminated[v] && !eq[v].is_zero()) {
                pivot = v;
                break;
            }
        }
        if (pivot == sys.nvars) {
            if (!eq[sys.nvars].is_zero()) return false;  // 0 = nonzero
            continue;
        }
        eliminated[pivot] = true;
        Rational p = eq[pivot];
        for (auto& r : eq) r = r / p;
        auto reduce = [&](std::vector<Rational>& row) {
            Rational f = row[pivot];
            if (f.is_zero()) return;
            for (size_t v = 0; v <= sys.nvars; ++v) row[v] = row[v] - f * eq[v];
        };
        for (auto& other : eqs)
            if (&other != &eq) reduce(other);
        for (auto& row : ineqs) reduce(row);
    }
    // Fourier-Motzkin on what is left.
    for (size_t v = 0; v < sys.nvars; ++v) {
        if (eliminated[v]) continue;
        std::vector<std::vector<Rational>> lower, upper, rest;
        for (auto& row : ineqs) {
            int s = row[v].sign();
            if (s > 0)
                lower.push_back(row);
            else if (s < 0)
                upper.push_back(row);
            else
                rest.push_back(row);
        }
        std::vector<std::vector<Rational>> next = rest;
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                std::vector<Rational> combo(sys.nvars + 1);
                Rational a = lo[v], b = up[v];  // a > 0, b < 0
                for (size_t k = 0; k <= sys.nvars; ++k)
                    combo[k] = lo[k] * (-b) + up[k] * a;
                next.push_back(std::move(combo));
            }
        }
        ineqs = std::move(next);
    }
    for (const auto& row : ineqs) {
        bool all_zero = true;
        for (size_t v = 0; v < sys.nvars; ++v)
            if (!row[v].is_zero()) all_zero = false;
        if (all_zero && Rational(0) < row[sys.nvars]) return false;  // 0 >= rhs > 0
    }
    return true;
}

// Is `point` a convex/conic/linear combination of the generators, after
// substituting dt := at? Exact rational LP feasibility.
inline bool combination_member(const std::vector<Generator>& gens,
                               const std::map<std::string, Rational>& point,
                               const std::vector<std::string>& dims, const Rational& at) {
    RationalSystem sys;
    sys.nvars = gens.size() * 2;  // lines get a +/- split
    sys.nonneg.assign(sys.nvars, false);
    for (size_t g = 0; g < gens.size(); ++g) {
        sys.nonneg[2 * g] = true;
        sys.nonneg[2 * g + 1] = gens[g].kind == GeneratorKind::LINE ? true : false;
    }
    // One equality per coordinate, one for convexity.
    for (const std::string& v : dims) {
        std::vector<Rational> row(sys.nvars + 1);
        for (size_t g = 0; g < gens.size(); ++g) {
            Rational c = gens[g].coord(v).eval_at(at);
            row[2 * g] = c;
            if (gens[g].kind == GeneratorKind::LINE) row[2 * g + 1] = -c;
        }
        row[sys.nvars] = point.count(v) ? point.at(v) : Rational(0);
        sys.eq_rows.push_back(std::move(row));
    }
    std::vector<Rational> conv(sys.nvars + 1);
    for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g].kind == GeneratorKind::POINT) conv[2 * g] = Rational(1);
    conv[sys.nvars] = Rational(1);
    sys.eq_rows.push_back(std::move(conv));
    return rational_lp_feasible(std::move(sys));
}

}  // namespace hyperpoly::test
