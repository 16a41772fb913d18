#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperpoly/dt_scalar.hpp"

namespace hyperpoly {

// Affine expression sum(coeffs[x] * x) + constant. Zero coefficients
// are never stored.
class LinearExpr {
public:
    LinearExpr() = default;
    explicit LinearExpr(DtScalar constant) : constant_(std::move(constant)) {}

    static LinearExpr variable(const std::string& name);

    const std::map<std::string, DtScalar>& coeffs() const { return coeffs_; }
    const DtScalar& constant() const { return constant_; }
    DtScalar coeff(const std::string& name) const;
    void set_coeff(const std::string& name, DtScalar c);
    void set_constant(DtScalar c) { constant_ = std::move(c); }

    bool is_constant() const { return coeffs_.empty(); }

    LinearExpr operator+(const LinearExpr& o) const;
    LinearExpr operator-(const LinearExpr& o) const;
    LinearExpr operator-() const;
    LinearExpr scaled(const DtScalar& k) const;

    // Value at a point given by coordinates (missing vars read as 0).
    DtScalar eval(const std::map<std::string, DtScalar>& point) const;

    bool operator==(const LinearExpr& o) const {
        return coeffs_ == o.coeffs_ && constant_ == o.constant_;
    }
    bool operator<(const LinearExpr& o) const;

    std::string str() const;

private:
    std::map<std::string, DtScalar> coeffs_;
    DtScalar constant_;
};

enum class Relation { GEQ0, EQ0 };

// expr >= 0 or expr = 0, canonically scaled: the first nonzero
// coefficient (in variable order, the constant last) has absolute value
// 1; for EQ0 its sign is normalized positive.
struct Constraint {
    LinearExpr expr;
    Relation relation = Relation::GEQ0;

    Constraint() = default;
    Constraint(LinearExpr e, Relation r);

    bool operator==(const Constraint& o) const {
        return relation == o.relation && expr == o.expr;
    }
    bool operator<(const Constraint& o) const;

    // True when a point with the given coordinates satisfies it.
    bool satisfied_by(const std::map<std::string, DtScalar>& point) const;

    // Rendering such as "x >= 1 - 2*dt" for single-variable
    // constraints, "x + 2*l <= 5 + 2*dt" in general.
    std::string str() const;
};

// Helpers for building constraints from bound form.
Constraint constraint_geq(const LinearExpr& lhs, const LinearExpr& rhs);  // lhs >= rhs
Constraint constraint_leq(const LinearExpr& lhs, const LinearExpr& rhs);  // lhs <= rhs
Constraint constraint_eq(const LinearExpr& lhs, const LinearExpr& rhs);   // lhs = rhs

enum class GeneratorKind { POINT, RAY, LINE };

// Generator of a polyhedron. Rays and lines are nonzero direction
// vectors; zero coordinates are not stored.
struct Generator {
    GeneratorKind kind = GeneratorKind::POINT;
    std::map<std::string, DtScalar> coords;

    DtScalar coord(const std::string& name) const;

    bool operator==(const Generator& o) const {
        return kind == o.kind && coords == o.coords;
    }
    bool operator<(const Generator& o) const;

    std::string str() const;
};

}  // namespace hyperpoly
