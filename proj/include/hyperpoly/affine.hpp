#pragma once

#include <stdexcept>

#include "hyperpoly/ast.hpp"
#include "hyperpoly/linear_expr.hpp"

namespace hyperpoly {

struct AnalysisError : std::runtime_error {
    Loc loc;
    AnalysisError(const std::string& msg, Loc l)
        : std::runtime_error(msg + " at " + l.str()), loc(l) {}
};

enum class AffineKind { AFFINE, NONLINEAR, MODE_DEPENDENT };

struct AffineForm {
    AffineKind kind = AffineKind::AFFINE;
    LinearExpr expr;  // meaningful only when kind == AFFINE
};

// Folds an arithmetic expression into an affine form over the numeric
// variables, with dt-field coefficients. Mode variables are substituted
// from `mode_values`; when that is null any occurrence yields
// MODE_DEPENDENT (used when collecting M). Division is admitted only by
// nonzero constants; a constant zero divisor raises AnalysisError.
AffineForm to_affine(const AExpPtr& a,
                     const std::map<std::string, std::set<Rational>>& mode_vars,
                     const std::map<std::string, Rational>* mode_values);

}  // namespace hyperpoly
