#pragma once

#include <vector>

#include "hyperpoly/affine.hpp"

namespace hyperpoly {

// Negation normal form: Not appears only directly above a comparison,
// or above an And whose branches are themselves normal (marking the
// disjunction the analyzer splits on).
BExpPtr nnf(const BExpPtr& b);

// NNF of the negation.
BExpPtr negate_nnf(const BExpPtr& b);

// Normalizes every guard in the program. Idempotent.
Program normalize(const Program& p);

// The widening parameter M: for every comparison over numeric variables
// in the (normalized) program, both closed half-spaces. Comparisons
// touching mode variables or non-affine terms contribute nothing.
std::vector<Constraint> collect_m_set(const Program& p);

}  // namespace hyperpoly
