#pragma once

#include <vector>

#include "hyperpoly/dt_scalar.hpp"

namespace hyperpoly::detail {

using Vec = std::vector<DtScalar>;

struct ConeRow {
    Vec normal;
    bool equality = false;  // normal . x = 0 instead of >= 0
};

struct ConeGenerators {
    std::vector<Vec> lines;  // reduced row echelon basis of the lineality space
    std::vector<Vec> rays;   // extreme rays, reduced modulo lines, canonically scaled
};

// Double description: generators of the cone {x | row . x >= 0 (or = 0)}.
// Exact arithmetic over the dt field; rows are processed incrementally,
// splitting lines on the first row they do not saturate and combining
// adjacent rays across the new hyperplane.
ConeGenerators cone_generators(size_t dim, const std::vector<ConeRow>& rows);

DtScalar dot(const Vec& a, const Vec& b);

}  // namespace hyperpoly::detail
