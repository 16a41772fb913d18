#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/linear_expr.hpp"

namespace hyperpoly {

// Convex polyhedron over the dt field in double description. Both
// representations are kept lazily in sync: each operation builds the
// one natural to it and the other is derived on demand (conversion is
// guarded by a mutex, so values can be shared across threads).
//
// The empty polyhedron is canonical: no generators, and the single
// unsatisfiable constraint -1 >= 0.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron universe(std::vector<std::string> dims);
    static Polyhedron empty_set(std::vector<std::string> dims);
    static Polyhedron from_constraints(std::vector<std::string> dims,
                                       std::vector<Constraint> cs);
    static Polyhedron from_generators(std::vector<std::string> dims,
                                      std::vector<Generator> gs);

    Polyhedron(const Polyhedron& o);
    Polyhedron& operator=(const Polyhedron& o);
    Polyhedron(Polyhedron&&) = default;
    Polyhedron& operator=(Polyhedron&&) = default;

    const std::vector<std::string>& dims() const { return *dims_; }

    // A constraint system describing the set: the one the value was
    // built from when available, otherwise the minimized one.
    const std::vector<Constraint>& constraints() const;
    // Irredundant system obtained by conversion through the generator
    // side (facets plus echelon-reduced equalities).
    const std::vector<Constraint>& minimized_constraints() const;
    // Minimized generator system (points, extreme rays, line basis).
    const std::vector<Generator>& generators() const;

    bool is_empty() const;
    bool is_universe() const;

    // Least upper / greatest lower bound of the named variable over the
    // set; nullopt when unbounded in that direction. Must not be called
    // on the empty polyhedron.
    std::optional<DtScalar> lower_bound(const std::string& var) const;
    std::optional<DtScalar> upper_bound(const std::string& var) const;

    std::string str() const;

private:
    std::shared_ptr<const std::vector<std::string>> dims_ =
        std::make_shared<const std::vector<std::string>>();
    // At least one of the two is always present.
    mutable std::optional<std::vector<Constraint>> cons_;
    mutable std::optional<std::vector<Constraint>> min_cons_;
    mutable std::optional<std::vector<Generator>> gens_;
    mutable std::unique_ptr<std::mutex> sync_ = std::make_unique<std::mutex>();

    void ensure_generators() const;
    void ensure_min_constraints() const;
};

bool includes(const Polyhedron& p, const Polyhedron& q);  // q subset of p
bool entails(const Polyhedron& p, const Constraint& c);
bool is_empty(const Polyhedron& p);
bool poly_equal(const Polyhedron& p, const Polyhedron& q);

Polyhedron meet(const Polyhedron& p, const Polyhedron& q);
Polyhedron meet(const Polyhedron& p, const Constraint& c);
Polyhedron join(const Polyhedron& p, const Polyhedron& q);

// Exact image under the assignment v := e (computed on generators).
Polyhedron affine_image(const Polyhedron& p, const std::string& v, const LinearExpr& e);
// Cylindrification: drop all knowledge about v, keeping it in dims.
Polyhedron forget(const Polyhedron& p, const std::string& v);

// Standalone conversions (the spec's operation surface; the class uses
// the same machinery internally).
std::vector<Generator> constraints_to_generators(const std::vector<Constraint>& cs,
                                                 const std::vector<std::string>& dims);
std::vector<Constraint> generators_to_constraints(const std::vector<Generator>& gs,
                                                  const std::vector<std::string>& dims);

}  // namespace hyperpoly
