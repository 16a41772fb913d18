#include "hyperpoly/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cone.hpp"

namespace hyperpoly {

namespace {

using detail::ConeGenerators;
using detail::ConeRow;
using detail::Vec;

Constraint unsat_constraint() {
    LinearExpr e{DtScalar(Rational(-1))};
    return Constraint(std::move(e), Relation::GEQ0);
}

// Canonicalize, drop tautologies, detect trivially unsatisfiable
// constant constraints. Returns false when the system is already known
// infeasible.
bool tidy_constraints(std::vector<Constraint>& cs) {
    std::set<Constraint> out;
    for (const Constraint& c : cs) {
        if (c.expr.is_constant()) {
            int s = c.expr.constant().sign();
            bool ok = c.relation == Relation::EQ0 ? s == 0 : s >= 0;
            if (!ok) return false;
            continue;
        }
        out.insert(c);
    }
    cs.assign(out.begin(), out.end());
    return true;
}

std::vector<Generator> tidy_generators(std::vector<Generator> gs) {
    std::set<Generator> out;
    for (Generator& g : gs) {
        // Drop stored zero coordinates; zero rays/lines vanish.
        std::map<std::string, DtScalar> coords;
        for (auto& [v, c] : g.coords)
            if (!c.is_zero()) coords.emplace(v, c);
        g.coords = std::move(coords);
        if (g.kind != GeneratorKind::POINT && g.coords.empty()) continue;
        out.insert(std::move(g));
    }
    return {out.begin(), out.end()};
}

// Homogenized row (coefficients in dims order, constant last).
Vec constraint_row(const Constraint& c, const std::vector<std::string>& dims) {
    Vec row(dims.size() + 1);
    for (size_t i = 0; i < dims.size(); ++i) row[i] = c.expr.coeff(dims[i]);
    row[dims.size()] = c.expr.constant();
    return row;
}

Vec generator_row(const Generator& g, const std::vector<std::string>& dims) {
    Vec row(dims.size() + 1);
    for (size_t i = 0; i < dims.size(); ++i) row[i] = g.coord(dims[i]);
    row[dims.size()] = g.kind == GeneratorKind::POINT ? DtScalar(1) : DtScalar(0);
    return row;
}

std::map<std::string, DtScalar> vec_coords(const Vec& v, const std::vector<std::string>& dims) {
    std::map<std::string, DtScalar> out;
    for (size_t i = 0; i < dims.size(); ++i)
        if (!v[i].is_zero()) out.emplace(dims[i], v[i]);
    return out;
}

// Value of the constraint on a generator: points use the affine form,
// rays and lines the homogeneous part.
DtScalar constraint_on_generator(const Constraint& c, const Generator& g) {
    DtScalar acc = g.kind == GeneratorKind::POINT ? c.expr.constant() : DtScalar();
    for (const auto& [v, k] : c.expr.coeffs()) {
        DtScalar x = g.coord(v);
        if (!x.is_zero()) acc = acc + k * x;
    }
    return acc;
}

bool generator_satisfies(const Constraint& c, const Generator& g) {
    int s = constraint_on_generator(c, g).sign();
    if (c.relation == Relation::EQ0 || g.kind == GeneratorKind::LINE) return s == 0;
    return s >= 0;
}

}  // namespace

std::vector<Generator> constraints_to_generators(const std::vector<Constraint>& cs,
                                                 const std::vector<std::string>& dims) {
    std::vector<Constraint> tidy = cs;
    if (!tidy_constraints(tidy)) return {};
    size_t d = dims.size() + 1;

    std::vector<ConeRow> rows;
    {
        ConeRow lambda;
        lambda.normal.assign(d, DtScalar());
        lambda.normal[d - 1] = DtScalar(1);
        rows.push_back(std::move(lambda));
    }
    for (const Constraint& c : tidy)
        rows.push_back(ConeRow{constraint_row(c, dims), c.relation == Relation::EQ0});

    ConeGenerators cg = detail::cone_generators(d, rows);

    std::vector<Generator> gens;
    bool has_point = false;
    for (const Vec& r : cg.rays) {
        const DtScalar& lambda = r[d - 1];
        if (lambda.sign() > 0) {
            has_point = true;
            Generator g;
            g.kind = GeneratorKind::POINT;
            Vec scaled(d - 1);
            for (size_t i = 0; i + 1 < d; ++i) scaled[i] = r[i] / lambda;
            g.coords = vec_coords(scaled, dims);
            gens.push_back(std::move(g));
        } else {
            Generator g;
            g.kind = GeneratorKind::RAY;
            g.coords = vec_coords(r, dims);
            gens.push_back(std::move(g));
        }
    }
    for (const Vec& l : cg.lines) {
        assert(l[d - 1].is_zero());
        Generator g;
        g.kind = GeneratorKind::LINE;
        g.coords = vec_coords(l, dims);
        gens.push_back(std::move(g));
    }
    if (!has_point) return {};  // infeasible
    return tidy_generators(std::move(gens));
}

std::vector<Constraint> generators_to_constraints(const std::vector<Generator>& gs,
                                                  const std::vector<std::string>& dims) {
    std::vector<Generator> tidy = tidy_generators(gs);
    bool has_point = std::any_of(tidy.begin(), tidy.end(), [](const Generator& g) {
        return g.kind == GeneratorKind::POINT;
    });
    if (!has_point) return {unsat_constraint()};

    size_t d = dims.size() + 1;
    std::vector<ConeRow> rows;
    for (const Generator& g : tidy)
        rows.push_back(ConeRow{generator_row(g, dims), g.kind == GeneratorKind::LINE});

    // Generators act as constraints on the dual space; the dual cone's
    // extreme rays are the facets, its lines the equalities.
    ConeGenerators dual = detail::cone_generators(d, rows);

    std::vector<Constraint> cs;
    for (const Vec& r : dual.rays) {
        LinearExpr e{r[d - 1]};
        for (size_t i = 0; i + 1 < d; ++i)
            if (!r[i].is_zero()) e.set_coeff(dims[i], r[i]);
        if (e.is_constant()) continue;  // the lambda >= 0 tautology
        cs.push_back(Constraint(std::move(e), Relation::GEQ0));
    }
    for (const Vec& l : dual.lines) {
        LinearExpr e{l[d - 1]};
        for (size_t i = 0; i + 1 < d; ++i)
            if (!l[i].is_zero()) e.set_coeff(dims[i], l[i]);
        assert(!e.is_constant());
        cs.push_back(Constraint(std::move(e), Relation::EQ0));
    }
    tidy_constraints(cs);
    return cs;
}

Polyhedron Polyhedron::universe(std::vector<std::string> dims) {
    return from_constraints(std::move(dims), {});
}

Polyhedron Polyhedron::empty_set(std::vector<std::string> dims) {
    Polyhedron p;
    p.dims_ = std::make_shared<const std::vector<std::string>>(std::move(dims));
    p.cons_ = std::vector<Constraint>{unsat_constraint()};
    p.min_cons_ = p.cons_;
    p.gens_ = std::vector<Generator>{};
    return p;
}

Polyhedron Polyhedron::from_constraints(std::vector<std::string> dims,
                                        std::vector<Constraint> cs) {
    if (!tidy_constraints(cs)) return empty_set(std::move(dims));
    Polyhedron p;
    p.dims_ = std::make_shared<const std::vector<std::string>>(std::move(dims));
    p.cons_ = std::move(cs);
    return p;
}

Polyhedron Polyhedron::from_generators(std::vector<std::string> dims,
                                       std::vector<Generator> gs) {
    std::vector<Generator> tidy = tidy_generators(std::move(gs));
    if (tidy.empty()) return empty_set(std::move(dims));
    if (!std::any_of(tidy.begin(), tidy.end(),
                     [](const Generator& g) { return g.kind == GeneratorKind::POINT; }))
        throw std::logic_error("generator system without a point");
    Polyhedron p;
    p.dims_ = std::make_shared<const std::vector<std::string>>(std::move(dims));
    p.gens_ = std::move(tidy);
    return p;
}

Polyhedron::Polyhedron(const Polyhedron& o) { *this = o; }

Polyhedron& Polyhedron::operator=(const Polyhedron& o) {
    if (this == &o) return *this;
    std::lock_guard<std::mutex> lock(*o.sync_);
    dims_ = o.dims_;
    cons_ = o.cons_;
    min_cons_ = o.min_cons_;
    gens_ = o.gens_;
    return *this;
}

void Polyhedron::ensure_generators() const {
    std::lock_guard<std::mutex> lock(*sync_);
    if (gens_) return;
    assert(cons_);
    gens_ = constraints_to_generators(*cons_, *dims_);
}

void Polyhedron::ensure_min_constraints() const {
    ensure_generators();
    std::lock_guard<std::mutex> lock(*sync_);
    if (min_cons_) return;
    min_cons_ = generators_to_constraints(*gens_, *dims_);
}

const std::vector<Constraint>& Polyhedron::constraints() const {
    {
        std::lock_guard<std::mutex> lock(*sync_);
        if (cons_) return *cons_;
    }
    ensure_min_constraints();
    return *min_cons_;
}

const std::vector<Constraint>& Polyhedron::minimized_constraints() const {
    ensure_min_constraints();
    return *min_cons_;
}

const std::vector<Generator>& Polyhedron::generators() const {
    ensure_generators();
    return *gens_;
}

bool Polyhedron::is_empty() const {
    return generators().empty();
}

bool Polyhedron::is_universe() const {
    return !is_empty() && minimized_constraints().empty();
}

std::optional<DtScalar> Polyhedron::lower_bound(const std::string& var) const {
    const auto& gs = generators();
    if (gs.empty()) throw std::logic_error("bound of empty polyhedron");
    std::optional<DtScalar> best;
    for (const Generator& g : gs) {
        DtScalar c = g.coord(var);
        if (g.kind == GeneratorKind::RAY && c.sign() < 0) return std::nullopt;
        if (g.kind == GeneratorKind::LINE && !c.is_zero()) return std::nullopt;
        if (g.kind == GeneratorKind::POINT && (!best || c < *best)) best = c;
    }
    return best;
}

std::optional<DtScalar> Polyhedron::upper_bound(const std::string& var) const {
    const auto& gs = generators();
    if (gs.empty()) throw std::logic_error("bound of empty polyhedron");
    std::optional<DtScalar> best;
    for (const Generator& g : gs) {
        DtScalar c = g.coord(var);
        if (g.kind == GeneratorKind::RAY && c.sign() > 0) return std::nullopt;
        if (g.kind == GeneratorKind::LINE && !c.is_zero()) return std::nullopt;
        if (g.kind == GeneratorKind::POINT && (!best || c > *best)) best = c;
    }
    return best;
}

std::string Polyhedron::str() const {
    if (is_empty()) return "{ false }";
    const auto& cs = minimized_constraints();
    if (cs.empty()) return "{ true }";
    std::ostringstream out;
    out << "{ ";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out << ", ";
        out << cs[i].str();
    }
    out << " }";
    return out.str();
}

bool entails(const Polyhedron& p, const Constraint& c) {
    if (p.is_empty()) return true;
    for (const Generator& g : p.generators())
        if (!generator_satisfies(c, g)) return false;
    return true;
}

bool includes(const Polyhedron& p, const Polyhedron& q) {
    assert(p.dims() == q.dims());
    if (q.is_empty()) return true;
    if (p.is_empty()) return false;
    for (const Constraint& c : p.constraints())
        for (const Generator& g : q.generators())
            if (!generator_satisfies(c, g)) return false;
    return true;
}

bool is_empty(const Polyhedron& p) { return p.is_empty(); }

bool poly_equal(const Polyhedron& p, const Polyhedron& q) {
    return includes(p, q) && includes(q, p);
}

Polyhedron meet(const Polyhedron& p, const Polyhedron& q) {
    assert(p.dims() == q.dims());
    if (p.is_empty()) return p;
    if (q.is_empty()) return q;
    std::vector<Constraint> cs = p.constraints();
    const auto& qc = q.constraints();
    cs.insert(cs.end(), qc.begin(), qc.end());
    return Polyhedron::from_constraints(p.dims(), std::move(cs));
}

Polyhedron meet(const Polyhedron& p, const Constraint& c) {
    if (p.is_empty()) return p;
    std::vector<Constraint> cs = p.constraints();
    cs.push_back(c);
    return Polyhedron::from_constraints(p.dims(), std::move(cs));
}

Polyhedron join(const Polyhedron& p, const Polyhedron& q) {
    assert(p.dims() == q.dims());
    if (p.is_empty()) return q;
    if (q.is_empty()) return p;
    std::vector<Generator> gs = p.generators();
    const auto& qg = q.generators();
    gs.insert(gs.end(), qg.begin(), qg.end());
    return Polyhedron::from_generators(p.dims(), std::move(gs));
}

Polyhedron affine_image(const Polyhedron& p, const std::string& v, const LinearExpr& e) {
    if (p.is_empty()) return p;
    std::vector<Generator> out;
    for (Generator g : p.generators()) {
        DtScalar img;
        if (g.kind == GeneratorKind::POINT) {
            img = e.eval(g.coords);
        } else {
            // Homogeneous part only for directions.
            for (const auto& [var, k] : e.coeffs()) {
                DtScalar x = g.coord(var);
                if (!x.is_zero()) img = img + k * x;
            }
        }
        if (img.is_zero())
            g.coords.erase(v);
        else
            g.coords[v] = std::move(img);
        out.push_back(std::move(g));
    }
    return Polyhedron::from_generators(p.dims(), std::move(out));
}

Polyhedron forget(const Polyhedron& p, const std::string& v) {
    if (p.is_empty()) return p;
    std::vector<Generator> gs = p.generators();
    Generator line;
    line.kind = GeneratorKind::LINE;
    line.coords[v] = DtScalar(1);
    gs.push_back(std::move(line));
    return Polyhedron::from_generators(p.dims(), std::move(gs));
}

}  // namespace hyperpoly
