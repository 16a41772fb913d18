#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperpoly/polyhedron.hpp"
#include "support/oracles.hpp"
#include "support/random_polys.hpp"

using namespace hyperpoly;

namespace {

DtScalar dt() { return DtScalar::dt(); }

Constraint geq(const std::string& v, DtScalar bound) {  // v >= bound
    LinearExpr e = LinearExpr::variable(v);
    e.set_constant(-bound);
    return Constraint(e, Relation::GEQ0);
}

Constraint leq(const std::string& v, DtScalar bound) {  // v <= bound
    LinearExpr e = -LinearExpr::variable(v);
    e.set_constant(bound);
    return Constraint(e, Relation::GEQ0);
}

Constraint eq(const std::string& v, DtScalar bound) {
    LinearExpr e = LinearExpr::variable(v);
    e.set_constant(-bound);
    return Constraint(e, Relation::EQ0);
}

Polyhedron interval(const std::string& v, DtScalar lo, DtScalar hi) {
    return Polyhedron::from_constraints({v}, {geq(v, lo), leq(v, hi)});
}

size_t count_kind(const std::vector<Generator>& gs, GeneratorKind k) {
    size_t n = 0;
    for (const auto& g : gs) n += g.kind == k;
    return n;
}

}  // namespace

TEST_CASE("constraints_to_generators on intervals matches the pairwise-intersection oracle") {
    std::vector<std::string> dims{"x"};
    std::vector<Constraint> cs{geq("x", DtScalar(0)), leq("x", DtScalar(1))};
    auto gens = constraints_to_generators(cs, dims);
    auto expected = test::brute_force_vertices(cs, dims);
    REQUIRE(expected.size() == 2);
    CHECK(count_kind(gens, GeneratorKind::POINT) == 2);
    CHECK(count_kind(gens, GeneratorKind::RAY) == 0);
    for (const auto& v : expected) {
        bool found = false;
        for (const auto& g : gens)
            if (g.kind == GeneratorKind::POINT && g.coords == v) found = true;
        CHECK(found);
    }
}

TEST_CASE("constraints_to_generators: half line and universe") {
    std::vector<std::string> dims{"x"};
    auto half = constraints_to_generators({geq("x", DtScalar(0))}, dims);
    CHECK(count_kind(half, GeneratorKind::POINT) == 1);
    CHECK(count_kind(half, GeneratorKind::RAY) == 1);
    for (const auto& g : half) {
        if (g.kind == GeneratorKind::POINT) CHECK(g.coords.empty());  // the origin
        if (g.kind == GeneratorKind::RAY) CHECK(g.coord("x").sign() > 0);
    }

    auto univ = constraints_to_generators({}, dims);
    CHECK(count_kind(univ, GeneratorKind::POINT) == 1);
    CHECK(count_kind(univ, GeneratorKind::LINE) == 1);

    auto infeasible = constraints_to_generators({geq("x", DtScalar(1)), leq("x", DtScalar(0))}, dims);
    CHECK(infeasible.empty());
}

TEST_CASE("generators_to_constraints: hull of two points with an infinitesimal endpoint") {
    std::vector<std::string> dims{"x"};
    Generator p0{GeneratorKind::POINT, {}};
    Generator p1{GeneratorKind::POINT, {{"x", DtScalar(1) + dt()}}};
    auto cs = generators_to_constraints({p0, p1}, dims);
    CHECK(cs.size() == 2);
    // Both endpoints and the midpoint satisfy every constraint.
    for (const auto& pt : {std::map<std::string, DtScalar>{},
                           std::map<std::string, DtScalar>{{"x", DtScalar(1) + dt()}},
                           std::map<std::string, DtScalar>{{"x", (DtScalar(1) + dt()) / DtScalar(2)}}})
        for (const auto& c : cs) CHECK(c.satisfied_by(pt));
    Polyhedron rebuilt = Polyhedron::from_constraints(dims, cs);
    CHECK(poly_equal(rebuilt, interval("x", DtScalar(0), DtScalar(1) + dt())));
}

TEST_CASE("generators_to_constraints: ray and empty") {
    std::vector<std::string> dims{"x"};
    Generator origin{GeneratorKind::POINT, {}};
    Generator up{GeneratorKind::RAY, {{"x", DtScalar(1)}}};
    auto cs = generators_to_constraints({origin, up}, dims);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].str() == "x >= 0");

    auto none = generators_to_constraints({}, dims);
    Polyhedron p = Polyhedron::from_constraints(dims, none);
    CHECK(p.is_empty());
}

TEST_CASE("meet") {
    Polyhedron a = Polyhedron::from_constraints({"x"}, {geq("x", DtScalar(0))});
    Polyhedron b = Polyhedron::from_constraints({"x"}, {leq("x", DtScalar(1) - DtScalar(2) * dt())});
    CHECK(poly_equal(meet(a, b), interval("x", DtScalar(0), DtScalar(1) - DtScalar(2) * dt())));

    Polyhedron u = Polyhedron::universe({"x"});
    Polyhedron p = interval("x", DtScalar(0), DtScalar(1));
    CHECK(poly_equal(meet(p, u), p));

    // 1 > 1 - dt, so the slab is empty.
    Polyhedron c = meet(Polyhedron::from_constraints({"x"}, {geq("x", DtScalar(1))}),
                        Polyhedron::from_constraints({"x"}, {leq("x", DtScalar(1) - dt())}));
    CHECK(c.is_empty());
}

TEST_CASE("join") {
    Polyhedron p0 = Polyhedron::from_constraints({"x"}, {eq("x", DtScalar(0))});
    Polyhedron p1 = Polyhedron::from_constraints({"x"}, {eq("x", DtScalar(1) + dt())});
    CHECK(poly_equal(join(p0, p1), interval("x", DtScalar(0), DtScalar(1) + dt())));

    Polyhedron e = Polyhedron::empty_set({"x"});
    CHECK(poly_equal(join(p0, e), p0));

    // Hull of a horizontal and a vertical segment: triangle (0,0),(1,0),(0,1).
    std::vector<std::string> xy{"x", "y"};
    Polyhedron h = Polyhedron::from_constraints(
        xy, {geq("x", DtScalar(0)), leq("x", DtScalar(1)), eq("y", DtScalar(0))});
    Polyhedron v = Polyhedron::from_constraints(
        xy, {eq("x", DtScalar(0)), geq("y", DtScalar(0)), leq("y", DtScalar(1))});
    Polyhedron hull = join(h, v);
    auto verts = hull.generators();
    CHECK(count_kind(verts, GeneratorKind::POINT) == 3);
    // Oracle: vertices of the expected constraint description.
    std::vector<Constraint> expect{geq("x", DtScalar(0)), geq("y", DtScalar(0))};
    {
        LinearExpr e2 = -LinearExpr::variable("x") - LinearExpr::variable("y");
        e2.set_constant(DtScalar(1));
        expect.push_back(Constraint(e2, Relation::GEQ0));
    }
    auto oracle_verts = test::brute_force_vertices(expect, xy);
    CHECK(oracle_verts.size() == 3);
    for (const auto& ov : oracle_verts) {
        bool found = false;
        for (const auto& g : verts)
            if (g.kind == GeneratorKind::POINT && g.coords == ov) found = true;
        CHECK(found);
    }
    CHECK(poly_equal(hull, Polyhedron::from_constraints(xy, expect)));
}

TEST_CASE("includes") {
    Polyhedron wide = interval("x", DtScalar(0), DtScalar(1) + dt());
    Polyhedron narrow = interval("x", DtScalar(0), DtScalar(1));
    CHECK(includes(wide, narrow));
    CHECK(!includes(narrow, wide));
    CHECK(includes(narrow, Polyhedron::empty_set({"x"})));
}

TEST_CASE("is_empty") {
    CHECK(meet(Polyhedron::from_constraints({"x"}, {geq("x", DtScalar(1))}),
               Polyhedron::from_constraints({"x"}, {leq("x", DtScalar(0))}))
              .is_empty());
    CHECK(!Polyhedron::universe({"x"}).is_empty());
    // 1 <= x <= 1 + dt contains x = 1.
    CHECK(!interval("x", DtScalar(1), DtScalar(1) + dt()).is_empty());
}

TEST_CASE("affine_image") {
    // x := x + dt on a point.
    Polyhedron pt = Polyhedron::from_constraints({"x"}, {eq("x", DtScalar(1))});
    LinearExpr shift = LinearExpr::variable("x");
    shift.set_constant(dt());
    CHECK(poly_equal(affine_image(pt, "x", shift),
                     Polyhedron::from_constraints({"x"}, {eq("x", DtScalar(1) + dt())})));

    // Translation of an interval.
    Polyhedron seg = interval("x", DtScalar(0), DtScalar(1));
    LinearExpr down = LinearExpr::variable("x");
    down.set_constant(-(DtScalar(2) * dt()));
    CHECK(poly_equal(affine_image(seg, "x", down),
                     interval("x", -(DtScalar(2) * dt()), DtScalar(1) - DtScalar(2) * dt())));

    // Scaling by (1 - 3dt): derived from the image of both endpoints;
    // the factor is positive, so orientation is preserved.
    DtScalar k = DtScalar(1) - DtScalar(3) * dt();
    REQUIRE(k.sign() == 1);
    Polyhedron band = interval("x", DtScalar(18), DtScalar(22));
    LinearExpr scale = LinearExpr::variable("x").scaled(k);
    CHECK(poly_equal(affine_image(band, "x", scale),
                     interval("x", DtScalar(18) * k, DtScalar(22) * k)));
}

TEST_CASE("forget") {
    std::vector<std::string> xy{"x", "y"};
    Polyhedron p = Polyhedron::from_constraints(xy, {eq("x", DtScalar(1)), eq("y", DtScalar(2))});
    Polyhedron f = forget(p, "y");
    CHECK(poly_equal(f, Polyhedron::from_constraints(xy, {eq("x", DtScalar(1))})));

    CHECK(forget(Polyhedron::empty_set(xy), "y").is_empty());

    // 0 <= x <= y <= 1, forget y: Fourier-Motzkin oracle.
    std::vector<Constraint> cs;
    cs.push_back(geq("x", DtScalar(0)));
    {
        LinearExpr e = LinearExpr::variable("y") - LinearExpr::variable("x");
        cs.push_back(Constraint(e, Relation::GEQ0));  // y >= x
    }
    cs.push_back(leq("y", DtScalar(1)));
    Polyhedron q = Polyhedron::from_constraints(xy, cs);
    Polyhedron projected = forget(q, "y");
    Polyhedron oracle = Polyhedron::from_constraints(xy, test::fourier_motzkin(cs, "y"));
    CHECK(poly_equal(projected, oracle));
    CHECK(poly_equal(projected,
                     Polyhedron::from_constraints(xy, {geq("x", DtScalar(0)), leq("x", DtScalar(1))})));
}

TEST_CASE("entails") {
    Polyhedron p = interval("x", DtScalar(0), DtScalar(1));
    CHECK(entails(p, leq("x", DtScalar(5))));
    CHECK(!entails(interval("x", DtScalar(0), DtScalar(1) + dt()), leq("x", DtScalar(1))));
    CHECK(entails(Polyhedron::empty_set({"x"}), geq("x", DtScalar(1000000))));
}

TEST_CASE("bounds") {
    Polyhedron p = interval("x", DtScalar(1) - DtScalar(2) * dt(), DtScalar(12) + dt());
    CHECK(*p.lower_bound("x") == DtScalar(1) - DtScalar(2) * dt());
    CHECK(*p.upper_bound("x") == DtScalar(12) + dt());
    Polyhedron h = Polyhedron::from_constraints({"x"}, {geq("x", DtScalar(0))});
    CHECK(!h.upper_bound("x").has_value());
    CHECK(*h.lower_bound("x") == DtScalar(0));
}

TEST_CASE("property: double-description round trip preserves the set") {
    std::mt19937_64 rng(20250101);
    int done = 0;
    while (done < 350) {
        auto dims = test::random_dims(rng);
        Polyhedron p = test::random_polyhedron(rng, dims, true);
        if (p.is_empty()) continue;
        ++done;
        auto gens = constraints_to_generators(p.constraints(), dims);
        auto cs = generators_to_constraints(gens, dims);
        Polyhedron q = Polyhedron::from_constraints(dims, cs);
        CHECK(includes(p, q));
        CHECK(includes(q, p));
    }
}

TEST_CASE("property: lattice laws") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 250; ++trial) {
        auto dims = test::random_dims(rng);
        Polyhedron p = test::random_polyhedron(rng, dims, true);
        Polyhedron q = test::random_polyhedron(rng, dims, true);
        Polyhedron r = test::random_polyhedron(rng, dims, true);

        Polyhedron m = meet(p, q), j = join(p, q);
        CHECK(includes(p, m));
        CHECK(includes(q, m));
        CHECK(includes(j, p));
        CHECK(includes(j, q));
        CHECK(includes(p, p));  // reflexive
        // Transitivity: m <= p <= j.
        CHECK(includes(j, m));
        // Monotonicity of meet/join in the first argument.
        Polyhedron pr = meet(p, r);
        CHECK(includes(join(p, r), join(m, r)));
        CHECK(includes(pr, meet(m, r)));
    }
}

TEST_CASE("property: membership agrees between the representations (exact LP)") {
    std::mt19937_64 rng(777);
    const Rational at(1, 1000000);
    std::uniform_int_distribution<int> pick(-7, 7);
    std::uniform_int_distribution<int> den(1, 3);
    int done = 0, inside = 0;
    while (done < 120) {
        auto dims = test::random_dims(rng);
        Polyhedron p = test::random_polyhedron(rng, dims, true, 6);
        if (p.is_empty()) continue;
        ++done;
        for (int s = 0; s < 6; ++s) {
            std::map<std::string, Rational> sample;
            for (const auto& v : dims) sample[v] = Rational(pick(rng), den(rng));
            bool by_constraints = true;
            for (const Constraint& c : p.constraints()) {
                Rational val = c.expr.constant().eval_at(at);
                for (const auto& [v, k] : c.expr.coeffs())
                    val += k.eval_at(at) * sample[v];
                bool ok = c.relation == Relation::EQ0 ? val.is_zero() : val >= Rational(0);
                if (!ok) by_constraints = false;
            }
            bool by_generators = test::combination_member(p.generators(), sample, dims, at);
            CHECK(by_constraints == by_generators);
            inside += by_constraints;
        }
    }
    CHECK(inside > 0);  // the test would be vacuous if every sample missed
}

TEST_CASE("property: invertible affine image composes with its inverse to the identity") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> pick(-3, 3);
    int done = 0;
    while (done < 200) {
        auto dims = test::random_dims(rng, 2);
        Polyhedron p = test::random_polyhedron(rng, dims, true);
        if (p.is_empty()) continue;
        ++done;
        const std::string& v = dims[0];
        // v := a*v + b*w + c with a invertible.
        DtScalar a = DtScalar(Rational(pick(rng)));
        if (a.is_zero()) a = DtScalar(1) + dt();
        LinearExpr fwd = LinearExpr::variable(v).scaled(a);
        DtScalar b;
        if (dims.size() > 1) {
            b = DtScalar(Rational(pick(rng)));
            fwd = fwd + LinearExpr::variable(dims[1]).scaled(b);
        }
        DtScalar c = DtScalar(Rational(pick(rng))) + DtScalar(Rational(pick(rng))) * dt();
        fwd.set_constant(c);

        LinearExpr inv = LinearExpr::variable(v).scaled(a.inverse());
        if (dims.size() > 1)
            inv = inv + LinearExpr::variable(dims[1]).scaled(-(b / a));
        inv.set_constant(-(c / a));

        Polyhedron round = affine_image(affine_image(p, v, fwd), v, inv);
        CHECK(poly_equal(round, p));
    }
}

TEST_CASE("zero-dimensional polyhedra") {
    Polyhedron u = Polyhedron::universe({});
    CHECK(!u.is_empty());
    CHECK(u.is_universe());
    Polyhedron e = Polyhedron::empty_set({});
    CHECK(e.is_empty());
    CHECK(poly_equal(join(u, e), u));
    CHECK(meet(u, e).is_empty());
    CHECK(includes(u, e));
    CHECK(!includes(e, u));
}
