#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperpoly/widening.hpp"
#include "support/random_polys.hpp"

using namespace hyperpoly;

namespace {

DtScalar dt() { return DtScalar::dt(); }

Constraint geq(const std::string& v, DtScalar bound) {
    LinearExpr e = LinearExpr::variable(v);
    e.set_constant(-bound);
    return Constraint(e, Relation::GEQ0);
}

Constraint leq(const std::string& v, DtScalar bound) {
    LinearExpr e = -LinearExpr::variable(v);
    e.set_constant(bound);
    return Constraint(e, Relation::GEQ0);
}

Polyhedron interval(const std::string& v, DtScalar lo, DtScalar hi) {
    return Polyhedron::from_constraints({v}, {geq(v, lo), leq(v, hi)});
}

Polyhedron point(const std::string& v, DtScalar at) {
    LinearExpr e = LinearExpr::variable(v);
    e.set_constant(-at);
    return Polyhedron::from_constraints({v}, {Constraint(e, Relation::EQ0)});
}

Polyhedron lower_half(const std::string& v, DtScalar lo) {
    return Polyhedron::from_constraints({v}, {geq(v, lo)});
}

}  // namespace

TEST_CASE("standard widening base cases") {
    Polyhedron p = interval("x", DtScalar(0), DtScalar(2));
    CHECK(poly_equal(widen_standard(Polyhedron::empty_set({"x"}), p), p));

    CHECK(poly_equal(widen_standard(interval("x", DtScalar(0), DtScalar(1)), p),
                     lower_half("x", DtScalar(0))));

    // Infinitesimal growth widens the same way.
    CHECK(poly_equal(widen_standard(interval("x", DtScalar(0), DtScalar(1)),
                                    interval("x", DtScalar(0), DtScalar(1) + dt())),
                     lower_half("x", DtScalar(0))));
}

TEST_CASE("widening up to M") {
    Polyhedron p1 = interval("x", DtScalar(0), DtScalar(1));
    Polyhedron p2 = interval("x", DtScalar(0), DtScalar(2));

    CHECK(poly_equal(widen_upto(p1, p2, {leq("x", DtScalar(5))}),
                     interval("x", DtScalar(0), DtScalar(5))));

    // p2 violates x <= 3/2, so the bound is not retained.
    CHECK(poly_equal(widen_upto(p1, p2, {leq("x", DtScalar(Rational(3, 2)))}),
                     lower_half("x", DtScalar(0))));

    // Equalities take part as their inequality halves: x >= 1 survives
    // through the standard part, x <= 5 through M.
    CHECK(poly_equal(widen_upto(point("x", DtScalar(1)),
                                interval("x", DtScalar(1), DtScalar(1) + dt()),
                                {leq("x", DtScalar(5)), geq("x", DtScalar(1))}),
                     interval("x", DtScalar(1), DtScalar(5))));

    // Empty m reduces to the standard widening.
    CHECK(poly_equal(widen_upto(p1, p2, {}), widen_standard(p1, p2)));
}

TEST_CASE("widen_step honors the delay") {
    WideningConfig cfg;
    cfg.kind = WideningKind::UPTO_M;
    cfg.m_set = {leq("t", DtScalar(1)), geq("t", DtScalar(1))};

    Polyhedron t0 = point("t", DtScalar(0));
    Polyhedron grown = interval("t", DtScalar(0), dt());

    cfg.delay = 1;
    CHECK(poly_equal(widen_step(cfg, 0, t0, grown), grown));  // delayed: plain join

    cfg.delay = 0;
    CHECK(poly_equal(widen_step(cfg, 0, t0, grown), interval("t", DtScalar(0), DtScalar(1))));

    // Covering plus idempotence on equal arguments.
    for (unsigned step : {0u, 5u})
        CHECK(poly_equal(widen_step(cfg, step, grown, grown), grown));
}

TEST_CASE("uniform_bound counts defining inequalities") {
    WideningConfig std_cfg;
    std_cfg.kind = WideningKind::STANDARD;
    CHECK(uniform_bound(interval("x", DtScalar(0), DtScalar(1)), std_cfg) == 2);

    WideningConfig m_cfg;
    m_cfg.kind = WideningKind::UPTO_M;
    for (int i = 0; i < 6; ++i) m_cfg.m_set.push_back(leq("x", DtScalar(i)));
    CHECK(uniform_bound(interval("x", DtScalar(0), DtScalar(1)), m_cfg) == 8);

    CHECK(uniform_bound(Polyhedron::universe({"x"}), std_cfg) == 0);
}

TEST_CASE("property: covering for both operators") {
    std::mt19937_64 rng(616);
    std::vector<Constraint> m;
    int done = 0;
    while (done < 1100) {
        auto dims = test::random_dims(rng);
        Polyhedron p1 = test::random_polyhedron(rng, dims, true);
        Polyhedron p2 = join(p1, test::random_polyhedron(rng, dims, true));
        if (done % 3 == 0) {
            m.clear();
            for (int i = 0; i < 3; ++i) m.push_back(test::random_constraint(rng, dims, true));
        }
        ++done;

        Polyhedron ws = widen_standard(p1, p2);
        CHECK(includes(ws, p1));
        CHECK(includes(ws, p2));

        Polyhedron wm = widen_upto(p1, p2, m);
        CHECK(includes(wm, p1));
        CHECK(includes(wm, p2));
    }
}

TEST_CASE("property: results only reuse input constraints (up to canonical scaling)") {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 250) {
        auto dims = test::random_dims(rng);
        Polyhedron p1 = test::random_polyhedron(rng, dims, true, 4);
        if (p1.is_empty()) continue;
        Polyhedron p2 = join(p1, test::random_polyhedron(rng, dims, true, 4));
        std::vector<Constraint> m;
        for (int i = 0; i < 2; ++i) m.push_back(test::random_constraint(rng, dims, true));
        ++done;

        std::set<Constraint> allowed;
        for (const Constraint& c : split_inequalities(p1.minimized_constraints()))
            allowed.insert(c);
        for (const Constraint& c : split_inequalities(p2.minimized_constraints()))
            allowed.insert(c);
        for (const Constraint& c : m) allowed.insert(c);

        Polyhedron ws = widen_standard(p1, p2);
        for (const Constraint& c : ws.constraints()) CHECK(allowed.count(c) == 1);
        Polyhedron wm = widen_upto(p1, p2, m);
        for (const Constraint& c : wm.constraints()) CHECK(allowed.count(c) == 1);
    }
}

TEST_CASE("property: uniform termination within the bound") {
    std::mt19937_64 rng(90210);
    const int seeds = 22;
    const int chains_per_seed = 110;
    for (int s = 0; s < seeds; ++s) {
        auto dims = test::random_dims(rng);
        Polyhedron p0 = test::random_nonempty(rng, dims, s % 2 == 0, 4);

        WideningConfig cfg;
        if (s % 2 == 0) {
            cfg.kind = WideningKind::UPTO_M;
            for (int i = 0; i < 3; ++i)
                cfg.m_set.push_back(test::random_constraint(rng, dims, true));
        } else {
            cfg.kind = WideningKind::STANDARD;
        }
        unsigned bound = uniform_bound(p0, cfg);

        for (int c = 0; c < chains_per_seed; ++c) {
            bool with_dt = c % 2 == 0;  // include chains growing by infinitesimals
            // Ascending chain from p0.
            std::vector<Polyhedron> x{p0};
            for (unsigned k = 0; k + 1 < bound + 2; ++k)
                x.push_back(join(x.back(), test::random_polyhedron(rng, dims, with_dt, 3)));

            Polyhedron y = p0;
            bool stabilized = false;
            for (unsigned j = 0; j + 1 < x.size(); ++j) {
                Polyhedron next = cfg.kind == WideningKind::STANDARD
                                      ? widen_standard(y, x[j + 1])
                                      : widen_upto(y, x[j + 1], cfg.m_set);
                if (poly_equal(next, y)) {
                    CHECK(j <= bound);
                    stabilized = true;
                    break;
                }
                y = next;
            }
            CHECK(stabilized);
        }
    }
}
