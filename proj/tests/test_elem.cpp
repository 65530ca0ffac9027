#include "doctest.h"

#include "arbor/elem.hpp"
#include "arbor/suites.hpp"
#include "oracles.hpp"

using namespace arbor;

static VectorField square_field() {
    // one driver component, one state dimension, f(y) = y^2
    Poly y = Poly::var(0);
    return {{y * y}};
}

static VectorField linear_field() {
    return {{Poly::var(0)}};
}

TEST_CASE("elementary differentials of small trees") {
    VectorField f = square_field();
    // f = y^2, f' = 2y, f'' = 2
    CHECK(upsilon_poly(parse_tree("[0:]"), f)[0] == parse_poly1("y^2"));
    CHECK(upsilon_poly(parse_tree("[0:[0:]]"), f)[0] == parse_poly1("2*y^3"));
    CHECK(upsilon_poly(parse_tree("[0:[0:][0:]]"), f)[0] == parse_poly1("2*y^4"));
    CHECK(upsilon_poly(parse_tree("[0:[0:[0:]]]"), f)[0] == parse_poly1("4*y^4"));
}

TEST_CASE("forest operator inserts derivatives of the observable") {
    VectorField f = square_field();
    std::vector<Poly> psi = {parse_poly1("y^3")};
    // two free vertices contract two derivatives of psi: f^2 psi''
    Poly got = upsilon_op_poly(parse_forest("[0:]*[0:]"), f, psi)[0];
    CHECK(got == parse_poly1("6*y^5"));
    // empty forest leaves psi alone
    CHECK(upsilon_op_poly(Forest{}, f, psi)[0] == psi[0]);
}

TEST_CASE("multi-index elementary differentials match the projection") {
    Poly fp = parse_poly1("y^2");
    VectorField f = {{fp}};
    std::vector<Rational> pts = {Rational(2), Rational(-1), Rational(1, 2)};
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : trees_of_size(n))
            for (const auto& y : pts) {
                Rational lhs = upsilon_m(phi(forest_of(t)), fp, y);
                Rational rhs = upsilon(forest_of(t), f, {y})[0];
                CHECK(lhs == rhs);
            }
}

TEST_CASE("jet arithmetic truncates consistently") {
    Jet a(4, 1);
    a.a[1] = 2;  // 1 + 2h
    Jet b = a * a;
    CHECK(b.a == std::vector<Rational>{1, 4, 4, 0, 0});
    Jet s = b.shifted(2);
    CHECK(s.a == std::vector<Rational>{0, 0, 1, 4, 4});
    std::vector<Jet> p = jet_point({Rational(3), Rational(-1)}, 2);
    CHECK(p[0].a == std::vector<Rational>{3, 0, 0});
    CHECK(p[1].a == std::vector<Rational>{-1, 0, 0});
}

TEST_CASE("series for the linear field sums to the exponential") {
    // with f(y) = y every elementary differential at 1 equals 1, so the
    // order-N series at step h is the Taylor polynomial of e^h; the identity
    // sum over trees of 1/(S(t) gamma(t)) = 1/n! carries the whole check
    VectorField f = linear_field();
    TreeCharacter exact;
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : trees_of_size(n))
            exact.values[t] = Rational(1) / Rational(arbor_tests::tree_factorial(t));

    Jet series = bseries_jet(jet_point({Rational(1)}, 6), exact, f, 6)[0];
    Rational factorial = 1;
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        CHECK(series.a[static_cast<size_t>(n)] == Rational(1) / factorial);
    }
}

TEST_CASE("multi-index series for the linear field sums to the exponential") {
    Poly f = Poly::var(0);
    MCharacter exact;
    for (int n = 1; n <= 6; ++n)
        for (const auto& b : populated_singles(n)) {
            // push the exact tree character through the fertility projection
            Rational total = 0;
            for (const auto& t : trees_of_size(n))
                if (phi_tree(t) == b)
                    total += Rational(symmetry_m_single(b)) /
                             (Rational(symmetry_factor(t)) *
                              Rational(arbor_tests::tree_factorial(t)));
            exact.values[b] = total;
        }
    Jet series = bseries_m_jet(Jet(6, Rational(1)), exact, f, 6);
    Rational factorial = 1;
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        CHECK(series.a[static_cast<size_t>(n)] == Rational(1) / factorial);
    }
}

TEST_CASE("grafting identity holds on fixed inputs") {
    VectorField f;
    {
        // two driver components, two state dimensions, quadratic entries
        Poly y0 = Poly::var(0), y1 = Poly::var(1);
        f = {{y1 * y1, y0}, {y0 * y1, y0 + y1}};
    }
    std::vector<Rational> y = {Rational(1, 2), Rational(-2)};
    CHECK(check_graft_morphism(parse_forest("[0:]"), parse_tree("[1:]"), f, y));
    CHECK(check_graft_morphism(parse_forest("[0:[1:]]*[1:]"), parse_tree("[1:[0:][0:]]"), f, y));
}

TEST_CASE("identity suites pass on fresh seeds") {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, 20260816, 5, 4);
        CHECK(r.failures == 0);
        CHECK(r.cases == 5);
        for (const auto& c : r.record) {
            CHECK(c.pass);
            CHECK_FALSE(c.inputs.empty());
        }
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("nonsense", 1, 1, 3), std::invalid_argument);
}

TEST_CASE("character convolution respects the unit") {
    SplitMix64 rng(5);
    TreeCharacter z = random_tree_character(rng, 4, {0});
    TreeCharacter unit;  // zero on every tree: acts as the counit
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : trees_of_size(n)) {
            Rational left = convolve_bck(unit, z, forest_of(t));
            Rational right = convolve_bck(z, unit, forest_of(t));
            CHECK(left == z(t));
            CHECK(right == z(t));
        }
}
