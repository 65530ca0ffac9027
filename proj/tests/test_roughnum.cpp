#include "doctest.h"

#include <cmath>

#include "arbor/roughnum.hpp"
#include "oracles.hpp"

using namespace arbor;

TEST_CASE("lift of the linear path matches the closed form") {
    RoughLift x(poly_driver());
    const double windows[][2] = {{0.0, 1.0}, {0.25, 0.75}, {0.1, 0.9}};
    for (const auto& w : windows)
        for (int n = 0; n <= 4; ++n)
            for (const auto& f : forests_of_size(n)) {
                double got = x.eval(w[0], w[1], f);
                double want = arbor_tests::oracle_linear_path_lift(f, w[0], w[1]);
                CHECK(std::fabs(got - want) <= 1e-10);
            }
}

TEST_CASE("lift conventions at the window edges") {
    RoughLift x(poly_driver());
    CHECK(x.eval(0.2, 0.8, Forest{}) == 1.0);
    CHECK(x.eval(0.5, 0.5, forest_of(node(0))) == 0.0);
    CHECK_THROWS_AS(x.eval(0.8, 0.2, forest_of(node(0))), std::invalid_argument);
    CHECK_THROWS_AS(x.eval(0.0, 1.0, forest_of(node(7))), std::invalid_argument);
}

TEST_CASE("lift is multiplicative over juxtaposition") {
    RoughLift x(trig_driver());
    auto labels = label_vec(x.dim());
    for (int i = 1; i <= 2; ++i)
        for (const auto& a : forests_of_size(i, labels))
            for (int j = 1; i + j <= 4 && j <= 2; ++j)
                for (const auto& b : forests_of_size(j, labels)) {
                    double lhs = x.eval(0.2, 0.9, forest_mul(a, b));
                    double rhs = x.eval(0.2, 0.9, a) * x.eval(0.2, 0.9, b);
                    CHECK(std::fabs(lhs - rhs) <= 1e-10);
                }
}

TEST_CASE("window splitting identity holds to quadrature accuracy") {
    RoughLift x(trig_driver());
    ChenReport rep = check_chen(x, 0.0, 0.4, 1.0, 3);
    CHECK(rep.rows.size() > 0);
    CHECK(rep.max_defect <= 1e-8);
    CHECK(rep.tol == 1e-8);
    CHECK(rep.pass);

    // degenerate middle point: the split collapses to the identity
    ChenReport rep2 = check_chen(x, 0.3, 0.3, 0.8, 2);
    CHECK(rep2.max_defect <= 1e-10);

    // an unreachable tolerance flips the verdict without changing the rows
    ChenReport rep3 = check_chen(x, 0.0, 0.4, 1.0, 3, 1e-300);
    CHECK(rep3.max_defect == rep.max_defect);
    CHECK(!rep3.pass);
}

TEST_CASE("window splitting defect shrinks as the grid refines") {
    Driver d = trig_driver();
    RoughLift coarse(d, 1), fine(d, 2);
    double dc = check_chen(coarse, 0.0, 0.45, 1.0, 3).max_defect;
    double df = check_chen(fine, 0.0, 0.45, 1.0, 3).max_defect;
    CHECK(df <= dc * 0.5 + 1e-13);
}

TEST_CASE("growth ratios stay bounded for smooth drivers") {
    RoughLift x(trig_driver());
    auto rows = check_hoelder(x, 1.0, 2);
    CHECK(rows.size() > 0);
    for (const auto& r : rows) {
        CHECK(std::isfinite(r.ratio));
        CHECK(r.ratio < 10.0);
    }
}

TEST_CASE("stepper is exact on a vanishing field") {
    RoughLift x(poly_driver());
    VectorField f = {{Poly::constant(0)}};
    auto y1 = rde_step({1.25}, x, f, 0.0, 0.5, 3);
    CHECK(y1[0] == 1.25);
}

TEST_CASE("stepper reproduces the exponential to the stated order") {
    RoughLift x(poly_driver());
    VectorField f = {{Poly::var(0)}};
    for (int order = 2; order <= 3; ++order) {
        // single step from 1: defect against e^h decays like h^(order+1)
        std::vector<double> hs, errs;
        for (int k = 2; k <= 6; ++k) {
            double h = std::pow(2.0, -k);
            double got = rde_step({1.0}, x, f, 0.0, h, order)[0];
            double err = std::fabs(got - std::exp(h));
            hs.push_back(h);
            errs.push_back(err);
        }
        // least-squares slope of log2(err) against log2(h)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = static_cast<int>(hs.size());
        for (int i = 0; i < m; ++i) {
            double lx = std::log2(hs[static_cast<size_t>(i)]);
            double ly = std::log2(errs[static_cast<size_t>(i)] + 1e-300);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        CHECK(slope >= order + 1 - 0.3);
    }
}

TEST_CASE("reference integrator tracks the exponential") {
    VectorField f = {{Poly::var(0)}};
    ReferencePath ref(poly_driver(), f, {1.0}, 1.0, 4096);
    CHECK(std::fabs(ref.at(1.0)[0] - std::exp(1.0)) <= 1e-12);
    CHECK(std::fabs(ref.at(0.5)[0] - std::exp(0.5)) <= 1e-12);
}

TEST_CASE("controlled remainder slopes clear their thresholds") {
    RoughLift x(poly_driver());
    VectorField f = {{Poly::var(0)}};
    for (int order = 2; order <= 3; ++order) {
        ControlledReport rep = check_controlled(x, f, {1.0}, order);
        CHECK(rep.rows.size() > 0);
        for (const auto& row : rep.rows) {
            CHECK(row.pass);
            CHECK(row.slope >= row.required);
        }
    }

    // the slack parameter shifts every threshold uniformly
    ControlledReport strict = check_controlled(x, f, {1.0}, 2, 0.1);
    for (const auto& row : strict.rows)
        CHECK(row.required == doctest::Approx((2.0 - row.size) - 0.1));
}

TEST_CASE("controlled rows go quiet on a vanishing field") {
    RoughLift x(poly_driver());
    VectorField f = {{Poly::constant(0)}};
    ControlledReport rep = check_controlled(x, f, {1.0}, 3);
    CHECK(rep.pass);
    for (const auto& row : rep.rows)
        for (double r : row.remainders) CHECK(std::fabs(r) <= 1e-12);
}
