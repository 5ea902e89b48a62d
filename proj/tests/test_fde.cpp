#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "involution/catalog.hpp"
#include "involution/fde.hpp"

using namespace invo;

TEST_CASE("closed forms") {
    CHECK(closed_form(0.5, 1.0, 3.0) == doctest::Approx(2.0));
    CHECK(closed_form(-0.5, 1.0, std::exp(1.0) - 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    for (double t : {0.0, 0.5, 4.0}) CHECK(closed_form(0.0, 3.0, t) == doctest::Approx(3.0));
    CHECK_THROWS_AS(closed_form(1.0, 1.0, -1.0), std::domain_error);

    // initial slope y'(0) = a y0 on the oscillatory closed form
    double fd = (closed_form(2.0, 1.0, 1e-6) - closed_form(2.0, 1.0, -1e-6)) / 2e-6;
    CHECK(fd == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("regime dispatch") {
    CHECK(fde_regime(2.0) == FdeRegime::Oscillatory);
    CHECK(fde_regime(-0.8) == FdeRegime::Oscillatory);
    CHECK(fde_regime(0.5) == FdeRegime::CriticalPlus);
    CHECK(fde_regime(-0.5) == FdeRegime::CriticalMinus);
    CHECK(fde_regime(0.3) == FdeRegime::Subcritical);
    CHECK(fde_regime(0.5 + 1e-15) == FdeRegime::CriticalPlus);  // near-critical band
}

TEST_CASE("numeric solutions match the closed forms") {
    for (double a : {0.5, 2.0, 0.3, -0.5, 0.0}) {
        FdeProblem p{a, 1.0, Interval{-0.9, 10.0}};
        auto sol = solve_numeric(p);
        double worst = 0.0;
        for (int i = 0; i <= 200; ++i) {
            double t = 10.0 * i / 200.0;
            worst = std::max(worst, std::abs(sol.eval(t) - closed_form(a, 1.0, t)));
        }
        INFO("a = " << a);
        CHECK(worst <= 1e-7);
    }
}

TEST_CASE("solution grid covers the deviating argument") {
    FdeProblem p{2.0, 1.0, Interval{-0.5, 10.0}};
    auto sol = solve_numeric(p);
    // h(10) = -10/11 must be covered even though t_span.lo was -0.5
    CHECK(sol.t_lo() <= -10.0 / 11.0);
}

TEST_CASE("residual of the functional equation") {
    for (double a : {0.5, 2.0, 0.0}) {
        auto sol = solve_numeric({a, 1.0, Interval{-0.9, 10.0}});
        CHECK(residual_check(sol, a) <= 1e-6);
    }
}

TEST_CASE("initial data of the reduced problem") {
    auto sol = solve_numeric({0.3, 2.0, Interval{-0.5, 5.0}});
    CHECK(sol.eval(0.0) == doctest::Approx(2.0));
    CHECK(sol.eval_derivative(0.0) == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("regime continuity at |a| = 1/2") {
    for (double t : {0.5, 3.0, 9.0}) {
        double mid = closed_form(0.5, 1.0, t);
        CHECK(std::abs(closed_form(0.5 - 1e-6, 1.0, t) - mid) <= 1e-4);
        CHECK(std::abs(closed_form(0.5 + 1e-6, 1.0, t) - mid) <= 1e-4);
    }
}

TEST_CASE("deviating argument is the rational involution") {
    auto h = catalog("rational", {1.0});
    auto rep = verify_involution(h.h, h.J, 128, 1e-10);
    CHECK(rep.passed());
}

TEST_CASE("second-derivative identity of the closed forms") {
    for (double a : {2.0, 0.3}) {
        for (double t : {0.5, 2.0, 8.0}) {
            double dh = 1e-4;
            double y2 = (closed_form(a, 1.0, t + dh) - 2.0 * closed_form(a, 1.0, t) +
                         closed_form(a, 1.0, t - dh)) /
                        (dh * dh);
            double expect = -a * a / ((1.0 + t) * (1.0 + t)) * closed_form(a, 1.0, t);
            CHECK(y2 == doctest::Approx(expect).epsilon(1e-5));
        }
    }
}
