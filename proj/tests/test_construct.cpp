#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "involution/catalog.hpp"
#include "involution/construct.hpp"

using namespace invo;

TEST_CASE("invert_monotone worked values") {
    // K(y) = y/2 + y^2/16, K(0.4) = 0.21
    RealFunction K([](double y) { return 0.5 * y + y * y / 16.0; }, Interval{-4.0, 4.0},
                   [](double y) { return 0.5 + y / 8.0; });
    CHECK(invert_monotone(K, 0.21, Interval{-4.0, 4.0}) == doctest::Approx(0.4).epsilon(1e-12));

    RealFunction lin([](double y) { return 0.5 * y; }, Interval::whole_line());
    CHECK(invert_monotone(lin, 1.0, Interval::whole_line()) == doctest::Approx(2.0));

    CHECK_THROWS(invert_monotone(K, 100.0, Interval{-4.0, 4.0}));
}

TEST_CASE("maximal intervals") {
    auto I1 = maximal_interval(even_preset("y2_over_8"));
    CHECK(I1.lo == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(I1.hi == doctest::Approx(4.0).epsilon(1e-12));

    auto I2 = maximal_interval(even_preset("y6"));
    CHECK(I2.hi == doctest::Approx(std::pow(6.0, -0.2)).epsilon(1e-12));
    CHECK(I2.lo == doctest::Approx(-I2.hi));

    auto I3 = maximal_interval(even_preset("zero"));
    CHECK_FALSE(I3.lo_finite());
    CHECK_FALSE(I3.hi_finite());

    // non-even input rejected
    EvenFunction bad;
    bad.P = RealFunction([](double y) { return y; }, Interval::whole_line());
    CHECK_THROWS_AS(maximal_interval(bad), std::invalid_argument);
}

TEST_CASE("from_even_function worked examples") {
    SUBCASE("P = 0 gives negation") {
        auto res = from_even_function(even_preset("zero"));
        for (double x : {-2.0, 0.5, 7.0}) CHECK(res.h(x) == doctest::Approx(-x).epsilon(1e-12));
    }
    SUBCASE("P = y^2/8 gives the parabolic involution") {
        auto res = from_even_function(even_preset("y2_over_8"));
        CHECK(res.J.lo == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(res.J.hi == doctest::Approx(3.0).epsilon(1e-12));
        for (double x : {-0.9, 0.0, 0.21, 2.5}) {
            double exact = x + 4.0 - 4.0 * std::sqrt(1.0 + x);
            CHECK(res.h(x) == doctest::Approx(exact).epsilon(1e-10));
            // k(x) = -4 + 4 sqrt(1+x)
            CHECK(res.k(x) == doctest::Approx(-4.0 + 4.0 * std::sqrt(1.0 + x)).epsilon(1e-10));
        }
    }
    SUBCASE("P = c|y| recovers the piecewise-linear involution") {
        auto res = from_even_function(even_preset("abs_lambda", {2.0}));
        auto pw = catalog("piecewise_linear", {2.0});
        CHECK(res.h(1.0) == doctest::Approx(-2.0).epsilon(1e-9));
        for (double x : {-3.0, -0.4, 0.7, 2.0})
            CHECK(res.h(x) == doctest::Approx(pw(x)).epsilon(1e-9));
    }
    SUBCASE("P = y^6 interval") {
        auto res = from_even_function(even_preset("y6"));
        double s = std::pow(6.0, 0.2);
        CHECK(std::abs(res.J.lo + 5.0 / (12.0 * s)) < 1e-10);
        CHECK(std::abs(res.J.hi - 7.0 / (12.0 * s)) < 1e-10);
    }
}

TEST_CASE("K and k are mutually inverse on samples") {
    auto res = from_even_function(even_preset("y2_over_8"));
    for (double x : res.J.interior_samples(40)) {
        double y = res.k(x);
        CHECK(res.K(y) == doctest::Approx(x).epsilon(1e-11));
    }
    CHECK(res.I.is_symmetric());
}

TEST_CASE("even_from_involution worked examples") {
    SUBCASE("negation gives the null even function") {
        auto P = even_from_involution(catalog("negation"));
        for (double y : {-3.0, 0.0, 1.5}) CHECK(std::abs(P.P(y)) < 1e-12);
    }
    SUBCASE("piecewise linear lambda=3: P(2) = -1") {
        auto P = even_from_involution(catalog("piecewise_linear", {3.0}));
        CHECK(P.P(2.0) == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(P.P(-2.0) == doctest::Approx(-1.0).epsilon(1e-10));
    }
    SUBCASE("log_exp gives -2 ln cosh(y/2)") {
        auto P = even_from_involution(catalog("log_exp"));
        CHECK(P.P(2.0) == doctest::Approx(-2.0 * std::log(std::cosh(1.0))).epsilon(1e-10));
    }
}

TEST_CASE("identity h(x) = K(-k(x)) on constructed results") {
    auto built = from_even_function(even_preset("y2_over_8"));
    for (double x : built.J.interior_samples(30)) {
        double y = built.k(x);
        CHECK(built.I.contains(-y));
        CHECK(built.K(-y) == doctest::Approx(built.h(x)).epsilon(1e-10));
    }
}

TEST_CASE("round trips") {
    SUBCASE("A: involution -> even -> involution") {
        for (std::string name : {"negation", "parabolic", "log_exp"}) {
            auto h = catalog(name);
            auto rec = from_even_function(even_from_involution(h));
            double lo = std::max({h.J.lo, rec.J.lo, -6.0});
            double hi = std::min({h.J.hi, rec.J.hi, 6.0});
            for (int i = 1; i < 60; ++i) {
                double x = lo + (hi - lo) * i / 60.0;
                CHECK(rec.h(x) == doctest::Approx(h(x)).epsilon(1e-8));
            }
        }
    }
    SUBCASE("B: even -> involution -> even") {
        auto P = even_preset("y2_over_8");
        auto rec = even_from_involution(from_even_function(P).h);
        for (int i = 1; i < 40; ++i) {
            double y = -3.9 + 7.8 * i / 40.0;
            CHECK(rec.P(y) == doctest::Approx(P.P(y)).epsilon(1e-8));
        }
    }
}

TEST_CASE("symmetric equations") {
    SUBCASE("linear gives negation") {
        auto h = from_symmetric_equation(equation_preset("linear"),
                                         Interval{-5.0, 5.0}.interior_samples(100));
        for (double x : {-2.0, 0.3, 1.0}) CHECK(h(x) == doctest::Approx(-x).epsilon(1e-10));
    }
    SUBCASE("hyperbola gives the rational involution") {
        std::vector<double> grid;
        for (int i = -80; i <= 400; ++i) grid.push_back(0.01 * i);
        auto h = from_symmetric_equation(equation_preset("hyperbola"), grid);
        auto exact = catalog("rational", {1.0});
        for (double x : {-0.5, 0.25, 2.0})
            CHECK(h(x) == doctest::Approx(exact(x)).epsilon(1e-9));
    }
    SUBCASE("cubic branch matches the cube-root formula") {
        double c = std::cbrt(2.0) - 1.0;
        std::vector<double> grid;
        for (int i = 1; i <= 200; ++i) {
            grid.push_back(-0.99 * i / 200.0);
            grid.push_back((c - 1e-3) * i / 200.0);
        }
        auto h = from_symmetric_equation(equation_preset("cubic2"), grid);
        // 0.2 is between table nodes, so only interpolation accuracy applies
        double u = 0.2 + 1.0;
        CHECK(h(0.2) == doctest::Approx(std::cbrt(2.0 - u * u * u) - 1.0).epsilon(1e-6));
        CHECK(verify_involution(h.h, h.J, 64, 1e-5).passed());
        // the traced table nodes satisfy f = 0 to solver tolerance
        auto eq = equation_preset("cubic2");
        for (double x : {-0.99 * 40.0 / 200.0, -0.99 * 160.0 / 200.0, (c - 1e-3) * 100.0 / 200.0})
            CHECK(std::abs(eq.f(x, h(x))) < 1e-9);
    }
    SUBCASE("asymmetric input rejected") {
        SymmetricEquation bad;
        bad.f = [](double x, double y) { return x + 2.0 * y; };
        bad.omega = Interval{-1.0, 1.0};
        CHECK_THROWS(from_symmetric_equation(bad, {0.1, 0.2}));
    }
}

TEST_CASE("invert_monotone random queries vs direct evaluation") {
    RealFunction K([](double y) { return 0.5 * (y + std::pow(y, 6)); }, Interval::whole_line(),
                   [](double y) { return 0.5 * (1.0 + 6.0 * std::pow(y, 5)); });
    Interval I{-std::pow(6.0, -0.2), std::pow(6.0, -0.2)};
    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> dist(I.lo * 0.95, I.hi * 0.95);
    for (int i = 0; i < 50; ++i) {
        double y = dist(rng);
        double x = K(y);
        CHECK(invert_monotone(K, x, I) == doctest::Approx(y).epsilon(1e-10));
    }
}
