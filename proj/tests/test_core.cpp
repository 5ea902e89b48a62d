#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "involution/catalog.hpp"
#include "involution/involution.hpp"

using namespace invo;

TEST_CASE("interval basics") {
    Interval J{-1.0, 3.0};
    CHECK(J.contains(0.0));
    CHECK_FALSE(J.contains(-1.0));
    CHECK_FALSE(J.contains(3.0));
    CHECK_FALSE(J.is_symmetric());
    CHECK(Interval(-4.0, 4.0).is_symmetric());
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);

    auto xs = J.interior_samples(50);
    CHECK(xs.size() >= 3);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
    for (double x : xs) CHECK(J.contains(x));
}

TEST_CASE("real function domain enforcement") {
    RealFunction f([](double x) { return std::sqrt(x); }, Interval{0.0, 4.0});
    CHECK(f(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(f(-1.0), DomainError);
    CHECK_THROWS_AS(f(5.0), DomainError);
}

TEST_CASE("verify negation") {
    auto h = catalog("negation");
    auto rep = verify_involution(h.h, h.J, 100);
    CHECK(rep.passed());
    CHECK(rep.max_involution_residual == doctest::Approx(0.0));
    CHECK(rep.monotonicity_ok);
}

TEST_CASE("verify rational a=1") {
    auto h = catalog("rational", {1.0});
    CHECK(h(1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(h(-0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(verify_involution(h.h, h.J).passed());
}

TEST_CASE("verify log_exp") {
    auto h = catalog("log_exp");
    CHECK(h(-std::log(2.0)) == doctest::Approx(std::log(1.5)).epsilon(1e-14));
    CHECK(h(std::log(1.5)) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
    CHECK(verify_involution(h.h, h.J).passed());
}

TEST_CASE("non-involution fails verification") {
    RealFunction f([](double x) { return -2.0 * x; }, Interval::whole_line());
    auto rep = verify_involution(f, Interval::whole_line(), 64, 1e-9);
    CHECK_FALSE(rep.passed());
    // h(h(1)) = 4, residual 3 (relative to 1+|x| = 2)
    CHECK(rep.max_involution_residual >= 1.0);
}

TEST_CASE("fixed points") {
    CHECK(fixed_point(catalog("negation").h, Interval::whole_line()) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // h(x) = cbrt(2 - x^3) has fixed point cbrt(1) = 1
    RealFunction h([](double x) { return std::cbrt(2.0 - x * x * x); }, Interval::whole_line());
    CHECK(fixed_point(h, Interval::whole_line()) == doctest::Approx(1.0).epsilon(1e-12));

    RealFunction g([](double x) { return 3.0 - x; }, Interval::whole_line());
    CHECK(fixed_point(g, Interval::whole_line()) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("normalize moves the fixed point to 0") {
    RealFunction h([](double x) { return std::cbrt(2.0 - x * x * x); }, Interval::whole_line());
    auto inv = normalize(h, Interval::whole_line());
    CHECK(std::abs(inv(0.0)) < 1e-12);
    // matches cbrt(2-(x+1)^3) - 1
    for (double x : {-0.5, 0.2, 1.0}) {
        double u = x + 1.0;
        CHECK(inv(x) == doctest::Approx(std::cbrt(2.0 - u * u * u) - 1.0).epsilon(1e-10));
    }

    // already normalized: unchanged
    auto neg = normalize(catalog("negation"));
    CHECK(neg(0.7) == doctest::Approx(-0.7));

    RealFunction aff([](double x) { return 3.0 - x; }, Interval::whole_line());
    auto affn = normalize(aff, Interval::whole_line());
    CHECK(affn(0.4) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("homothety") {
    auto h = catalog("rational", {1.0});
    auto scaled = homothety(h, 2.0);
    CHECK(scaled.J.lo == doctest::Approx(-0.5));
    // h~(x) = -x/(1+2x)
    for (double x : {-0.3, 0.1, 2.0})
        CHECK(scaled(x) == doctest::Approx(-x / (1.0 + 2.0 * x)).epsilon(1e-14));

    auto same = homothety(h, 1.0);
    CHECK(same(0.3) == doctest::Approx(h(0.3)));

    auto neg = homothety(catalog("negation"), -5.0);
    CHECK(neg(1.2) == doctest::Approx(-1.2));

    CHECK_THROWS_AS(homothety(h, 0.0), std::invalid_argument);
}

TEST_CASE("homothety round trip is pointwise identity") {
    auto h = catalog("rational", {1.0});
    auto back = homothety(homothety(h, 3.0), 1.0 / 3.0);
    for (double x : {-0.9, -0.2, 0.5, 4.0})
        CHECK(std::abs(back(x) - h(x)) <= 1e-12);
}

TEST_CASE("catalog worked values") {
    auto pw = catalog("piecewise_linear", {2.0});
    CHECK(pw(1.0) == doctest::Approx(-2.0));
    CHECK(pw(-2.0) == doctest::Approx(1.0));
    CHECK_FALSE(pw.smooth);
    CHECK(pw.kink.has_value());

    auto r = catalog("rational", {2.0});
    CHECK(r(1.0) == doctest::Approx(-1.0 / 3.0));
    CHECK(r(-1.0 / 3.0) == doctest::Approx(1.0));
    CHECK(r.J.lo == doctest::Approx(-0.5));

    auto p = catalog("parabolic");
    CHECK(p(0.21) == doctest::Approx(-0.19).epsilon(1e-14));
    CHECK(p.J.lo == doctest::Approx(-1.0));
    CHECK(p.J.hi == doctest::Approx(3.0));

    auto cr = catalog("cube_root", {2.0});
    CHECK(cr(0.2) == doctest::Approx(std::cbrt(0.272) - 1.0).epsilon(1e-12));
    CHECK(cr.kink.has_value());

    CHECK_THROWS_AS(catalog("nope"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("piecewise_linear", {-1.0}), std::invalid_argument);
}

TEST_CASE("catalog properties on sampled grids") {
    std::mt19937 rng(7u);
    for (const auto& name : catalog_names()) {
        std::vector<double> params;
        if (name == "piecewise_linear") params = {1.7};
        if (name == "rational") params = {-0.8};
        if (name == "cube_root") params = {2.0};
        auto inv = catalog(name, params);

        auto rep = verify_involution(inv.h, inv.J, 128, 1e-10);
        INFO(name);
        CHECK(rep.passed());

        if (inv.smooth) {
            double fd = (inv(1e-6) - inv(-1e-6)) / 2e-6;
            CHECK(fd == doctest::Approx(-1.0).epsilon(1e-6));
        }
    }
}
