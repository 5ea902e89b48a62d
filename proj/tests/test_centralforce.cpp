#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "involution/centralforce.hpp"

using namespace invo;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("make_system quadrature matches closed-form V") {
    RealFunction f([](double x) { return 1.0 + x * x; }, Interval::whole_line(),
                   [](double x) { return 2.0 * x; });
    auto sys = make_system(f, "quad");
    for (double x : {-1.2, 0.3, 2.0})
        CHECK(sys.V.V(x) == doctest::Approx(0.5 * x * x + 0.25 * std::pow(x, 4)).epsilon(1e-11));

    RealFunction bad([](double) { return 2.0; }, Interval::whole_line());
    CHECK_THROWS_AS(make_system(bad), std::invalid_argument);
}

TEST_CASE("stability criterion") {
    std::vector<double> xs;
    for (int i = -25; i <= 25; ++i)
        if (i != 0) xs.push_back(0.03 * i);

    SUBCASE("constant f is stable") {
        auto rep = stability_condition(system_preset("const1"), xs);
        CHECK(rep.stable);
        CHECK(rep.max_normalized <= 1e-8);
    }
    SUBCASE("f = 8/(2+x)^3 is stable") {
        auto rep = stability_condition(system_preset("inverse_cubic"), xs);
        CHECK(rep.stable);
        CHECK(rep.max_normalized <= 1e-8);
    }
    SUBCASE("f = 1+x^2 is unstable with rho(1) = -2/3") {
        auto rep = stability_condition(system_preset("one_plus_x2"), {1.0});
        CHECK_FALSE(rep.stable);
        CHECK(rep.residuals.at(0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
    }
}

TEST_CASE("simulate: decoupled harmonic motion") {
    auto sys = system_preset("const1");
    State4 s0{0.4, 0.0, 0.0, 0.5, 0.0};
    auto tr = simulate(sys, s0, 2.0 * kPi, 0.01, 1e-12);
    auto& last = tr.samples.back();
    CHECK(last.x == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(last.vx == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(std::abs(last.y) < 1e-8);
    CHECK(last.vy == doctest::Approx(0.5).epsilon(1e-8));
    // exact solution along the way
    for (auto& s : tr.samples) {
        CHECK(s.x == doctest::Approx(0.4 * std::cos(s.t)).epsilon(1e-8));
        CHECK(s.y == doctest::Approx(0.5 * std::sin(s.t)).epsilon(1e-8));
    }
}

TEST_CASE("conservation of L and E_x for f = 1+x^2") {
    auto sys = system_preset("one_plus_x2");
    auto tr = simulate(sys, {0.4, 0.0, 0.0, 0.5, 0.0}, 38.0, 0.02, 1e-12);
    CHECK(tr.initial_momentum == doctest::Approx(0.2));
    CHECK(tr.initial_energy == doctest::Approx(0.0864));
    CHECK(tr.momentum_drift <= 1e-8);
    CHECK(tr.energy_drift <= 1e-8);
}

TEST_CASE("tolerance halving changes states within the error budget") {
    auto sys = system_preset("one_plus_x2");
    auto a = simulate(sys, {0.4, 0.0, 0.0, 0.5, 0.0}, 10.0, 0.5, 1e-10);
    auto b = simulate(sys, {0.4, 0.0, 0.0, 0.5, 0.0}, 10.0, 0.5, 5e-11);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(std::abs(a.samples[i].x - b.samples[i].x) < 1e-7);
        CHECK(std::abs(a.samples[i].y - b.samples[i].y) < 1e-7);
    }
}

TEST_CASE("figure-5 experiment windows and unbounded growth") {
    auto runs = figure5_experiment(0.02);
    CHECK(runs[0].samples.back().t == doctest::Approx(8.0));
    CHECK(runs[1].samples.back().t == doctest::Approx(14.0));
    CHECK(runs[2].samples.back().t == doctest::Approx(38.0));

    auto max_radius = [](const Trajectory& tr, double lo, double hi) {
        double m = 0.0;
        for (auto& s : tr.samples)
            if (s.t >= lo && s.t <= hi) m = std::max(m, std::hypot(s.x, s.y));
        return m;
    };
    CHECK(max_radius(runs[2], 14.0, 38.0) > max_radius(runs[2], 0.0, 8.0));
}
