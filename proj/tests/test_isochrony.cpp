#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "involution/catalog.hpp"
#include "involution/isochrony.hpp"

using namespace invo;

namespace {
constexpr double kPi = 3.14159265358979323846;

Potential quartic_well() {
    Potential p;
    p.J = Interval::whole_line();
    p.V = RealFunction([](double x) { return 0.5 * x * x + 0.25 * std::pow(x, 4); }, p.J,
                       [](double x) { return x + x * x * x; });
    p.g = RealFunction([](double x) { return x + x * x * x; }, p.J);
    p.omega = 1.0;
    return p;
}
}  // namespace

TEST_CASE("potential_from_involution") {
    SUBCASE("negation gives the harmonic well") {
        auto V = potential_from_involution(catalog("negation"), 1.0);
        for (double x : {-2.0, 0.5, 3.0}) CHECK(V.V(x) == doctest::Approx(0.5 * x * x));
    }
    SUBCASE("rational family matches the closed form") {
        double a = 1.0, w = 2.0;
        auto V = potential_from_involution(catalog("rational", {a}), w);
        for (double x : {-0.5, 0.3, 2.0}) {
            double expect = w * w / 8.0 * x * x * std::pow((2 + a * x) / (1 + a * x), 2);
            CHECK(V.V(x) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    SUBCASE("parabolic involution gives 2 w^2 (sqrt(1+x)-1)^2") {
        auto V = potential_from_involution(catalog("parabolic"), 1.0);
        for (double x : {-0.9, 0.4, 2.5}) {
            double expect = 2.0 * std::pow(std::sqrt(1.0 + x) - 1.0, 2);
            CHECK(V.V(x) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(potential_from_involution(catalog("negation"), 0.0), std::invalid_argument);
}

TEST_CASE("involution_from_potential") {
    SUBCASE("harmonic well pairs to negation") {
        Potential p;
        p.J = Interval::whole_line();
        p.V = RealFunction([](double x) { return 0.5 * x * x; }, p.J,
                           [](double x) { return x; });
        p.g = RealFunction([](double x) { return x; }, p.J);
        auto h = involution_from_potential(p);
        for (double x : {-1.5, 0.2, 4.0}) CHECK(h(x) == doctest::Approx(-x).epsilon(1e-10));
    }
    SUBCASE("rational potential recovers -x/(1+x)") {
        Potential p;
        p.J = Interval{-1.0, std::numeric_limits<double>::infinity()};
        p.V = RealFunction(
            [](double x) { return x * x / 8.0 * std::pow((2 + x) / (1 + x), 2); }, p.J);
        p.g = RealFunction([p](double x) { return p.V.finite_difference(x); }, p.J);
        auto h = involution_from_potential(p);
        for (double x : {-0.4, 0.5, 3.0})
            CHECK(h(x) == doctest::Approx(-x / (1.0 + x)).epsilon(1e-8));
    }
    SUBCASE("even quartic well pairs to negation") {
        auto h = involution_from_potential(quartic_well());
        for (double x : {-1.0, 0.7}) CHECK(h(x) == doctest::Approx(-x).epsilon(1e-10));
    }
}

TEST_CASE("omega recovery by finite difference") {
    for (double w : {1.0, 2.0}) {
        Potential p = potential_from_involution(catalog("rational", {1.0}), w);
        p.omega = 0.0;
        CHECK(estimate_omega(p) == doctest::Approx(w).epsilon(1e-5));
    }
}

TEST_CASE("period of the harmonic oscillator") {
    Potential p;
    p.J = Interval::whole_line();
    p.V = RealFunction([](double x) { return 0.5 * x * x; }, p.J, [](double x) { return x; });
    p.g = RealFunction([](double x) { return x; }, p.J);
    p.omega = 1.0;
    CHECK(period(p, 0.125) == doctest::Approx(2.0 * kPi).epsilon(1e-10));
    CHECK(period_return_map(p, 0.125) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
}

TEST_CASE("isochronous periods are constant across energies") {
    auto V = potential_from_involution(catalog("rational", {1.0}), 1.0);
    for (double E : {0.01, 0.1, 0.5})
        CHECK(period(V, E) == doctest::Approx(2.0 * kPi).epsilon(1e-7));
}

TEST_CASE("quartic control has energy-dependent periods") {
    auto p = quartic_well();
    double t1 = period(p, 1.0), t2 = period(p, 0.1);
    CHECK(t1 < t2);  // stiffening well: period decreases with energy
    CHECK(std::abs(t1 - t2) > 0.1);
    // both estimates agree with the return-map oracle
    CHECK(period_return_map(p, 1.0) == doctest::Approx(t1).epsilon(1e-6));
    CHECK(period_return_map(p, 0.1) == doctest::Approx(t2).epsilon(1e-6));
}

TEST_CASE("verify_isochrony reports") {
    auto good = potential_from_involution(catalog("rational", {-0.5}), 2.0);
    auto rep = verify_isochrony(good, admissible_energies(good, 5), 1e-6);
    CHECK(rep.passed());
    CHECK(rep.target == doctest::Approx(kPi));

    auto bad = verify_isochrony(quartic_well(), admissible_energies(quartic_well(), 5), 1e-6);
    CHECK_FALSE(bad.passed());
}

TEST_CASE("necessary conditions") {
    SUBCASE("harmonic: zero residuals") {
        Potential p;
        p.J = Interval::whole_line();
        p.V = RealFunction([](double x) { return 0.5 * x * x; }, p.J,
                           [](double x) { return x; });
        p.g = RealFunction([](double x) { return x; }, p.J);
        auto r = necessary_conditions(p);
        CHECK(r.r4_rel < 1e-6);
        CHECK(r.r6_rel < 1e-6);
    }
    SUBCASE("rational potential satisfies both conditions") {
        auto p = potential_from_involution(catalog("rational", {1.0}), 1.0);
        auto r = necessary_conditions(p);
        CHECK(r.r4_rel < 1e-3);
        CHECK(r.r6_rel < 1e-3);
    }
    SUBCASE("quartic control violates the 4th-order condition") {
        // V = x^2/2 + x^4: V''=1, V'''=0, V4=24
        auto r = residuals_from_derivatives({0, 0, 1.0, 0.0, 24.0, 0.0, 0.0});
        CHECK(r.r4 == doctest::Approx(24.0));
        auto fd = necessary_conditions([] {
            Potential p;
            p.J = Interval::whole_line();
            p.V = RealFunction([](double x) { return 0.5 * x * x + std::pow(x, 4); }, p.J,
                               [](double x) { return x + 4.0 * x * x * x; });
            p.g = RealFunction([](double x) { return x + 4.0 * x * x * x; }, p.J);
            return p;
        }());
        CHECK(fd.r4 == doctest::Approx(24.0).epsilon(1e-4));
    }
    SUBCASE("not a center") {
        Potential p;
        p.J = Interval::whole_line();
        p.V = RealFunction([](double x) { return -x * x; }, p.J);
        p.g = RealFunction([](double x) { return -2.0 * x; }, p.J);
        CHECK_THROWS(necessary_conditions(p));
    }
}

TEST_CASE("level symmetry V(h(x)) = V(x)") {
    for (std::string name : {"rational", "parabolic"}) {
        auto h = catalog(name, name == std::string("rational") ? std::vector<double>{1.0}
                                                               : std::vector<double>{});
        auto V = potential_from_involution(h, 1.5);
        for (double x : h.J.interior_samples(40))
            CHECK(V.V(h(x)) == doctest::Approx(V.V(x)).epsilon(1e-10));
    }
}

TEST_CASE("round trip involution -> potential -> involution") {
    for (std::string name : {"negation", "parabolic", "log_exp"}) {
        auto h = catalog(name);
        auto V = potential_from_involution(h, 1.0);
        auto rec = involution_from_potential(V);
        double lo = std::max(h.J.lo, -4.0), hi = std::min(h.J.hi, 4.0);
        for (int i = 1; i < 40; ++i) {
            double x = lo + (hi - lo) * i / 40.0;
            if (!rec.J.contains(x)) continue;
            CHECK(rec(x) == doctest::Approx(h(x)).epsilon(1e-7));
        }
    }
}
