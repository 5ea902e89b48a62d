#include "involution/isochrony.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "involution/limits_util.hpp"
#include "involution/quadrature.hpp"
#include "involution/roots.hpp"

namespace invo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// Largest outward reach on one side of 0 where V stays strictly monotone
// (increasing for sign=+1, decreasing for sign=-1), certified by sampling.
double certified_reach(const RealFunction& V, double sign, double bound) {
    double prev_x = 0.0, prev_v = 0.0;
    double reach = std::isfinite(bound) ? std::abs(bound) : 1024.0;
    const int n = 2048;
    for (int i = 1; i <= n; ++i) {
        double x = sign * reach * double(i) / double(n + 1);
        double v;
        try {
            v = V(x);
        } catch (...) {
            return std::abs(prev_x);
        }
        if (!std::isfinite(v) || !(v > prev_v)) return std::abs(prev_x);
        prev_x = x;
        prev_v = v;
    }
    return std::isfinite(bound) ? std::abs(bound) : kInf;
}

}  // namespace

Potential potential_from_involution(const Involution& inv, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("potential_from_involution: omega > 0");
    Potential pot;
    pot.omega = omega;
    pot.J = inv.J;
    const RealFunction h = inv.h;
    const double w2 = omega * omega;
    pot.V = RealFunction(
        [h, w2](double x) {
            double d = x - h(x);
            return w2 * d * d / 8.0;
        },
        inv.J,
        [h, w2](double x) {
            double hp = h.has_derivative() ? h.derivative(x) : h.finite_difference(x);
            return w2 * (x - h(x)) * (1.0 - hp) / 4.0;
        });
    const RealFunction Vf = pot.V;
    pot.g = RealFunction([Vf](double x) { return Vf.derivative(x); }, inv.J);
    return pot;
}

double estimate_omega(const Potential& pot) {
    if (pot.omega > 0.0) return pot.omega;
    // centered second difference of V at 0, Richardson-extrapolated
    double scale = std::min({1.0, pot.J.hi_finite() ? 0.25 * pot.J.hi : 1.0,
                             pot.J.lo_finite() ? 0.25 * -pot.J.lo : 1.0});
    double h = 1e-3 * scale;
    auto d2 = [&](double step) {
        return (pot.V(step) - 2.0 * pot.V(0.0) + pot.V(-step)) / (step * step);
    };
    double a = d2(h), b = d2(0.5 * h);
    double v2 = (4.0 * b - a) / 3.0;
    if (!(v2 > 0.0)) throw std::runtime_error("estimate_omega: V''(0) <= 0");
    return std::sqrt(v2);
}

Involution involution_from_potential(const Potential& pot) {
    const RealFunction V = pot.V;
    if (std::abs(V(0.0)) > 1e-12)
        throw std::invalid_argument("involution_from_potential: V(0) != 0");

    double right = certified_reach(V, +1.0, pot.J.hi);
    double left = certified_reach(V, -1.0, pot.J.lo);
    if (!(right > 0.0 && left > 0.0))
        throw std::runtime_error("involution_from_potential: no well around 0");

    // energy caps at the certified well boundaries; V may have a finite
    // supremum even on an unbounded side, so take the limit in both cases
    auto Vfn = [V](double x) { return V(x); };
    double e_right =
        one_sided_limit(Vfn, std::isfinite(right) ? right : kInf, std::isfinite(right) ? 0.5 * right : 1.0);
    double e_left =
        one_sided_limit(Vfn, std::isfinite(left) ? -left : -kInf, std::isfinite(left) ? -0.5 * left : -1.0);
    double e_star = std::min(e_right, e_left);

    // shrink the deeper side so both reach exactly e_star (equality up to
    // the noise floor of the limit computation does not count as deeper)
    auto deeper = [&](double e_side) { return e_side > e_star * (1.0 + 1e-9) + 1e-12; };
    auto crossing = [&](double sign, double reach) {
        // first |x| on the given side with V(sign |x|) = e_star; stay strictly
        // inside an open endpoint when the reach is finite
        double u = std::isfinite(reach) ? reach * (1.0 - 1e-12) : 1.0;
        for (int i = 0; i < 200 && V(sign * u) < e_star; ++i) {
            if (std::isfinite(reach))
                u = 0.5 * (u + reach);
            else
                u *= 2.0;
        }
        if (V(sign * u) < e_star) return std::abs(reach);  // crossing is at the boundary
        return bisect([&](double t) { return V(sign * t) - e_star; }, 1e-300, u, 1e-15);
    };
    double hi = right, lo = -left;
    if (std::isfinite(e_star)) {
        if (deeper(e_right)) hi = crossing(+1.0, right);
        if (deeper(e_left)) lo = -crossing(-1.0, left);
    }
    Interval J{lo, hi};

    auto pair_level = [V, J](double x) -> double {
        if (x == 0.0) return 0.0;
        double E = V(x);
        double far_bound = x > 0.0 ? J.lo : J.hi;  // search on the opposite side
        double y = x > 0.0 ? -std::abs(x) : std::abs(x);
        if (std::isfinite(far_bound) && std::abs(y) >= std::abs(far_bound))
            y = 0.5 * far_bound;
        for (int i = 0; i < 200 && V(y) < E; ++i)
            y = std::isfinite(far_bound) ? 0.5 * (y + far_bound) : 2.0 * y;
        if (V(y) < E) {
            // level attained only in the limit at the far endpoint
            if (E - V(y) <= 1e-9 * (1.0 + E)) return y;
            throw std::runtime_error("involution_from_potential: level not reached on far side");
        }
        return bisect([&](double u) { return V(u) - E; }, std::min(y, 0.0), std::max(y, 0.0),
                      1e-15);
    };

    Involution inv;
    inv.J = J;
    inv.h = RealFunction(pair_level, J, [V, pair_level](double x) {
        if (x == 0.0) return -1.0;
        double y = pair_level(x);
        double gy = V.derivative(y);
        if (gy == 0.0) return -1.0;
        return V.derivative(x) / gy;  // implicit differentiation of V(h(x)) = V(x)
    });
    inv.fixed_point = 0.0;
    inv.smooth = true;
    inv.name = "level_pairing";

    auto rep = verify_involution(inv.h, J, 24, 1e-7);
    if (!rep.passed())
        throw std::runtime_error("involution_from_potential: level pairing failed verification");
    return inv;
}

std::pair<double, double> turning_points(const Potential& pot, double E) {
    if (!(E > 0.0)) throw std::invalid_argument("turning_points: E > 0 required");
    const RealFunction& V = pot.V;

    auto solve_side = [&](double sign, double bound) {
        double t = 1e-6;
        double x = sign * t;
        for (int i = 0; i < 400 && V(x) < E; ++i) {
            x = std::isfinite(bound) ? 0.5 * (x + bound) : 2.0 * x;
            if (std::isfinite(bound) && std::abs(x - bound) < 1e-15 * (1.0 + std::abs(bound)))
                break;
        }
        if (V(x) < E) throw std::runtime_error("turning_points: E exceeds the well depth");
        return bisect([&](double u) { return V(u) - E; }, std::min(x, 0.0), std::max(x, 0.0),
                      1e-15);
    };

    double xp = solve_side(+1.0, pot.J.hi);
    double xm = solve_side(-1.0, pot.J.lo);
    return {xm, xp};
}

double period(const Potential& pot, double E) {
    auto [xm, xp] = turning_points(pot, E);
    const RealFunction& V = pot.V;
    const double span = xp - xm;
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * E;

    auto integrand = [&](double theta) {
        double s = std::sin(theta);
        double x = xm + span * s * s;
        double d = std::max(E - V.raw(std::clamp(x, xm, xp)), floor);
        return span * std::sin(2.0 * theta) / std::sqrt(d);
    };
    return std::sqrt(2.0) * integrate(integrand, 0.0, 0.5 * kPi, 1e-11);
}

double period_return_map(const Potential& pot, double E, std::size_t steps_per_period) {
    auto [xm, xp] = turning_points(pot, E);
    (void)xm;
    double omega = estimate_omega(pot);
    double t_guess = 2.0 * kPi / omega;
    const double dt = t_guess / double(steps_per_period);

    auto accel = [&](double x) { return -pot.V.derivative(x); };

    double x = xp, v = 0.0, t = 0.0;
    double a = accel(x);
    std::vector<double> crossings;  // downward crossings of x = 0

    const std::size_t max_steps = 8 * steps_per_period;
    for (std::size_t i = 0; i < max_steps && crossings.size() < 2; ++i) {
        double x_prev = x, v_prev = v;
        double v_half = v + 0.5 * dt * a;
        x += dt * v_half;
        a = accel(x);
        v = v_half + 0.5 * dt * a;
        t += dt;
        if (x_prev > 0.0 && x <= 0.0) {
            // cubic Hermite root of x(s) on [0, dt], seeded by linear interp
            double s = x_prev / (x_prev - x) * dt;
            for (int it = 0; it < 8; ++it) {
                double u = s / dt, u2 = u * u, u3 = u2 * u;
                double xs = x_prev * (2 * u3 - 3 * u2 + 1) + dt * v_prev * (u3 - 2 * u2 + u) +
                            x * (-2 * u3 + 3 * u2) + dt * v * (u3 - u2);
                double dxs = (x_prev * (6 * u2 - 6 * u) + dt * v_prev * (3 * u2 - 4 * u + 1) +
                              x * (-6 * u2 + 6 * u) + dt * v * (3 * u2 - 2 * u)) /
                             dt;
                if (dxs == 0.0) break;
                s -= xs / dxs;
                s = std::clamp(s, 0.0, dt);
            }
            crossings.push_back(t - dt + s);
        }
    }
    if (crossings.size() < 2)
        throw std::runtime_error("period_return_map: no return detected");
    return crossings[1] - crossings[0];
}

std::vector<double> admissible_energies(const Potential& pot, std::size_t n) {
    const RealFunction& V = pot.V;
    auto Vfn = [&](double x) { return V(x); };

    auto side_cap = [&](double endpoint, double sign) {
        if (std::isfinite(endpoint)) {
            double probe = 0.95 * endpoint;
            double cap = one_sided_limit(Vfn, endpoint, 0.5 * endpoint);
            return std::isfinite(cap) ? cap : V(probe);
        }
        return V(sign * 2.0);  // finite excursion cap for unbounded sides
    };
    double e_max = std::min(side_cap(pot.J.hi, +1.0), side_cap(pot.J.lo, -1.0));

    std::vector<double> out;
    double lo = 1e-3 * e_max, hi = 0.9 * e_max;
    for (std::size_t i = 0; i < n; ++i) {
        double t = (n == 1) ? 0.0 : double(i) / double(n - 1);
        out.push_back(lo * std::pow(hi / lo, t));
    }
    return out;
}

PeriodReport verify_isochrony(const Potential& pot, const std::vector<double>& energies,
                              double tol) {
    PeriodReport rep;
    rep.tolerance = tol;
    rep.target = 2.0 * kPi / estimate_omega(pot);
    for (double E : energies) {
        double T = period(pot, E);
        rep.energies.push_back(E);
        rep.periods.push_back(T);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(T - rep.target));
    }
    return rep;
}

ConditionResiduals residuals_from_derivatives(const std::array<double, 7>& d) {
    if (!(d[2] > 0.0)) throw std::invalid_argument("necessary_conditions: V''(0) <= 0");
    ConditionResiduals r;
    double t4 = 5.0 * d[3] * d[3] / (3.0 * d[2]);
    r.r4 = d[4] - t4;
    double t6a = 7.0 * d[3] * d[5] / d[2];
    double t6b = 140.0 * std::pow(d[3], 4) / (9.0 * std::pow(d[2], 3));
    r.r6 = d[6] - t6a + t6b;
    double den4 = std::max({std::abs(d[4]), std::abs(t4), d[2] * d[2]});
    double den6 = std::max({std::abs(d[6]), std::abs(t6a), std::abs(t6b), std::pow(d[2], 3)});
    r.r4_rel = std::abs(r.r4) / den4;
    r.r6_rel = std::abs(r.r6) / den6;
    return r;
}

ConditionResiduals necessary_conditions(const Potential& pot, double fd_step) {
    double scale = std::min({1.0, pot.J.hi_finite() ? 0.2 * pot.J.hi : 1.0,
                             pot.J.lo_finite() ? 0.2 * -pot.J.lo : 1.0});
    // the step must be fairly wide: the 6th-difference numerator loses
    // ~eps*V/h^6 to rounding, which dominates for small h
    double h = fd_step > 0.0 ? fd_step : 1e-1 * scale;
    while (!(pot.J.contains(3.0 * h) && pot.J.contains(-3.0 * h))) h *= 0.5;

    auto stencil = [&](double step) -> std::array<double, 7> {
        double v[7];
        for (int i = -3; i <= 3; ++i) v[i + 3] = pot.V(double(i) * step);
        double s2 = step * step;
        std::array<double, 7> d{};
        d[2] = (v[4] - 2 * v[3] + v[2]) / s2;
        d[3] = (v[5] - 2 * v[4] + 2 * v[2] - v[1]) / (2 * s2 * step);
        d[4] = (v[5] - 4 * v[4] + 6 * v[3] - 4 * v[2] + v[1]) / (s2 * s2);
        d[5] = (v[6] - 4 * v[5] + 5 * v[4] - 5 * v[2] + 4 * v[1] - v[0]) / (2 * s2 * s2 * step);
        d[6] = (v[6] - 6 * v[5] + 15 * v[4] - 20 * v[3] + 15 * v[2] - 6 * v[1] + v[0]) /
               (s2 * s2 * s2);
        return d;
    };

    auto a = stencil(h), b = stencil(0.5 * h);
    std::array<double, 7> d{};
    for (int i = 2; i <= 6; ++i) d[i] = (4.0 * b[i] - a[i]) / 3.0;  // one Richardson pass
    return residuals_from_derivatives(d);
}

}  // namespace invo
