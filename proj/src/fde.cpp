#include "involution/fde.hpp"

#include <algorithm>
#include <cmath>

#include "involution/ode.hpp"

namespace invo {

namespace {

constexpr double kSingularityGuard = -1.0 + 1e-6;

double hermite(double t, double t0, double t1, double y0, double y1, double m0, double m1) {
    double h = t1 - t0;
    double u = (t - t0) / h, u2 = u * u, u3 = u2 * u;
    return y0 * (2 * u3 - 3 * u2 + 1) + h * m0 * (u3 - 2 * u2 + u) + y1 * (-2 * u3 + 3 * u2) +
           h * m1 * (u3 - u2);
}

double hermite_slope(double t, double t0, double t1, double y0, double y1, double m0, double m1) {
    double h = t1 - t0;
    double u = (t - t0) / h, u2 = u * u;
    return (y0 * (6 * u2 - 6 * u) + h * m0 * (3 * u2 - 4 * u + 1) + y1 * (-6 * u2 + 6 * u) +
            h * m1 * (3 * u2 - 2 * u)) /
           h;
}

}  // namespace

FdeRegime fde_regime(double a) {
    double d = std::abs(a) - 0.5;
    if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(a)))
        return a > 0.0 ? FdeRegime::CriticalPlus : FdeRegime::CriticalMinus;
    return d > 0.0 ? FdeRegime::Oscillatory : FdeRegime::Subcritical;
}

std::string regime_name(FdeRegime r) {
    switch (r) {
        case FdeRegime::Oscillatory: return "oscillatory";
        case FdeRegime::CriticalPlus: return "critical_plus";
        case FdeRegime::CriticalMinus: return "critical_minus";
        case FdeRegime::Subcritical: return "subcritical";
    }
    return "?";
}

double closed_form(double a, double y0, double t) {
    if (!(t > -1.0)) throw std::domain_error("closed_form: t <= -1");
    double u = 1.0 + t;
    switch (fde_regime(a)) {
        case FdeRegime::CriticalPlus:
            return y0 * std::sqrt(u);
        case FdeRegime::CriticalMinus:
            return y0 * std::sqrt(u) * (1.0 - std::log(u));
        case FdeRegime::Oscillatory: {
            double c = 0.5 * std::sqrt(4.0 * a * a - 1.0);
            double lu = std::log(u);
            return y0 * std::sqrt(u) *
                   (std::cos(c * lu) + (2.0 * a - 1.0) / (2.0 * c) * std::sin(c * lu));
        }
        case FdeRegime::Subcritical: {
            double b = std::sqrt(1.0 - 4.0 * a * a);
            return y0 / (2.0 * b) * std::pow(u, 0.5 * (1.0 - b)) *
                   (b + 1.0 - 2.0 * a + (b - 1.0 + 2.0 * a) * std::pow(u, b));
        }
    }
    return 0.0;
}

double FdeSolution::eval(double t) const {
    if (!(t >= t_grid.front() && t <= t_grid.back()))
        throw std::domain_error("FdeSolution::eval: t outside covered grid");
    auto it = std::upper_bound(t_grid.begin(), t_grid.end(), t);
    std::size_t i = (it == t_grid.begin()) ? 0 : std::size_t(it - t_grid.begin()) - 1;
    i = std::min(i, t_grid.size() - 2);
    return hermite(t, t_grid[i], t_grid[i + 1], y[i], y[i + 1], yp[i], yp[i + 1]);
}

double FdeSolution::eval_derivative(double t) const {
    if (!(t >= t_grid.front() && t <= t_grid.back()))
        throw std::domain_error("FdeSolution::eval_derivative: t outside covered grid");
    auto it = std::upper_bound(t_grid.begin(), t_grid.end(), t);
    std::size_t i = (it == t_grid.begin()) ? 0 : std::size_t(it - t_grid.begin()) - 1;
    i = std::min(i, t_grid.size() - 2);
    return hermite_slope(t, t_grid[i], t_grid[i + 1], y[i], y[i + 1], yp[i], yp[i + 1]);
}

FdeSolution solve_numeric(const FdeProblem& p) {
    if (!(p.t_span.lo > -1.0))
        throw std::invalid_argument("solve_numeric: t_span must lie inside (-1, inf)");

    // extend the lower end so h(t) = -t/(1+t) of every covered t is covered
    double lo = std::min(p.t_span.lo, -p.t_span.hi / (1.0 + p.t_span.hi));
    lo = std::max(lo, kSingularityGuard);
    double hi = std::max(p.t_span.hi, 0.0);

    FdeSolution sol;
    sol.a = p.a;
    sol.y0 = p.y0;
    sol.regime = fde_regime(p.a);

    // output grid uniform in tau = ln(1+t), fine enough for interpolation
    const double dtau = 2e-3;
    std::vector<double> taus;
    for (double tau = std::log1p(lo); tau < std::log1p(hi); tau += dtau) taus.push_back(tau);
    taus.push_back(std::log1p(hi));

    std::vector<double> grid;
    grid.reserve(taus.size());
    for (double tau : taus) grid.push_back(std::expm1(tau));
    // expm1(log1p(t)) need not round back to t; pin the span ends exactly
    grid.front() = lo;
    grid.back() = hi;
    // snap the node nearest 0 onto 0 exactly
    auto it0 = std::min_element(grid.begin(), grid.end(),
                                [](double a, double b) { return std::abs(a) < std::abs(b); });
    *it0 = 0.0;
    std::size_t i0 = std::size_t(it0 - grid.begin());

    const double a = p.a;
    using Integrator = DormandPrince54<2>;
    Integrator ode(
        [a](double t, const Integrator::State& s, Integrator::State& ds) {
            double u = 1.0 + t;
            ds[0] = s[1];
            ds[1] = -a * a / (u * u) * s[0];
        },
        1e-12, 1e-14);

    std::vector<std::pair<double, std::array<double, 2>>> pts;
    auto sink = [&](double t, const Integrator::State& s) { pts.emplace_back(t, s); };

    // forward from 0
    std::vector<double> fwd(grid.begin() + i0 + 1, grid.end());
    if (!fwd.empty()) ode.integrate(0.0, {p.y0, a * p.y0}, fwd, sink);
    // backward from 0 toward the singularity
    std::vector<double> bwd(grid.rend() - i0, grid.rend());
    if (!bwd.empty()) ode.integrate(0.0, {p.y0, a * p.y0}, bwd, sink);

    pts.emplace_back(0.0, std::array<double, 2>{p.y0, a * p.y0});
    std::sort(pts.begin(), pts.end(),
              [](auto& l, auto& r) { return l.first < r.first; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](auto& l, auto& r) { return l.first == r.first; }),
              pts.end());

    for (auto& [t, s] : pts) {
        sol.t_grid.push_back(t);
        sol.y.push_back(s[0]);
        sol.yp.push_back(s[1]);
    }
    return sol;
}

double residual_check(const FdeSolution& sol, double a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.t_grid.size(); ++i) {
        double t = sol.t_grid[i];
        double ht = -t / (1.0 + t);
        if (!(ht >= sol.t_lo() && ht <= sol.t_hi())) continue;
        double r = std::abs(sol.yp[i] - a * sol.eval(ht));
        worst = std::max(worst, r);
    }
    return worst;
}

}  // namespace invo
