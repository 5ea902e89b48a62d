#include "involution/construct.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "involution/limits_util.hpp"
#include "involution/roots.hpp"

namespace invo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double fd_partial(const std::function<double(double, double)>& f, double x, double y, bool wrt_y) {
    double v = wrt_y ? y : x;
    double h = std::cbrt(std::numeric_limits<double>::epsilon()) * (1.0 + std::abs(v));
    if (wrt_y) return (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    return (f(x + h, y) - f(x - h, y)) / (2.0 * h);
}

void check_even(const EvenFunction& P, double r_probe) {
    const Interval& D = P.P.domain();
    if (!D.contains(0.0) || std::abs(P.P(0.0)) > 1e-12)
        throw std::invalid_argument("even function must satisfy P(0)=0");
    double r = std::min({r_probe, D.hi_finite() ? 0.9 * D.hi : r_probe,
                         D.lo_finite() ? 0.9 * -D.lo : r_probe});
    for (int i = 1; i <= 16; ++i) {
        double y = r * double(i) / 16.0;
        if (!(D.contains(y) && D.contains(-y))) continue;
        double scale = 1.0 + std::abs(P.P(y));
        if (std::abs(P.P(y) - P.P(-y)) > 1e-9 * scale)
            throw std::invalid_argument("function is not even on its domain");
    }
}

}  // namespace

double SymmetricEquation::d1(double x, double y) const {
    return df_dx ? df_dx(x, y) : fd_partial(f, x, y, false);
}

double SymmetricEquation::d2(double x, double y) const {
    return df_dy ? df_dy(x, y) : fd_partial(f, x, y, true);
}

double invert_monotone(const RealFunction& K, double x, Interval bracket, double tol) {
    const Interval& D = K.domain();
    double lo = std::max(bracket.lo, D.lo);
    double hi = std::min(bracket.hi, D.hi);

    double c = Interval{lo, hi}.midpoint();
    if (lo < 0.0 && hi > 0.0) c = 0.0;

    auto probe = [&](double y, bool& ok) -> double {
        try {
            double v = K(y);
            if (std::isfinite(v)) {
                ok = true;
                return v;
            }
        } catch (...) {
        }
        ok = false;
        return 0.0;
    };

    // Expand [a,b] around c until K(a) <= x <= K(b). An open endpoint, or a
    // point where K fails to evaluate (it may saturate in double precision
    // well before a mathematical endpoint), acts as a barrier that the
    // expansion creeps toward geometrically without touching.
    auto expand = [&](double sign, double& end, double& Kend) {
        double barrier = sign > 0.0 ? hi : lo;
        double step = 1.0;
        for (int i = 0; i < 200 && sign * (x - Kend) > 0.0; ++i) {
            double cand = std::isfinite(barrier) ? 0.5 * (end + barrier) : end + sign * step;
            step *= 2.0;
            if (cand == end || cand == barrier) break;  // pinched against the barrier
            bool ok;
            double v = probe(cand, ok);
            if (!ok) {
                barrier = cand;
                continue;
            }
            end = cand;
            Kend = v;
        }
    };

    double a = c, b = c;
    double Ka = K(c), Kb = Ka;
    expand(-1.0, a, Ka);
    expand(+1.0, b, Kb);
    if (Ka > x || Kb < x)
        throw std::runtime_error("invert_monotone: target outside the range of K");

    auto g = [&](double y) { return K(y) - x; };
    double y = bisect(g, a, b, 1e-15);
    if (K.has_derivative()) {
        for (int i = 0; i < 3; ++i) {
            double d = K.derivative(y);
            if (d <= 0.0) break;  // non-monotone input or boundary; keep bisection value
            double yn = y - g(y) / d;
            if (yn > a && yn < b) y = yn;
        }
    }
    double allowed =
        std::max(tol, 1e3 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x)));
    if (std::abs(g(y)) > allowed) {
        // Steep K (e.g. near a pole of the inverse): no representable y meets
        // the residual tolerance, but a sign change across a few ulps still
        // pins the root as tightly as doubles allow.
        double u = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(y));
        double gl = g(std::max(a, y - u)), gr = g(std::min(b, y + u));
        if (!(gl <= 0.0 && gr >= 0.0))
            throw std::runtime_error("invert_monotone: failed to reach tolerance");
    }
    return y;
}

Interval maximal_interval(const EvenFunction& P) {
    const Interval& D = P.P.domain();
    double half_width = std::min(D.hi_finite() ? D.hi : kInf, D.lo_finite() ? -D.lo : kInf);
    check_even(P, std::isfinite(half_width) ? half_width : 4.0);

    auto Kp = [&](double y) { return 0.5 * (1.0 + P.P.derivative(y)); };

    auto scan_side = [&](double sign) -> double {
        if (P.continuity == Continuity::C0) {
            // sampled strict-increase certificate
            auto K = [&](double y) { return 0.5 * (y + P.P(y)); };
            double prev_y = 0.0, prev_K = K(0.0);
            double reach = std::isfinite(half_width) ? half_width : 1024.0;
            const int n = 10000;
            for (int i = 1; i <= n; ++i) {
                double y = sign * reach * double(i) / double(n + 1);
                double v = K(y);
                if (sign > 0 ? !(v > prev_K) : !(v < prev_K)) return std::abs(prev_y);
                prev_y = y;
                prev_K = v;
            }
            return std::isfinite(half_width) ? half_width : kInf;
        }
        // C1: first sign change of K' scanning outward geometrically
        double y_prev = 0.0;
        double y = 1e-6;
        for (int k = 0; k < 90; ++k, y *= 2.0) {
            double yy = sign * y;
            if (std::abs(yy) >= half_width) {
                yy = sign * (half_width * (1.0 - 1e-12));
                if (std::abs(yy) <= std::abs(y_prev)) break;
            }
            double kp;
            try {
                kp = Kp(yy);
            } catch (...) {
                break;  // K' no longer evaluable: no sign change in reach
            }
            if (kp <= 0.0) {
                double root = bisect([&](double t) { return Kp(sign * t); }, std::abs(y_prev),
                                     std::abs(yy), 1e-16);
                return root;
            }
            y_prev = yy;
            if (std::abs(yy) >= half_width * (1.0 - 1e-12)) return half_width;
        }
        return half_width;
    };

    double r = std::min(scan_side(+1.0), scan_side(-1.0));
    if (!(r > 0.0)) throw std::runtime_error("maximal_interval: K' not positive near 0");
    if (!std::isfinite(r)) return Interval::whole_line();
    return Interval{-r, r};
}

ConstructionResult from_even_function(const EvenFunction& P) {
    ConstructionResult res;
    res.I = maximal_interval(P);

    const RealFunction Pf = P.P;
    // K is defined by the formula on all of dom(P); it is increasing on I.
    std::optional<RealFunction::Map> Kd;
    if (Pf.has_derivative())
        Kd = [Pf](double y) { return 0.5 * (1.0 + Pf.derivative(y)); };
    res.K = RealFunction([Pf](double y) { return 0.5 * (y + Pf(y)); }, Pf.domain(), Kd);

    const Interval I = res.I;
    const RealFunction K = res.K;
    auto K_formula = [K](double y) { return K(y); };

    // J = K(I), endpoint images as one-sided limits (direct evaluation when
    // the endpoint is interior to dom(P)).
    auto endpoint_image = [&](double e, double inside) {
        if (std::isfinite(e) && Pf.domain().contains(e)) return K.raw(e);
        return one_sided_limit(K_formula, e, inside);
    };
    double j_lo = endpoint_image(I.lo, I.midpoint() == 0.0 ? -1e-3 : I.midpoint());
    double j_hi = endpoint_image(I.hi, I.midpoint() == 0.0 ? 1e-3 : I.midpoint());
    res.J = Interval{j_lo, j_hi};

    const Interval J = res.J;
    auto k_eval = [K, I](double x) { return invert_monotone(K, x, I); };
    std::optional<RealFunction::Map> kd, hd;
    if (Pf.has_derivative()) {
        kd = [K, I, k_eval](double x) { return 1.0 / K.derivative(k_eval(x)); };
        hd = [K, I, k_eval](double x) { return 1.0 - 1.0 / K.derivative(k_eval(x)); };
    }
    res.k = RealFunction(k_eval, J, kd);

    res.h.h = RealFunction([k_eval](double x) { return x - k_eval(x); }, J, hd);
    res.h.J = J;
    res.h.fixed_point = 0.0;
    res.h.smooth = (P.continuity == Continuity::C1) && Pf.has_derivative();
    res.h.name = "from_even(" + (P.name.empty() ? std::string("P") : P.name) + ")";

    auto rep = verify_involution(res.h.h, J, 24, 1e-7);
    if (!rep.passed())
        throw std::runtime_error("from_even_function: constructed map failed verification");
    return res;
}

EvenFunction even_from_involution(const Involution& inv) {
    const RealFunction h = inv.h;
    const Interval J = inv.J;

    std::optional<RealFunction::Map> kd;
    if (h.has_derivative()) kd = [h](double x) { return 1.0 - h.derivative(x); };
    RealFunction k([h](double x) { return x - h(x); }, J, kd);

    Interval I = J.bounded() ? Interval{J.lo - J.hi, J.hi - J.lo} : Interval::whole_line();

    EvenFunction out;
    out.continuity = inv.smooth ? Continuity::C1 : Continuity::C0;
    out.name = "even_from(" + inv.name + ")";
    std::optional<RealFunction::Map> Pd;
    auto kinv = [k, J](double y) { return invert_monotone(k, y, J); };
    if (h.has_derivative())
        Pd = [k, kinv](double y) { return 2.0 / k.derivative(kinv(y)) - 1.0; };
    out.P = RealFunction([kinv](double y) { return 2.0 * kinv(y) - y; }, I, Pd);
    return out;
}

Involution from_symmetric_equation(const SymmetricEquation& eq,
                                   const std::vector<double>& x_grid) {
    if (std::abs(eq.f(0.0, 0.0)) > 1e-12)
        throw std::invalid_argument("from_symmetric_equation: f(0,0) != 0");

    const Interval& W = eq.omega;
    if (!W.contains(0.0)) throw std::invalid_argument("from_symmetric_equation: 0 not in Omega");

    // symmetry residual check on a sample of pairs
    for (double u : W.interior_samples(12)) {
        for (double v : W.interior_samples(8)) {
            double s = std::abs(eq.f(u, v) - eq.f(v, u));
            if (s > 1e-9 * (1.0 + std::abs(eq.f(u, v))))
                throw std::invalid_argument("from_symmetric_equation: f is not symmetric");
        }
    }

    double d2_origin = eq.d2(0.0, 0.0);
    if (std::abs(d2_origin) < 1e-8 * (1.0 + std::abs(eq.d1(0.0, 0.0))))
        throw std::runtime_error("from_symmetric_equation: df/dy vanishes at the origin");

    std::vector<double> pos, neg;
    for (double x : x_grid) {
        if (!W.contains(x)) continue;
        if (x > 0.0) pos.push_back(x);
        if (x < 0.0) neg.push_back(x);
    }
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end(), std::greater<>());

    std::vector<std::pair<double, double>> table{{0.0, 0.0}};

    auto trace_side = [&](const std::vector<double>& xs) {
        double y_prev = 0.0, x_prev = 0.0;
        for (double x : xs) {
            double dx = std::abs(x - x_prev);
            double seed = y_prev;
            // Newton from the previous solution
            double y = seed;
            bool converged = false;
            for (int it = 0; it < 60; ++it) {
                double fv = eq.f(x, y);
                if (std::abs(fv) <= 1e-12) {
                    converged = true;
                    break;
                }
                double d = eq.d2(x, y);
                if (d == 0.0) break;
                double yn = y - fv / d;
                if (!W.contains(yn)) break;
                y = yn;
            }
            if (!converged) {
                // bisection fallback around the previous solution
                double half = std::max(2.0 * dx, 1e-6);
                double a = y_prev, b = y_prev;
                bool found = false;
                for (int i = 0; i < 60; ++i, half *= 2.0) {
                    a = std::max(y_prev - half, 0.5 * (a + W.lo));
                    b = std::min(y_prev + half, 0.5 * (b + W.hi));
                    if (eq.f(x, a) * eq.f(x, b) < 0.0) {
                        found = true;
                        break;
                    }
                }
                if (!found) return;  // branch lost: truncate this side
                y = bisect([&](double t) { return eq.f(x, t); }, a, b, 1e-15);
            }
            if (!W.contains(y)) return;  // branch leaves Omega: truncate
            double d1 = eq.d1(x, y), d2 = eq.d2(x, y);
            if (std::abs(d2) < 1e-8 * (1.0 + std::abs(d1))) return;  // implicit slope blows up
            table.emplace_back(x, y);
            y_prev = y;
            x_prev = x;
        }
    };

    trace_side(pos);
    trace_side(neg);

    // mirror so h(h(x)) stays inside the table
    std::vector<std::pair<double, double>> full = table;
    for (auto& [x, y] : table) full.emplace_back(y, x);
    std::sort(full.begin(), full.end());
    full.erase(std::unique(full.begin(), full.end(),
                           [](auto& a, auto& b) { return std::abs(a.first - b.first) < 1e-13; }),
               full.end());
    if (full.size() < 3)
        throw std::runtime_error("from_symmetric_equation: branch too short to tabulate");

    std::vector<double> xs, ys;
    xs.reserve(full.size());
    ys.reserve(full.size());
    for (auto& [x, y] : full) {
        if (!ys.empty() && !(y < ys.back())) continue;  // enforce strict decrease
        xs.push_back(x);
        ys.push_back(y);
    }

    auto interp = std::make_shared<MonotoneCubic>(std::move(xs), std::move(ys));
    Involution inv;
    inv.J = Interval{interp->lo(), interp->hi()};
    inv.h = RealFunction(
        [interp](double x) { return (*interp)(std::clamp(x, interp->lo(), interp->hi())); },
        inv.J, [interp](double x) { return interp->slope(x); });
    inv.fixed_point = 0.0;
    inv.smooth = true;
    inv.name = "implicit(" + (eq.name.empty() ? std::string("f") : eq.name) + ")";
    return inv;
}

EvenFunction even_preset(const std::string& name, const std::vector<double>& params) {
    EvenFunction P;
    P.name = name;
    if (name == "y2_over_8") {
        P.P = RealFunction([](double y) { return y * y / 8.0; }, Interval::whole_line(),
                           [](double y) { return y / 4.0; });
        return P;
    }
    if (name == "y6") {
        P.P = RealFunction([](double y) { return std::pow(y, 6); }, Interval::whole_line(),
                           [](double y) { return 6.0 * std::pow(y, 5); });
        return P;
    }
    if (name == "abs_lambda") {
        if (params.empty() || !(params[0] > 0.0))
            throw std::invalid_argument("abs_lambda needs lambda > 0");
        double c = (1.0 - params[0]) / (1.0 + params[0]);
        P.P = RealFunction([c](double y) { return c * std::abs(y); }, Interval::whole_line());
        P.continuity = Continuity::C0;
        return P;
    }
    if (name == "log_cosh") {
        P.P = RealFunction([](double y) { return -2.0 * std::log(std::cosh(0.5 * y)); },
                           Interval::whole_line(),
                           [](double y) { return -std::tanh(0.5 * y); });
        return P;
    }
    if (name == "zero") {
        P.P = RealFunction([](double) { return 0.0; }, Interval::whole_line(),
                           [](double) { return 0.0; });
        return P;
    }
    throw std::invalid_argument("even_preset: unknown name '" + name + "'");
}

SymmetricEquation equation_preset(const std::string& name) {
    SymmetricEquation eq;
    eq.name = name;
    if (name == "linear") {
        eq.f = [](double x, double y) { return x + y; };
        eq.omega = Interval::whole_line();
        eq.df_dx = [](double, double) { return 1.0; };
        eq.df_dy = [](double, double) { return 1.0; };
        return eq;
    }
    if (name == "hyperbola") {
        eq.f = [](double x, double y) { return x + y + x * y; };
        eq.omega = Interval{-1.0, std::numeric_limits<double>::infinity()};
        eq.df_dx = [](double, double y) { return 1.0 + y; };
        eq.df_dy = [](double x, double) { return 1.0 + x; };
        return eq;
    }
    if (name == "cubic2") {
        eq.f = [](double x, double y) {
            double u = x + 1.0, v = y + 1.0;
            return u * u * u + v * v * v - 2.0;
        };
        eq.omega = Interval{-1.0, std::cbrt(2.0) - 1.0};
        eq.df_dx = [](double x, double) { return 3.0 * (x + 1.0) * (x + 1.0); };
        eq.df_dy = [](double, double y) { return 3.0 * (y + 1.0) * (y + 1.0); };
        return eq;
    }
    throw std::invalid_argument("equation_preset: unknown name '" + name + "'");
}

}  // namespace invo
