#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace invo {

/// Bisection on [a,b] with f(a), f(b) of opposite sign; returns the midpoint
/// of the final bracket. Relative tolerance on the bracket width.
template <class F>
double bisect(F&& f, double a, double b, double rel_tol = 1e-15, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::runtime_error("bisect: endpoints do not bracket a root");
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Newton iteration with a safeguarding bracket [a,b]; falls back to
/// bisection whenever a step leaves the bracket or stalls.
template <class F, class DF>
double newton_bisect(F&& f, DF&& df, double a, double b, double x0, double tol,
                     int max_iter = 100) {
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0) throw std::runtime_error("newton_bisect: no bracket");
    double x = x0;
    for (int i = 0; i < max_iter; ++i) {
        double fx = f(x);
        if (std::abs(fx) <= tol) return x;
        if (fa * fx < 0.0)
            b = x;
        else
            a = x;
        double d = df(x);
        double step = (d != 0.0) ? fx / d : std::numeric_limits<double>::infinity();
        double xn = x - step;
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
        if (xn == x) return x;
        x = xn;
    }
    return x;
}

}  // namespace invo
