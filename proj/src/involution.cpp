#include "involution/involution.hpp"

#include <algorithm>
#include <cmath>

namespace invo {

VerificationReport verify_involution(const RealFunction& h, const Interval& J,
                                     std::size_t n_samples, double tol) {
    if (n_samples < 3) throw std::invalid_argument("verify_involution: n_samples >= 3");
    auto xs = J.interior_samples(n_samples);

    VerificationReport rep;
    rep.tolerance = tol;

    // Samples whose image lands within delta of a finite endpoint of J are
    // "saturated": the curve has flattened to the point where a double cannot
    // represent h(x) with enough resolution to recover x from it, so the
    // round-trip residual there measures conditioning, not correctness.
    const double sat = std::cbrt(std::numeric_limits<double>::epsilon());
    auto saturated = [&](double y) {
        if (J.lo_finite() && std::abs(y - J.lo) <= sat * (1.0 + std::abs(J.lo))) return true;
        if (J.hi_finite() && std::abs(y - J.hi) <= sat * (1.0 + std::abs(J.hi))) return true;
        return false;
    };

    std::size_t used = 0;
    double prev_val = std::numeric_limits<double>::quiet_NaN();
    for (double x : xs) {
        double y = h.raw(x);
        if (saturated(y)) continue;
        if (!J.contains(y))
            throw DomainError("verify_involution: h(x) outside J at x=" + std::to_string(x));
        ++used;
        double back = h(y);
        double resid = std::abs(back - x) / (1.0 + std::abs(x));
        // Where h is locally flat (h'(x) ~ 0, e.g. the cube_root map at the
        // reflection of its kink), h(h(x)) cannot recover x in doubles, but
        // the next step of the orbit is perfectly conditioned there. A true
        // non-involution fails in both directions.
        if (resid > tol && J.contains(back) && !saturated(back))
            resid = std::min(resid, std::abs(h(back) - y) / (1.0 + std::abs(y)));
        rep.max_involution_residual = std::max(rep.max_involution_residual, resid);
        if (!std::isnan(prev_val) && !(y < prev_val)) rep.monotonicity_ok = false;
        prev_val = y;
    }
    rep.samples_used = used;
    if (J.contains(0.0)) rep.origin_residual = std::abs(h(0.0));
    return rep;
}

double fixed_point(const RealFunction& h, const Interval& J, double tol) {
    auto k = [&](double x) { return x - h(x); };

    // Expand a bracket [a,b] with k(a)<0<k(b) outward from the midpoint.
    double x0 = J.midpoint();
    double k0 = k(x0);
    if (k0 == 0.0) return x0;

    double a = x0, b = x0;
    double step = J.bounded() ? 0.01 * (J.hi - J.lo) : 0.5;
    const double max_expansion = 1e6 * step;
    if (k0 > 0.0) {
        // fixed point lies below x0; the proof's bracket is (h(x0), x0)
        b = x0;
        while (step <= max_expansion) {
            a = std::max(x0 - step, 0.5 * (J.lo + a));
            if (!J.contains(a)) a = 0.5 * (J.lo + b);
            if (k(a) < 0.0) break;
            b = a;
            step *= 2.0;
        }
        if (!(k(a) < 0.0))
            throw std::runtime_error("fixed_point: no sign change; not a decreasing involution?");
    } else {
        a = x0;
        while (step <= max_expansion) {
            b = std::min(x0 + step, 0.5 * (J.hi + b));
            if (!J.contains(b)) b = 0.5 * (J.hi + a);
            if (k(b) > 0.0) break;
            a = b;
            step *= 2.0;
        }
        if (!(k(b) > 0.0))
            throw std::runtime_error("fixed_point: no sign change; not a decreasing involution?");
    }

    for (int i = 0; i < 200 && (b - a) > tol * (1.0 + std::abs(a)); ++i) {
        double m = 0.5 * (a + b);
        (k(m) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

Involution normalize(const RealFunction& h, const Interval& J) {
    double xbar = fixed_point(h, J);
    Involution out;
    out.fixed_point = 0.0;
    out.J = Interval{J.lo - xbar, J.hi - xbar};
    out.smooth = h.has_derivative();
    Interval shifted = out.J;
    if (h.has_derivative()) {
        out.h = RealFunction([h, xbar](double x) { return h(x + xbar) - xbar; }, shifted,
                             [h, xbar](double x) { return h.derivative(x + xbar); });
    } else {
        out.h = RealFunction([h, xbar](double x) { return h(x + xbar) - xbar; }, shifted);
    }
    out.name = "normalized";
    return out;
}

Involution normalize(const Involution& inv) {
    Involution out = normalize(inv.h, inv.J);
    out.smooth = inv.smooth;
    out.name = inv.name;
    out.params = inv.params;
    if (inv.kink) {
        double xbar = fixed_point(inv.h, inv.J);
        out.kink = *inv.kink - xbar;
    }
    return out;
}

Involution homothety(const Involution& inv, double a) {
    if (a == 0.0) throw std::invalid_argument("homothety: a must be nonzero");
    Involution out;
    double lo = inv.J.lo / a, hi = inv.J.hi / a;
    if (a < 0.0) std::swap(lo, hi);
    out.J = Interval{lo, hi};
    out.fixed_point = 0.0;
    out.smooth = inv.smooth;
    out.name = inv.name + "_scaled";
    out.params = inv.params;
    if (inv.kink) out.kink = *inv.kink / a;
    const RealFunction h = inv.h;
    if (h.has_derivative()) {
        out.h = RealFunction([h, a](double x) { return h(a * x) / a; }, out.J,
                             [h, a](double x) { return h.derivative(a * x); });
    } else {
        out.h = RealFunction([h, a](double x) { return h(a * x) / a; }, out.J);
    }
    return out;
}

}  // namespace invo
