#include "involution/interval.hpp"

#include <algorithm>

namespace invo {

namespace {

// Points approaching an infinite end: anchor*2, anchor*4, ... (m of them).
void push_toward_infinity(std::vector<double>& out, double anchor, double sign, std::size_t m) {
    double x = std::max(1.0, std::abs(anchor));
    for (std::size_t k = 0; k < m; ++k) {
        x *= 2.0;
        out.push_back(sign * x);
    }
}

// Points approaching a finite endpoint from inside: endpoint -+ span*2^-k.
void push_toward_finite(std::vector<double>& out, double endpoint, double span, double inward_sign,
                        std::size_t m) {
    double d = 0.25 * span;
    for (std::size_t k = 0; k < m; ++k) {
        out.push_back(endpoint + inward_sign * d);
        d *= 0.5;
    }
}

}  // namespace

std::vector<double> Interval::interior_samples(std::size_t n) const {
    if (n < 3) throw std::invalid_argument("interior_samples: need n >= 3");
    std::vector<double> pts;
    pts.reserve(n + 4);

    // exponent cap keeps geometric points within the range where double
    // precision can still resolve h near the interval ends
    const std::size_t per_side = std::min<std::size_t>(n / 2, 20);
    const double mid = midpoint();
    pts.push_back(mid);
    if (contains(0.0)) pts.push_back(0.0);

    const double span = bounded() ? (hi - lo) : 2.0;

    if (hi_finite())
        push_toward_finite(pts, hi, span, -1.0, per_side);
    else
        push_toward_infinity(pts, mid, +1.0, per_side);

    if (lo_finite())
        push_toward_finite(pts, lo, span, +1.0, per_side);
    else
        push_toward_infinity(pts, -mid, -1.0, per_side);

    // A uniform fill between the innermost geometric points keeps the grid
    // from being empty in the middle of wide intervals.
    const double a = lo_finite() ? lo + 0.25 * span : mid - 2.0;
    const double b = hi_finite() ? hi - 0.25 * span : mid + 2.0;
    const std::size_t fill =
        std::max<std::size_t>(n > 2 * per_side ? n - 2 * per_side : 0, 8);
    for (std::size_t i = 1; i < fill; ++i) pts.push_back(a + (b - a) * double(i) / double(fill));

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::erase_if(pts, [this](double x) { return !contains(x); });
    return pts;
}

std::vector<double> interior_samples(const Interval& J, std::size_t n) {
    return J.interior_samples(n);
}

}  // namespace invo
