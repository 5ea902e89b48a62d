#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace invo {

/// Open real interval (lo, hi); endpoints may be +-infinity.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
    }

    static Interval whole_line() { return Interval{}; }

    bool contains(double x) const { return x > lo && x < hi; }
    bool is_symmetric() const { return lo == -hi; }
    bool lo_finite() const { return std::isfinite(lo); }
    bool hi_finite() const { return std::isfinite(hi); }
    bool bounded() const { return lo_finite() && hi_finite(); }

    double midpoint() const {
        if (bounded()) return 0.5 * (lo + hi);
        if (lo_finite()) return lo + 1.0;
        if (hi_finite()) return hi - 1.0;
        return 0.0;
    }

    /// Strictly interior sample points, sorted ascending. Points cluster
    /// geometrically toward each endpoint (x = +-2^k toward infinite ends,
    /// endpoint -+ span*2^-k toward finite ends) and never touch a boundary.
    std::vector<double> interior_samples(std::size_t n) const;
};

std::vector<double> interior_samples(const Interval& J, std::size_t n);

}  // namespace invo
