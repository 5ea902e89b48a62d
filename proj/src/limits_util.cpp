#include "involution/limits_util.hpp"

#include <cmath>
#include <limits>

namespace invo {

double one_sided_limit(const std::function<double(double)>& g, double endpoint, double inside) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    double last = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(endpoint)) {
        double d = 0.5 * std::abs(endpoint - inside);
        for (int k = 0; k < 60 && d > 0.0; ++k, d *= 0.5) {
            double x = endpoint + (inside > endpoint ? d : -d);
            double v;
            try {
                v = g(x);
            } catch (...) {
                break;
            }
            if (!std::isfinite(v)) break;
            last = v;
        }
    } else {
        double sign = endpoint > 0 ? 1.0 : -1.0;
        double prev = std::numeric_limits<double>::quiet_NaN();
        double x = std::max(1.0, std::abs(inside));
        for (int k = 0; k < 80; ++k, x *= 2.0) {
            double v;
            try {
                v = g(sign * x);
            } catch (...) {
                break;
            }
            if (!std::isfinite(v)) break;
            last = v;
            if (!std::isnan(prev) && std::abs(v - prev) <= 1e-15 * (1.0 + std::abs(v))) break;
            prev = v;
        }
    }
    if (std::isnan(last)) return endpoint > inside ? kInf : -kInf;
    if (std::abs(last) > 1e12) return last > 0 ? kInf : -kInf;
    return last;
}

}  // namespace invo
