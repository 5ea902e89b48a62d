#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace invo {

/// Monotonicity-preserving piecewise-cubic interpolant (Fritsch-Carlson
/// slope limiting) through strictly monotone abscissae.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: need >= 2 nodes");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("MonotoneCubic: x not ascending");

        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

        m_.assign(n, 0.0);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                m_[i] = 0.0;
            } else {
                // harmonic mean weighted by interval lengths
                double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
                double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
                m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        // clamp endpoint slopes to keep monotonicity
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m_[i] = m_[i + 1] = 0.0;
            } else {
                double a = m_[i] / d[i], b = m_[i + 1] / d[i];
                double s = a * a + b * b;
                if (s > 9.0) {
                    double t = 3.0 / std::sqrt(s);
                    m_[i] = t * a * d[i];
                    m_[i + 1] = t * b * d[i];
                }
            }
        }
    }

    double lo() const { return x_.front(); }
    double hi() const { return x_.back(); }

    double operator()(double x) const {
        if (!(x >= x_.front() && x <= x_.back()))
            throw std::domain_error("MonotoneCubic: query outside table");
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = (it == x_.begin()) ? 0 : std::size_t(it - x_.begin()) - 1;
        i = std::min(i, x_.size() - 2);
        double h = x_[i + 1] - x_[i];
        double t = (x - x_[i]) / h;
        double t2 = t * t, t3 = t2 * t;
        return y_[i] * (2 * t3 - 3 * t2 + 1) + h * m_[i] * (t3 - 2 * t2 + t) +
               y_[i + 1] * (-2 * t3 + 3 * t2) + h * m_[i + 1] * (t3 - t2);
    }

    double slope(double x) const {
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = (it == x_.begin()) ? 0 : std::size_t(it - x_.begin()) - 1;
        i = std::min(i, x_.size() - 2);
        double h = x_[i + 1] - x_[i];
        double t = (x - x_[i]) / h;
        double t2 = t * t;
        return (y_[i] * (6 * t2 - 6 * t) + h * m_[i] * (3 * t2 - 4 * t + 1) +
                y_[i + 1] * (-6 * t2 + 6 * t) + h * m_[i + 1] * (3 * t2 - 2 * t)) /
               h;
    }

    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }

  private:
    std::vector<double> x_, y_, m_;
};

}  // namespace invo
