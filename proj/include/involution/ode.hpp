#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace invo {

/// Adaptive Dormand-Prince 5(4) integration of y' = f(t, y).
/// Steps are clamped so every requested output time is hit exactly.
template <std::size_t N>
class DormandPrince54 {
  public:
    using State = std::array<double, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    DormandPrince54(Rhs rhs, double rel_tol = 1e-10, double abs_tol = 1e-12)
        : rhs_(std::move(rhs)), rtol_(rel_tol), atol_(abs_tol) {}

    /// Integrates from (t0, y0) and calls sink(t, y) at t0, each output
    /// time, and t_end. Output times must be strictly increasing (or
    /// strictly decreasing for backward integration).
    void integrate(double t0, State y0, const std::vector<double>& output_times,
                   const std::function<void(double, const State&)>& sink) const {
        if (output_times.empty()) return;
        const double dir = (output_times.back() >= t0) ? 1.0 : -1.0;
        double t = t0;
        State y = y0;
        State k1;
        rhs_(t, y, k1);
        double h = dir * initial_step(t, y, k1);
        sink(t, y);

        for (double t_out : output_times) {
            if (dir * (t_out - t) < 0.0)
                throw std::invalid_argument("DormandPrince54: output times not ordered");
            while (dir * (t_out - t) > 1e-14 * (1.0 + std::abs(t))) {
                bool hit_output = false;
                if (dir * (t + h - t_out) >= 0.0) {
                    h = t_out - t;
                    hit_output = true;
                }
                State y_new, k1_new;
                double err = step(t, y, k1, h, y_new, k1_new);
                if (err <= 1.0) {
                    t = hit_output ? t_out : t + h;
                    y = y_new;
                    k1 = k1_new;
                }
                double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
                h *= std::clamp(fac, 0.2, 5.0);
                if (std::abs(h) < 1e-15 * (1.0 + std::abs(t)))
                    throw std::runtime_error("DormandPrince54: step size underflow");
            }
            sink(t_out, y);
        }
    }

  private:
    double initial_step(double t, const State& y, const State& f) const {
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            ny = std::max(ny, std::abs(y[i]));
            nf = std::max(nf, std::abs(f[i]));
        }
        (void)t;
        double h = (nf > 0.0) ? 0.01 * (ny + 1.0) / (nf + 1.0) : 1e-3;
        return std::min(h, 0.1);
    }

    // One trial step; returns the scaled error norm (accept when <= 1).
    double step(double t, const State& y, const State& k1, double h, State& y_out,
                State& k1_out) const {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        State k2, k3, k4, k5, k6, yt;
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs_(t + h / 5, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs_(t + 3 * h / 10, yt, k3);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs_(t + 4 * h / 5, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs_(t + 8 * h / 9, yt, k5);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        rhs_(t + h, yt, k6);
        for (std::size_t i = 0; i < N; ++i)
            y_out[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs_(t + h, y_out, k1_out);  // FSAL

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k1_out[i]);
            double sc = atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y_out[i]));
            err = std::max(err, std::abs(e) / sc);
        }
        return err;
    }

    Rhs rhs_;
    double rtol_, atol_;
};

}  // namespace invo
