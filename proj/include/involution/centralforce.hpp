#pragma once

#include <array>
#include <string>
#include <vector>

#include "involution/isochrony.hpp"

namespace invo {

/// Planar motion x'' = -x f(x), y'' = -y f(x) with f(0)=1; an attractive
/// central force that is not a gradient. The x-subsystem has the potential
/// V(x) = integral_0^x s f(s) ds.
struct CentralForceSystem {
    RealFunction f;
    Potential V;  // x-subsystem well (V.g is x f(x))
    std::string name;
};

struct State4 {
    double x = 0.0, vx = 0.0, y = 0.0, vy = 0.0;
    double t = 0.0;
};

struct Trajectory {
    std::vector<State4> samples;
    double energy_drift = 0.0;    // max |E_x(t) - E_x(0)|, E_x = vx^2/2 + V(x)
    double momentum_drift = 0.0;  // max |L(t) - L(0)|, L = x vy - y vx
    double initial_energy = 0.0;
    double initial_momentum = 0.0;
};

struct StabilityReport {
    std::vector<double> samples;
    std::vector<double> residuals;  // rho(x) = 1/V(x) - (1/x - 1/h(x))^2 / 2
    double max_normalized = 0.0;    // max |rho(x)| * V(x)
    bool stable = false;
    double tolerance = 0.0;
};

/// Builds the system from f; V by adaptive quadrature of s f(s) unless an
/// antiderivative is supplied.
CentralForceSystem make_system(const RealFunction& f, const std::string& name = "",
                               const RealFunction* closed_form_V = nullptr);

/// Named presets: const1 (f=1), one_plus_x2 (f=1+x^2),
/// inverse_cubic (f=8/(2+x)^3).
CentralForceSystem system_preset(const std::string& name);

/// Lyapunov-stability criterion for the full planar system: the origin is
/// stable iff 1/V(x) = (1/x - 1/h(x))^2 / 2 near 0, h the level pairing.
StabilityReport stability_condition(const CentralForceSystem& sys,
                                    const std::vector<double>& samples, double tol = 1e-8);

/// Adaptive integration of the planar system, sampled every `dt_out`.
Trajectory simulate(const CentralForceSystem& sys, const State4& s0, double t_end, double dt_out,
                    double rel_tol = 1e-10);

/// The unstable f(x)=1+x^2 run from (0.4, 0, 0, 0.5) over the three time
/// windows [0,8], [0,14], [0,38].
std::array<Trajectory, 3> figure5_experiment(double dt_out = 0.01);

}  // namespace invo
