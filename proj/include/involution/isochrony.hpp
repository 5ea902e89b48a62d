#pragma once

#include <array>
#include <vector>

#include "involution/involution.hpp"

namespace invo {

/// Potential well V on an interval J containing 0, with V(0)=0, its
/// derivative g = V' and the angular frequency omega = sqrt(V''(0)).
struct Potential {
    RealFunction V;
    RealFunction g;
    double omega = 0.0;
    Interval J;
};

struct PeriodReport {
    std::vector<double> energies;
    std::vector<double> periods;
    double target = 0.0;  // 2 pi / omega
    double max_deviation = 0.0;
    double tolerance = 0.0;

    bool passed() const { return max_deviation <= tolerance; }
};

struct ConditionResiduals {
    double r4 = 0.0;  // V4(0) - 5 V3(0)^2 / (3 V2(0))
    double r6 = 0.0;  // V6(0) - 7 V3(0) V5(0)/V2(0) + 140 V3(0)^4 / (9 V2(0)^3)
    double r4_rel = 0.0;
    double r6_rel = 0.0;
};

/// V(x) = omega^2 (x - h(x))^2 / 8 on J; every well orbit has period
/// 2 pi / omega.
Potential potential_from_involution(const Involution& h, double omega);

/// Level pairing: h(x) is the unique opposite-sign point with V(h(x))=V(x).
/// The domain is shrunk to the largest sampling-certified well around 0
/// whose two sides reach the same energy.
Involution involution_from_potential(const Potential& V);

/// omega = sqrt(V''(0)), from g' when available, else a centered second
/// difference of V.
double estimate_omega(const Potential& V);

/// Oscillation period at energy E by singular-endpoint-free quadrature
/// (x = x_- + (x_+ - x_-) sin^2(theta) substitution).
double period(const Potential& V, double E);

/// Independent cross-check: fixed-step leapfrog return map from (x_+, 0),
/// period = time between consecutive downward crossings of x=0.
double period_return_map(const Potential& V, double E, std::size_t steps_per_period = 4096);

/// Turning points x_-(E) < 0 < x_+(E) with V = E on each side.
std::pair<double, double> turning_points(const Potential& V, double E);

/// Geometric energy grid from 1e-3*E_max to 0.9*E_max, where E_max is the
/// lower of the two one-sided energy caps of the well (probed at a finite
/// excursion when a side is unbounded).
std::vector<double> admissible_energies(const Potential& V, std::size_t n = 5);

PeriodReport verify_isochrony(const Potential& V, const std::vector<double>& energies,
                              double tol = 1e-6);

/// Derivative necessary conditions at the center, with the five required
/// derivatives obtained by Richardson-extrapolated central differences.
ConditionResiduals necessary_conditions(const Potential& V, double fd_step = 0.0);

/// Same residuals from analytically supplied derivative values
/// d[k] = V^(k)(0), k = 2..6 (d[0], d[1] ignored).
ConditionResiduals residuals_from_derivatives(const std::array<double, 7>& d);

}  // namespace invo
