#pragma once

#include <string>
#include <vector>

#include "involution/interval.hpp"

namespace invo {

/// Initial-value problem y'(t) = a y(h(t)), y(0) = y0, with the deviating
/// argument h(t) = -t/(1+t) on (-1, inf).
struct FdeProblem {
    double a = 0.0;
    double y0 = 1.0;
    Interval t_span{-0.5, 10.0};  // must satisfy t_span.lo > -1
};

enum class FdeRegime { Oscillatory, CriticalPlus, CriticalMinus, Subcritical };

/// Numeric solution of the equivalent second-order problem
/// y'' = -a^2/(1+t)^2 y, y(0)=y0, y'(0)=a y0, on a grid uniform in
/// ln(1+t); evaluation between nodes is cubic Hermite from (y, y').
struct FdeSolution {
    double a = 0.0;
    double y0 = 1.0;
    FdeRegime regime = FdeRegime::Subcritical;
    std::vector<double> t_grid;  // ascending
    std::vector<double> y;
    std::vector<double> yp;

    double eval(double t) const;
    double eval_derivative(double t) const;
    double t_lo() const { return t_grid.front(); }
    double t_hi() const { return t_grid.back(); }
};

FdeRegime fde_regime(double a);
std::string regime_name(FdeRegime r);

/// Closed-form solution; dispatch on |a| vs 1/2 (a relative band of 1e-12
/// routes near-critical values to the limiting formula).
double closed_form(double a, double y0, double t);

/// Solves the reduced Cauchy problem over p.t_span, automatically extended
/// below 0 so the grid also covers h(t) for every t in the span.
FdeSolution solve_numeric(const FdeProblem& p);

/// max_t |y'(t) - a y(h(t))| over the solution grid restricted to points
/// whose image h(t) is covered.
double residual_check(const FdeSolution& sol, double a);

}  // namespace invo
