#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "involution/involution.hpp"
#include "involution/pchip.hpp"

namespace invo {

enum class Continuity { C0, C1 };

/// Even continuous function P on a symmetric interval with P(0)=0.
struct EvenFunction {
    RealFunction P;
    Continuity continuity = Continuity::C1;
    std::string name;
};

/// Output of the even-function -> involution construction:
/// K(y) = (y + P(y))/2 maps I onto J, k = K^{-1}, h(x) = x - k(x).
struct ConstructionResult {
    Involution h;
    RealFunction K;  // I -> J
    RealFunction k;  // J -> I, numeric inverse of K
    Interval I;
    Interval J;
};

/// Symmetric implicit equation f(x,y)=0 through the origin on an open
/// rectangular region Omega x Omega.
struct SymmetricEquation {
    std::function<double(double, double)> f;
    Interval omega;  // the square Omega = omega x omega
    std::function<double(double, double)> df_dx;  // optional analytic partials
    std::function<double(double, double)> df_dy;
    std::string name;

    double d1(double x, double y) const;
    double d2(double x, double y) const;
};

/// Solves K(y) = x for strictly increasing K: geometric bracket expansion,
/// bisection, then Newton refinement when a derivative is available.
double invert_monotone(const RealFunction& K, double x, Interval bracket, double tol = 1e-13);

/// Largest symmetric open interval (-r, r) inside dom(P) on which
/// K(y)=(y+P(y))/2 is strictly increasing. For C1 P the boundary is the
/// first sign change of K'; for C0 P a sampled strict-increase scan.
Interval maximal_interval(const EvenFunction& P);

/// Even function -> involution (forward direction of the correspondence).
ConstructionResult from_even_function(const EvenFunction& P);

/// Involution -> even function P(y) = 2 k^{-1}(y) - y on I = k(J).
EvenFunction even_from_involution(const Involution& h);

/// Traces the zero branch of a symmetric equation through the origin and
/// returns an involution backed by a monotone cubic table (the table is
/// stored together with its mirror so h(h(x)) never extrapolates).
Involution from_symmetric_equation(const SymmetricEquation& eq,
                                   const std::vector<double>& x_grid);

/// Named preset even functions: y2_over_8, y6, abs_lambda(lambda), zero.
EvenFunction even_preset(const std::string& name, const std::vector<double>& params = {});
/// Named preset symmetric equations: linear, hyperbola, cubic2.
SymmetricEquation equation_preset(const std::string& name);

}  // namespace invo
