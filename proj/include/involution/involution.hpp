#pragma once

#include <optional>
#include <string>
#include <vector>

#include "involution/real_function.hpp"

namespace invo {

/// Decreasing self-inverse map of an open interval J with h(0)=0, packaged
/// with its verification metadata.
struct Involution {
    RealFunction h;
    Interval J;
    double fixed_point = 0.0;  // 0 after normalization
    bool smooth = false;       // derivative available everywhere on J
    std::optional<double> kink;  // location of non-differentiability, if any
    std::string name;            // catalog name or construction tag
    std::vector<double> params;

    double operator()(double x) const { return h(x); }
};

struct VerificationReport {
    double max_involution_residual = 0.0;  // max |h(h(x)) - x| over samples
    bool monotonicity_ok = true;
    double origin_residual = 0.0;  // |h(0)|
    std::size_t samples_used = 0;
    double tolerance = 0.0;

    bool passed() const {
        return monotonicity_ok && max_involution_residual <= tolerance &&
               origin_residual <= tolerance;
    }
};

inline constexpr double kDefaultVerifyTol = 1e-9;

/// Checks h(h(x))=x, strict decrease and h(0)=0 on an interior sample grid.
/// Residuals are measured against tol*(1+|x|). Throws DomainError if h maps
/// a sample outside J.
VerificationReport verify_involution(const RealFunction& h, const Interval& J,
                                     std::size_t n_samples = 128,
                                     double tol = kDefaultVerifyTol);

/// Unique solution of h(x)=x for a decreasing involution, by bracketing the
/// strictly increasing k(x)=x-h(x) and bisecting.
double fixed_point(const RealFunction& h, const Interval& J, double tol = 1e-14);

/// Translates h so the fixed point moves to 0: x -> h(x + xbar) - xbar on
/// J - xbar. Idempotent when h(0)=0 already.
Involution normalize(const RealFunction& h, const Interval& J);
Involution normalize(const Involution& h);

/// Rescaled involution h~(x) = h(a x)/a on J/a (order-reversed for a<0).
Involution homothety(const Involution& h, double a);

}  // namespace invo
