#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "involution/interval.hpp"

namespace invo {

/// Raised when a function is evaluated outside its declared domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluatable real -> real map with a declared open domain and an optional
/// analytic derivative. Evaluation outside the domain throws, never returns
/// a silent value.
class RealFunction {
  public:
    using Map = std::function<double(double)>;

    RealFunction() = default;
    RealFunction(Map eval, Interval domain, std::optional<Map> derivative = std::nullopt)
        : eval_(std::move(eval)), domain_(domain), derivative_(std::move(derivative)) {}

    double operator()(double x) const {
        if (!domain_.contains(x))
            throw DomainError("RealFunction: evaluation at x=" + std::to_string(x) +
                              " outside domain (" + std::to_string(domain_.lo) + ", " +
                              std::to_string(domain_.hi) + ")");
        return eval_(x);
    }

    /// Unchecked evaluation; caller guarantees x is interior.
    double raw(double x) const { return eval_(x); }

    const Interval& domain() const { return domain_; }
    bool has_derivative() const { return derivative_.has_value(); }

    /// Analytic derivative when supplied, otherwise centered difference with
    /// step cbrt(eps)*(1+|x|), shrunk if it would leave the domain.
    double derivative(double x) const {
        if (!domain_.contains(x)) throw DomainError("RealFunction::derivative outside domain");
        if (derivative_) return (*derivative_)(x);
        return finite_difference(x);
    }

    double finite_difference(double x) const {
        double h = std::cbrt(std::numeric_limits<double>::epsilon()) * (1.0 + std::abs(x));
        while (!(domain_.contains(x + h) && domain_.contains(x - h))) h *= 0.5;
        return (eval_(x + h) - eval_(x - h)) / (2.0 * h);
    }

  private:
    Map eval_;
    Interval domain_{};
    std::optional<Map> derivative_;
};

}  // namespace invo
