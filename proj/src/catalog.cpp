#include "involution/catalog.hpp"

#include <cmath>

namespace invo {

namespace {

double require_param(const std::vector<double>& params, std::size_t i, const std::string& name) {
    if (params.size() <= i)
        throw std::invalid_argument("catalog: " + name + " requires a parameter");
    return params[i];
}

Involution make_negation() {
    Involution inv;
    inv.J = Interval::whole_line();
    inv.h = RealFunction([](double x) { return -x; }, inv.J, [](double) { return -1.0; });
    inv.smooth = true;
    inv.name = "negation";
    return inv;
}

Involution make_piecewise_linear(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("catalog: piecewise_linear needs lambda > 0");
    Involution inv;
    inv.J = Interval::whole_line();
    inv.h = RealFunction(
        [lambda](double x) { return x <= 0.0 ? -x / lambda : -lambda * x; }, inv.J);
    inv.smooth = (lambda == 1.0);
    if (!inv.smooth) inv.kink = 0.0;
    inv.name = "piecewise_linear";
    inv.params = {lambda};
    return inv;
}

Involution make_log_exp() {
    Involution inv;
    inv.J = Interval{-std::numeric_limits<double>::infinity(), std::log(2.0)};
    inv.h = RealFunction([](double x) { return std::log(2.0 - std::exp(x)); }, inv.J,
                         [](double x) {
                             double e = std::exp(x);
                             return -e / (2.0 - e);
                         });
    inv.smooth = true;
    inv.name = "log_exp";
    return inv;
}

Involution make_rational(double a) {
    Involution inv;
    if (a > 0.0)
        inv.J = Interval{-1.0 / a, std::numeric_limits<double>::infinity()};
    else if (a < 0.0)
        inv.J = Interval{-std::numeric_limits<double>::infinity(), -1.0 / a};
    else
        inv.J = Interval::whole_line();
    inv.h = RealFunction([a](double x) { return -x / (1.0 + a * x); }, inv.J,
                         [a](double x) {
                             double d = 1.0 + a * x;
                             return -1.0 / (d * d);
                         });
    inv.smooth = true;
    inv.name = "rational";
    inv.params = {a};
    return inv;
}

Involution make_cube_root(double a) {
    Involution inv;
    inv.J = Interval::whole_line();
    const double c = std::cbrt(0.5 * a);  // cbrt(a/2), the original fixed point
    inv.h = RealFunction(
        [a, c](double x) {
            double u = x + c;
            return std::cbrt(a - u * u * u) - c;
        },
        inv.J);
    inv.smooth = (a == 0.0);
    if (a != 0.0) inv.kink = std::cbrt(a) - c;  // cbrt(a) - cbrt(a/2)
    inv.name = "cube_root";
    inv.params = {a};
    return inv;
}

Involution make_parabolic() {
    Involution inv;
    inv.J = Interval{-1.0, 3.0};
    inv.h = RealFunction([](double x) { return x + 4.0 - 4.0 * std::sqrt(1.0 + x); }, inv.J,
                         [](double x) { return 1.0 - 2.0 / std::sqrt(1.0 + x); });
    inv.smooth = true;
    inv.name = "parabolic";
    return inv;
}

}  // namespace

Involution catalog(const std::string& name, const std::vector<double>& params) {
    if (name == "negation") return make_negation();
    if (name == "piecewise_linear") return make_piecewise_linear(require_param(params, 0, name));
    if (name == "log_exp") return make_log_exp();
    if (name == "rational") return make_rational(require_param(params, 0, name));
    if (name == "cube_root") return make_cube_root(require_param(params, 0, name));
    if (name == "parabolic") return make_parabolic();
    throw std::invalid_argument("catalog: unknown involution name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"negation", "piecewise_linear", "log_exp", "rational", "cube_root", "parabolic"};
}

}  // namespace invo
