// Python bindings for the involutions library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "involution/acceptance.hpp"
#include "involution/catalog.hpp"
#include "involution/centralforce.hpp"
#include "involution/construct.hpp"
#include "involution/fde.hpp"
#include "involution/isochrony.hpp"

namespace py = pybind11;
using namespace invo;

PYBIND11_MODULE(_involutions, m) {
    m.doc() = "Decreasing involutions of real intervals: construction, isochronous "
              "potentials, central-force stability, and a functional-differential "
              "equation with the deviating argument -t/(1+t).";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("contains", &Interval::contains)
        .def("__repr__", [](const Interval& J) {
            std::ostringstream os;
            os << "Interval(" << J.lo << ", " << J.hi << ")";
            return os.str();
        });

    py::class_<RealFunction>(m, "RealFunction")
        .def(py::init([](std::function<double(double)> f, const Interval& J) {
                 return RealFunction(std::move(f), J);
             }),
             py::arg("f"), py::arg("domain"))
        .def("__call__", &RealFunction::operator())
        .def("derivative", &RealFunction::derivative)
        .def_property_readonly("domain", &RealFunction::domain);

    py::class_<Involution>(m, "Involution")
        .def("__call__", &Involution::operator())
        .def_readonly("h", &Involution::h)
        .def_readonly("J", &Involution::J)
        .def_readonly("fixed_point", &Involution::fixed_point)
        .def_readonly("smooth", &Involution::smooth)
        .def_readonly("kink", &Involution::kink)
        .def_readonly("name", &Involution::name)
        .def_readonly("params", &Involution::params)
        .def("__repr__",
             [](const Involution& h) { return "Involution('" + h.name + "')"; });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("max_involution_residual", &VerificationReport::max_involution_residual)
        .def_readonly("monotonicity_ok", &VerificationReport::monotonicity_ok)
        .def_readonly("origin_residual", &VerificationReport::origin_residual)
        .def_readonly("samples_used", &VerificationReport::samples_used)
        .def_readonly("tolerance", &VerificationReport::tolerance)
        .def("passed", &VerificationReport::passed);

    // core
    m.def("catalog", &catalog, py::arg("name"), py::arg("params") = std::vector<double>{});
    m.def("catalog_names", &catalog_names);
    m.def(
        "verify_involution",
        [](const Involution& h, std::size_t n, double tol) {
            return verify_involution(h.h, h.J, n, tol);
        },
        py::arg("h"), py::arg("n_samples") = 128, py::arg("tol") = kDefaultVerifyTol);
    m.def(
        "fixed_point",
        [](const Involution& h, double tol) { return fixed_point(h.h, h.J, tol); },
        py::arg("h"), py::arg("tol") = 1e-14);
    m.def("normalize", py::overload_cast<const Involution&>(&normalize), py::arg("h"));
    m.def("homothety", &homothety, py::arg("h"), py::arg("a"));

    // construct
    py::class_<EvenFunction>(m, "EvenFunction")
        .def_readonly("P", &EvenFunction::P)
        .def_readonly("name", &EvenFunction::name);
    py::class_<ConstructionResult>(m, "ConstructionResult")
        .def_readonly("h", &ConstructionResult::h)
        .def_readonly("K", &ConstructionResult::K)
        .def_readonly("k", &ConstructionResult::k)
        .def_readonly("I", &ConstructionResult::I)
        .def_readonly("J", &ConstructionResult::J);
    m.def("even_preset", &even_preset, py::arg("name"),
          py::arg("params") = std::vector<double>{});
    m.def("from_even_function", &from_even_function, py::arg("P"));
    m.def("even_from_involution", &even_from_involution, py::arg("h"));
    m.def(
        "from_symmetric_equation",
        [](const std::string& preset, const std::vector<double>& grid) {
            return from_symmetric_equation(equation_preset(preset), grid);
        },
        py::arg("preset"), py::arg("x_grid"));
    m.def("maximal_interval", &maximal_interval, py::arg("P"));

    // isochrony
    py::class_<Potential>(m, "Potential")
        .def_readonly("V", &Potential::V)
        .def_readonly("g", &Potential::g)
        .def_readonly("omega", &Potential::omega)
        .def_readonly("J", &Potential::J);
    py::class_<PeriodReport>(m, "PeriodReport")
        .def_readonly("energies", &PeriodReport::energies)
        .def_readonly("periods", &PeriodReport::periods)
        .def_readonly("target", &PeriodReport::target)
        .def_readonly("max_deviation", &PeriodReport::max_deviation)
        .def_readonly("tolerance", &PeriodReport::tolerance)
        .def("passed", &PeriodReport::passed);
    py::class_<ConditionResiduals>(m, "ConditionResiduals")
        .def_readonly("r4", &ConditionResiduals::r4)
        .def_readonly("r6", &ConditionResiduals::r6)
        .def_readonly("r4_rel", &ConditionResiduals::r4_rel)
        .def_readonly("r6_rel", &ConditionResiduals::r6_rel);
    m.def("potential_from_involution", &potential_from_involution, py::arg("h"),
          py::arg("omega") = 1.0);
    m.def("involution_from_potential", &involution_from_potential, py::arg("V"));
    m.def("estimate_omega", &estimate_omega, py::arg("V"));
    m.def("period", &period, py::arg("V"), py::arg("E"));
    m.def("period_return_map", &period_return_map, py::arg("V"), py::arg("E"),
          py::arg("steps_per_period") = 4096);
    m.def("turning_points", &turning_points, py::arg("V"), py::arg("E"));
    m.def("admissible_energies", &admissible_energies, py::arg("V"), py::arg("n") = 5);
    m.def("verify_isochrony", &verify_isochrony, py::arg("V"), py::arg("energies"),
          py::arg("tol") = 1e-6);
    m.def("necessary_conditions", &necessary_conditions, py::arg("V"),
          py::arg("fd_step") = 0.0);

    // central force
    py::class_<CentralForceSystem>(m, "CentralForceSystem")
        .def_readonly("f", &CentralForceSystem::f)
        .def_readonly("V", &CentralForceSystem::V)
        .def_readonly("name", &CentralForceSystem::name);
    py::class_<State4>(m, "State4")
        .def(py::init([](double x, double vx, double y, double vy) {
                 return State4{x, vx, y, vy, 0.0};
             }),
             py::arg("x"), py::arg("vx"), py::arg("y"), py::arg("vy"))
        .def_readonly("x", &State4::x)
        .def_readonly("vx", &State4::vx)
        .def_readonly("y", &State4::y)
        .def_readonly("vy", &State4::vy)
        .def_readonly("t", &State4::t);
    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("energy_drift", &Trajectory::energy_drift)
        .def_readonly("momentum_drift", &Trajectory::momentum_drift)
        .def_readonly("initial_energy", &Trajectory::initial_energy)
        .def_readonly("initial_momentum", &Trajectory::initial_momentum);
    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("samples", &StabilityReport::samples)
        .def_readonly("residuals", &StabilityReport::residuals)
        .def_readonly("max_normalized", &StabilityReport::max_normalized)
        .def_readonly("stable", &StabilityReport::stable)
        .def_readonly("tolerance", &StabilityReport::tolerance);
    m.def("system_preset", &system_preset, py::arg("name"));
    m.def("stability_condition", &stability_condition, py::arg("system"), py::arg("samples"),
          py::arg("tol") = 1e-8);
    m.def("simulate", &simulate, py::arg("system"), py::arg("s0"), py::arg("t_end"),
          py::arg("dt_out"), py::arg("rel_tol") = 1e-10);
    m.def("figure5_experiment", &figure5_experiment, py::arg("dt_out") = 0.01);

    // fde
    py::class_<FdeSolution>(m, "FdeSolution")
        .def_readonly("a", &FdeSolution::a)
        .def_readonly("y0", &FdeSolution::y0)
        .def_readonly("t_grid", &FdeSolution::t_grid)
        .def_readonly("y", &FdeSolution::y)
        .def_readonly("yp", &FdeSolution::yp)
        .def("eval", &FdeSolution::eval)
        .def("eval_derivative", &FdeSolution::eval_derivative)
        .def_property_readonly("regime",
                               [](const FdeSolution& s) { return regime_name(s.regime); });
    m.def("fde_closed_form", &closed_form, py::arg("a"), py::arg("y0"), py::arg("t"));
    m.def(
        "fde_solve",
        [](double a, double y0, double t_lo, double t_hi) {
            return solve_numeric({a, y0, Interval{t_lo, t_hi}});
        },
        py::arg("a"), py::arg("y0") = 1.0, py::arg("t_lo") = -0.5, py::arg("t_hi") = 10.0);
    m.def("fde_residual_check", &residual_check, py::arg("solution"), py::arg("a"));

    m.def("run_acceptance", []() {
        std::ostringstream os;
        bool ok = run_acceptance(os);
        return py::make_tuple(ok, os.str());
    });
}
