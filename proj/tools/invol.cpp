// Command-line front end for the involutions library.
//
// One subcommand per invocation; numeric tables are emitted as CSV (header
// row, comma separators, 17 significant digits, LF endings) or JSON.
// Exit codes: 0 success / verification pass, 1 verification failure or
// numerical error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "involution/acceptance.hpp"
#include "involution/catalog.hpp"
#include "involution/centralforce.hpp"
#include "involution/construct.hpp"
#include "involution/fde.hpp"
#include "involution/isochrony.hpp"

using json = nlohmann::ordered_json;
using namespace invo;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double env_tol(const char* name, double fallback) {
    const char* s = std::getenv(name);
    if (!s) return fallback;
    try {
        double v = std::stod(s);
        if (!(v > 0.0)) throw std::invalid_argument("non-positive");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string(name) + ": invalid tolerance override");
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
        os << "\n";
    }
}

json table_json(const Table& t) {
    json cols = json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        json v = json::array();
        for (const auto& row : t.rows) v.push_back(row[i]);
        cols[t.header[i]] = std::move(v);
    }
    return cols;
}

void emit(const std::string& path, const std::string& format, const Table& t,
          const json& meta = json::object()) {
    std::ostringstream buf;
    if (format == "json") {
        json out = meta;
        out["data"] = table_json(t);
        buf << out.dump(2) << "\n";
    } else {
        write_csv(buf, t);
    }
    if (path.empty() || path == "-") {
        std::cout << buf.str();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to '" + path + "'");
    f << buf.str();
}

std::vector<double> window_samples(const Interval& J, std::size_t n, double clamp = 8.0) {
    double lo = std::max(J.lo, -clamp), hi = std::min(J.hi, clamp);
    std::vector<double> xs;
    for (std::size_t i = 1; i <= n; ++i)
        xs.push_back(lo + (hi - lo) * double(i) / double(n + 1));
    return xs;
}

std::string canonical_even(std::string name) {
    if (name == "y^2/8" || name == "y2/8") return "y2_over_8";
    if (name == "y^6") return "y6";
    if (name == "abs" || name == "c|y|") return "abs_lambda";
    return name;
}

json interval_json(const Interval& J) {
    return json{{"lo", J.lo}, {"hi", J.hi}};
}

// ---- figures -------------------------------------------------------------

struct SeriesTable {
    // long format: one labelled (x, y) series per curve
    std::vector<std::tuple<std::string, double, double>> rows;
    void add(const std::string& series, double x, double y) { rows.emplace_back(series, x, y); }
    void write_csv(std::ostream& os, const char* xcol = "x", const char* ycol = "y") const {
        os << "series," << xcol << "," << ycol << "\n";
        for (const auto& [s, x, y] : rows) os << s << "," << num(x) << "," << num(y) << "\n";
    }
};

void write_figure(const std::string& dir, int which, const SeriesTable& t, const json& meta,
                  const char* xcol = "x", const char* ycol = "y") {
    std::string base = dir + "/fig" + std::to_string(which);
    {
        std::ofstream f(base + ".csv", std::ios::binary);
        if (!f) throw std::runtime_error("cannot write to '" + base + ".csv'");
        t.write_csv(f, xcol, ycol);
    }
    {
        std::ofstream f(base + ".json", std::ios::binary);
        if (!f) throw std::runtime_error("cannot write to '" + base + ".json'");
        f << meta.dump(2) << "\n";
    }
    std::cout << base << ".csv\n" << base << ".json\n";
}

void curve_with_diagonal(SeriesTable& t, const RealFunction& h, const Interval& J, int n,
                         double clamp = 6.0) {
    double lo = std::max(J.lo, -clamp), hi = std::min(J.hi, clamp);
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * double(i) / double(n + 1);
        t.add("h", x, h(x));
    }
    t.add("diagonal", lo, lo);
    t.add("diagonal", hi, hi);
}

void run_figures(int which, const std::string& dir) {
    const int n = 400;
    if (which == 1) {
        auto res = from_even_function(even_preset("y2_over_8"));
        SeriesTable t;
        curve_with_diagonal(t, res.h.h, res.h.J, n);
        write_figure(dir, 1, t,
                     json{{"figure", 1},
                          {"curve", "involution from the even function y^2/8"},
                          {"I", interval_json(res.I)},
                          {"J", interval_json(res.J)}});
    } else if (which == 2) {
        auto res = from_even_function(even_preset("y6"));
        SeriesTable t;
        curve_with_diagonal(t, res.h.h, res.h.J, n);
        write_figure(dir, 2, t,
                     json{{"figure", 2},
                          {"curve", "involution from the even function y^6"},
                          {"I", interval_json(res.I)},
                          {"J", interval_json(res.J)}});
    } else if (which == 3) {
        auto h = catalog("cube_root", {2.0});
        SeriesTable t;
        curve_with_diagonal(t, h.h, h.J, n, 6.0);
        write_figure(dir, 3, t,
                     json{{"figure", 3},
                          {"curve", "global cube-root involution, a = 2"},
                          {"window", interval_json(Interval{-6.0, 6.0})},
                          {"kink", h.kink ? json(*h.kink) : json()}});
    } else if (which == 4) {
        double c = std::cbrt(2.0) - 1.0;
        std::vector<double> grid;
        for (int i = 1; i <= 300; ++i) {
            grid.push_back(-0.999 * double(i) / 300.0);
            grid.push_back((c - 1e-4) * double(i) / 300.0);
        }
        auto h = from_symmetric_equation(equation_preset("cubic2"), grid);
        SeriesTable t;
        curve_with_diagonal(t, h.h, h.J, n, 6.0);
        // auxiliary straight line L: x + y + 2 = 0
        t.add("line_L", -1.5, -0.5);
        t.add("line_L", 0.5, -2.5);
        write_figure(dir, 4, t,
                     json{{"figure", 4},
                          {"curve", "smooth branch of (x+1)^3 + (y+1)^3 = 2"},
                          {"line_L", "x + y + 2 = 0"},
                          {"J", interval_json(h.J)}});
    } else if (which == 5) {
        auto runs = figure5_experiment();
        const char* names[3] = {"window_0_8", "window_0_14", "window_0_38"};
        SeriesTable t;
        json windows = json::array();
        for (int i = 0; i < 3; ++i) {
            for (const auto& s : runs[i].samples) t.add(names[i], s.x, s.y);
            windows.push_back(json{{"series", names[i]},
                                   {"t_end", runs[i].samples.back().t},
                                   {"energy_drift", runs[i].energy_drift},
                                   {"momentum_drift", runs[i].momentum_drift}});
        }
        write_figure(dir, 5, t,
                     json{{"figure", 5},
                          {"system", "x'' = -x(1+x^2), y'' = -y(1+x^2)"},
                          {"initial_state", {0.4, 0.0, 0.0, 0.5}},
                          {"initial_energy_x", runs[2].initial_energy},
                          {"initial_momentum", runs[2].initial_momentum},
                          {"windows", windows}});
    } else {
        throw std::invalid_argument("figures: --which must be 1..5");
    }
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"involutions of real intervals: construction, isochronous potentials, "
                 "central-force stability, and functional-differential equations"};
    app.require_subcommand(1);

    std::string emit_fmt = "csv", output;
    app.add_option("--emit", emit_fmt, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", output, "output path (default: stdout)");
    app.fallthrough();

    // ---- catalog ----
    auto* cmd_catalog = app.add_subcommand("catalog", "list or sample the named involutions");
    std::string cat_name;
    std::vector<double> cat_params;
    std::size_t cat_samples = 201;
    cmd_catalog->add_option("--name", cat_name, "catalog entry (omit to list)");
    cmd_catalog->add_option("--params", cat_params, "family parameters");
    cmd_catalog->add_option("--samples", cat_samples, "number of sample points");

    // ---- construct ----
    auto* cmd_construct =
        app.add_subcommand("construct", "build an involution from a preset even function");
    std::string con_even;
    std::vector<double> con_params;
    std::size_t con_samples = 401;
    cmd_construct->add_option("--even", con_even, "even function preset")->required();
    cmd_construct->add_option("--params", con_params, "preset parameters");
    cmd_construct->add_option("--samples", con_samples, "number of sample points");

    // ---- implicit ----
    auto* cmd_implicit =
        app.add_subcommand("implicit", "trace an involution from a symmetric equation");
    std::string imp_eq;
    double imp_lo = -0.9, imp_hi = 0.9;
    std::size_t imp_n = 200;
    cmd_implicit->add_option("--equation", imp_eq, "equation preset")->required();
    cmd_implicit->add_option("--grid-lo", imp_lo, "lower end of the trace grid");
    cmd_implicit->add_option("--grid-hi", imp_hi, "upper end of the trace grid");
    cmd_implicit->add_option("--grid-n", imp_n, "points per side of the grid");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check the involution identity on a grid");
    std::string ver_catalog, ver_even;
    std::vector<double> ver_params;
    std::size_t ver_samples = 128;
    double ver_tol = env_tol("INVOL_VERIFY_TOL", 1e-9);
    cmd_verify->add_option("--catalog", ver_catalog, "catalog entry to verify");
    cmd_verify->add_option("--even", ver_even, "even preset to construct and verify");
    cmd_verify->add_option("--params", ver_params, "parameters");
    cmd_verify->add_option("--samples", ver_samples, "number of sample points");
    cmd_verify->add_option("--tol", ver_tol, "residual tolerance");

    // ---- potential ----
    auto* cmd_potential =
        app.add_subcommand("potential", "isochronous potential induced by an involution");
    std::string pot_catalog = "rational";
    std::vector<double> pot_params;
    double pot_omega = 1.0;
    std::size_t pot_samples = 201;
    cmd_potential->add_option("--catalog", pot_catalog, "catalog entry");
    cmd_potential->add_option("--params", pot_params, "parameters");
    cmd_potential->add_option("--omega", pot_omega, "angular frequency");
    cmd_potential->add_option("--samples", pot_samples, "number of sample points");

    // ---- period ----
    auto* cmd_period = app.add_subcommand("period", "oscillation periods across energies");
    std::string per_catalog = "rational";
    std::vector<double> per_params, per_energies;
    double per_omega = 1.0;
    std::size_t per_count = 5;
    bool per_return_map = false, per_parallel = false, per_check = false;
    double per_tol = env_tol("INVOL_PERIOD_TOL", 1e-6);
    cmd_period->add_option("--catalog", per_catalog, "catalog entry");
    cmd_period->add_option("--params", per_params, "parameters");
    cmd_period->add_option("--omega", per_omega, "angular frequency");
    cmd_period->add_option("--energy", per_energies, "explicit energies (repeatable)");
    cmd_period->add_option("--num-energies", per_count, "geometric sweep size");
    cmd_period->add_flag("--return-map", per_return_map, "add the return-map estimate column");
    cmd_period->add_flag("--parallel", per_parallel, "evaluate energies concurrently");
    cmd_period->add_flag("--check", per_check, "exit 1 unless all periods match 2 pi / omega");
    cmd_period->add_option("--tol", per_tol, "isochrony tolerance for --check");

    // ---- stability ----
    auto* cmd_stability =
        app.add_subcommand("stability", "linearized-stability criterion for a force system");
    std::string sta_system = "one_plus_x2";
    std::size_t sta_n = 50;
    double sta_max = 0.75;
    double sta_tol = env_tol("INVOL_STABILITY_TOL", 1e-8);
    cmd_stability->add_option("--system", sta_system, "force preset");
    cmd_stability->add_option("--grid-n", sta_n, "samples per side");
    cmd_stability->add_option("--grid-max", sta_max, "largest |x| sampled");
    cmd_stability->add_option("--tol", sta_tol, "normalized residual tolerance");

    // ---- simulate ----
    auto* cmd_simulate = app.add_subcommand("simulate", "integrate the planar system");
    std::string sim_system = "one_plus_x2";
    double sim_x = 0.4, sim_vx = 0.0, sim_y = 0.0, sim_vy = 0.5;
    double sim_tend = 38.0, sim_dt = 0.02;
    double sim_rtol = env_tol("INVOL_SIM_RTOL", 1e-10);
    cmd_simulate->add_option("--system", sim_system, "force preset");
    cmd_simulate->add_option("--x", sim_x, "initial x");
    cmd_simulate->add_option("--vx", sim_vx, "initial x velocity");
    cmd_simulate->add_option("--y", sim_y, "initial y");
    cmd_simulate->add_option("--vy", sim_vy, "initial y velocity");
    cmd_simulate->add_option("--t-end", sim_tend, "end time");
    cmd_simulate->add_option("--dt", sim_dt, "output step");
    cmd_simulate->add_option("--rtol", sim_rtol, "integrator relative tolerance");

    // ---- fde ----
    auto* cmd_fde =
        app.add_subcommand("fde", "solve y'(t) = a y(-t/(1+t)) with y(0) = y0");
    double fde_a = 0.0, fde_y0 = 1.0, fde_t0 = -0.5, fde_t1 = 10.0;
    std::size_t fde_samples = 201;
    cmd_fde->add_option("--a", fde_a, "coefficient a")->required();
    cmd_fde->add_option("--y0", fde_y0, "initial value y(0)");
    cmd_fde->add_option("--t-start", fde_t0, "left end of the time span (> -1)");
    cmd_fde->add_option("--t-end", fde_t1, "right end of the time span");
    cmd_fde->add_option("--samples", fde_samples, "number of output points");

    // ---- figures ----
    auto* cmd_figures = app.add_subcommand("figures", "emit plot data for figures 1-5");
    int fig_which = 0;
    std::string fig_dir = ".";
    cmd_figures->add_option("--which", fig_which, "figure number 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    cmd_figures->add_option("--out-dir", fig_dir, "output directory");

    // ---- suite ----
    auto* cmd_suite = app.add_subcommand("suite", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_catalog) {
            if (cat_name.empty()) {
                Table t;
                if (emit_fmt == "json") {
                    json names = json::array();
                    for (const auto& n : catalog_names()) names.push_back(n);
                    emit(output, "json", t, json{{"catalog", names}});
                } else {
                    std::ostringstream buf;
                    for (const auto& n : catalog_names()) buf << n << "\n";
                    if (output.empty() || output == "-") {
                        std::cout << buf.str();
                    } else {
                        std::ofstream f(output, std::ios::binary);
                        if (!f) throw std::runtime_error("cannot write to '" + output + "'");
                        f << buf.str();
                    }
                }
                return 0;
            }
            auto h = catalog(cat_name, cat_params);
            Table t{{"x", "h"}, {}};
            for (double x : window_samples(h.J, cat_samples)) t.rows.push_back({x, h(x)});
            emit(output, emit_fmt, t,
                 json{{"name", h.name},
                      {"params", cat_params},
                      {"J", interval_json(h.J)},
                      {"smooth", h.smooth}});
        } else if (*cmd_construct) {
            auto res = from_even_function(even_preset(canonical_even(con_even), con_params));
            Table t{{"x", "h"}, {}};
            for (double x : window_samples(res.J, con_samples)) t.rows.push_back({x, res.h(x)});
            emit(output, emit_fmt, t,
                 json{{"even", canonical_even(con_even)},
                      {"params", con_params},
                      {"I", interval_json(res.I)},
                      {"J", interval_json(res.J)}});
        } else if (*cmd_implicit) {
            std::vector<double> grid;
            for (std::size_t i = 0; i <= imp_n; ++i)
                grid.push_back(imp_lo + (imp_hi - imp_lo) * double(i) / double(imp_n));
            auto h = from_symmetric_equation(equation_preset(imp_eq), grid);
            Table t{{"x", "h"}, {}};
            for (double x : grid)
                if (h.J.contains(x)) t.rows.push_back({x, h(x)});
            emit(output, emit_fmt, t,
                 json{{"equation", imp_eq}, {"J", interval_json(h.J)}});
        } else if (*cmd_verify) {
            Involution h;
            if (!ver_catalog.empty()) {
                h = catalog(ver_catalog, ver_params);
            } else if (!ver_even.empty()) {
                h = from_even_function(even_preset(canonical_even(ver_even), ver_params)).h;
            } else {
                std::cerr << "verify: one of --catalog or --even is required\n";
                return 2;
            }
            auto rep = verify_involution(h.h, h.J, ver_samples, ver_tol);
            json out{{"name", h.name},
                     {"max_involution_residual", rep.max_involution_residual},
                     {"origin_residual", rep.origin_residual},
                     {"monotonicity_ok", rep.monotonicity_ok},
                     {"samples_used", rep.samples_used},
                     {"tolerance", rep.tolerance},
                     {"passed", rep.passed()}};
            if (emit_fmt == "json") {
                emit(output, "json", Table{}, out);
            } else {
                std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << h.name
                          << " residual=" << num(rep.max_involution_residual)
                          << " origin=" << num(rep.origin_residual)
                          << " monotone=" << (rep.monotonicity_ok ? "yes" : "no")
                          << " samples=" << rep.samples_used << "\n";
            }
            return rep.passed() ? 0 : 1;
        } else if (*cmd_potential) {
            auto V = potential_from_involution(catalog(pot_catalog, pot_params), pot_omega);
            Table t{{"x", "V", "g"}, {}};
            for (double x : window_samples(V.J, pot_samples))
                t.rows.push_back({x, V.V(x), V.g(x)});
            emit(output, emit_fmt, t,
                 json{{"catalog", pot_catalog},
                      {"params", pot_params},
                      {"omega", pot_omega},
                      {"J", interval_json(V.J)}});
        } else if (*cmd_period) {
            auto V = potential_from_involution(catalog(per_catalog, per_params), per_omega);
            std::vector<double> energies =
                per_energies.empty() ? admissible_energies(V, per_count) : per_energies;
            std::vector<double> periods(energies.size()), oracle(energies.size());
            auto work = [&](std::size_t i) {
                periods[i] = period(V, energies[i]);
                if (per_return_map) oracle[i] = period_return_map(V, energies[i]);
            };
            if (per_parallel) {
                std::vector<std::thread> pool;
                for (std::size_t i = 0; i < energies.size(); ++i) pool.emplace_back(work, i);
                for (auto& th : pool) th.join();
            } else {
                for (std::size_t i = 0; i < energies.size(); ++i) work(i);
            }
            Table t;
            t.header = per_return_map ? std::vector<std::string>{"E", "T", "T_return_map"}
                                      : std::vector<std::string>{"E", "T"};
            double target = 2.0 * 3.14159265358979323846 / per_omega;
            double worst = 0.0;
            for (std::size_t i = 0; i < energies.size(); ++i) {
                worst = std::max(worst, std::abs(periods[i] - target));
                if (per_return_map)
                    t.rows.push_back({energies[i], periods[i], oracle[i]});
                else
                    t.rows.push_back({energies[i], periods[i]});
            }
            emit(output, emit_fmt, t,
                 json{{"catalog", per_catalog},
                      {"params", per_params},
                      {"omega", per_omega},
                      {"target_period", target},
                      {"max_deviation", worst}});
            if (per_check && worst > per_tol) return 1;
        } else if (*cmd_stability) {
            auto sys = system_preset(sta_system);
            std::vector<double> xs;
            for (std::size_t i = 1; i <= sta_n; ++i) {
                double x = sta_max * double(i) / double(sta_n);
                xs.push_back(-x);
                xs.push_back(x);
            }
            std::sort(xs.begin(), xs.end());
            auto rep = stability_condition(sys, xs, sta_tol);
            Table t{{"x", "rho"}, {}};
            for (std::size_t i = 0; i < rep.samples.size(); ++i)
                t.rows.push_back({rep.samples[i], rep.residuals[i]});
            emit(output, emit_fmt, t,
                 json{{"system", sta_system},
                      {"stable", rep.stable},
                      {"max_normalized_residual", rep.max_normalized},
                      {"tolerance", rep.tolerance}});
            if (emit_fmt == "csv")
                std::cerr << (rep.stable ? "stable" : "unstable")
                          << " (max normalized residual " << num(rep.max_normalized) << ")\n";
        } else if (*cmd_simulate) {
            auto sys = system_preset(sim_system);
            auto tr = simulate(sys, {sim_x, sim_vx, sim_y, sim_vy, 0.0}, sim_tend, sim_dt,
                               sim_rtol);
            Table t{{"t", "x", "vx", "y", "vy"}, {}};
            for (const auto& s : tr.samples) t.rows.push_back({s.t, s.x, s.vx, s.y, s.vy});
            emit(output, emit_fmt, t,
                 json{{"system", sim_system},
                      {"initial_energy_x", tr.initial_energy},
                      {"initial_momentum", tr.initial_momentum},
                      {"energy_drift", tr.energy_drift},
                      {"momentum_drift", tr.momentum_drift}});
        } else if (*cmd_fde) {
            auto sol = solve_numeric({fde_a, fde_y0, Interval{fde_t0, fde_t1}});
            Table t{{"t", "y", "yp", "closed_form"}, {}};
            for (std::size_t i = 0; i <= fde_samples; ++i) {
                double tt = fde_t0 + (fde_t1 - fde_t0) * double(i) / double(fde_samples);
                t.rows.push_back(
                    {tt, sol.eval(tt), sol.eval_derivative(tt), closed_form(fde_a, fde_y0, tt)});
            }
            emit(output, emit_fmt, t,
                 json{{"a", fde_a},
                      {"y0", fde_y0},
                      {"t_span", interval_json(Interval{fde_t0, fde_t1})},
                      {"residual", residual_check(sol, fde_a)}});
        } else if (*cmd_figures) {
            run_figures(fig_which, fig_dir);
        } else if (*cmd_suite) {
            return run_acceptance(std::cout) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
} catch (const std::invalid_argument& e) {
    // bad environment-variable override, caught before normal dispatch
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}
