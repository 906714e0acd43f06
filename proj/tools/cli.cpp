#include "cli.hpp"

#include "roughheston/roughheston.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rhcmp {

namespace rh = roughheston;

namespace {

// Flag combinations that CLI11 cannot express; reported like a parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double rho = -0.8;
    double lambda = 2.0;
    double eta = 0.2;
    double alpha = 0.6;
    double v0 = 0.04;
    std::vector<double> u;
    std::optional<double> t;
    double u_min = -20.0;
    double u_max = 150.0;
    double u_step = 0.5;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::optional<double> t_step;
    bool numeric = false;
    bool compare = false;
    std::optional<double> xi_flat;
    std::string xi_file;
    std::string kernel_file;
    double step = 1e-3;
    std::optional<double> horizon;
    std::string format = "csv";
    std::string out;
    unsigned threads = 0;
};

// min, min+step, ..., max; the last point snaps to max when within rounding.
std::vector<double> make_grid(double lo, double hi, double step, const char* name) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0.0) || !std::isfinite(step))
        throw rh::ValidationError(std::string(name) + " grid needs finite bounds and a positive step");
    if (hi < lo) throw rh::ValidationError(std::string(name) + " grid needs max >= min");
    const double span = (hi - lo) / step;
    if (span > 1e7) throw rh::ValidationError(std::string(name) + " grid has more than 1e7 points");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = lo + static_cast<double>(i) * step;
    if (std::fabs(grid.back() - hi) <= 1e-9 * step) grid.back() = hi;
    return grid;
}

double single_u(const Options& o) {
    if (o.u.size() != 1) throw UsageError("this command needs exactly one --u");
    return o.u.front();
}

rh::SolverConfig solver_config(const Options& o, double default_horizon) {
    rh::SolverConfig cfg;
    cfg.step = o.step;
    cfg.horizon = o.horizon.value_or(default_horizon);
    cfg.validate();
    return cfg;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

rh::Table cmd_classify(const Options& o, const rh::ModelParams& p) {
    const std::vector<double> us = o.u.empty() ? make_grid(o.u_min, o.u_max, o.u_step, "u") : o.u;
    const auto roots = rh::delta_roots(p);
    rh::Table table({"u", "case", "Delta", "d_minus", "d_plus", "w0", "w_star"});
    for (double u : us) {
        // w_star = inf marks "no real root" (cases A/B with negative discriminant)
        const auto sr = rh::symbol_roots(p, u);
        table.add_row({u, rh::to_string(rh::classify(p, u)), rh::discriminant(p, u), roots.d_minus, roots.d_plus,
                       rh::w_min_location(p, u), sr ? sr->lower : std::numeric_limits<double>::infinity()});
    }
    return table;
}

rh::Table cmd_explosion_sweep(const Options& o, const rh::ModelParams& p) {
    const auto grid = make_grid(o.u_min, o.u_max, o.u_step, "u");
    std::optional<rh::SolverConfig> numeric;
    if (o.numeric) numeric = solver_config(o, 1e4);
    return rh::explosion_table(p, grid, numeric, o.threads);
}

rh::Table cmd_aivs_sweep(const Options& o, const rh::ModelParams& p) {
    const double t_crit_prime = rh::threshold_T_crit_prime(p);
    const double t_max = o.t_max.value_or(t_crit_prime);
    const double t_step = o.t_step.value_or(t_max / 200.0);
    const double t_min = o.t_min.value_or(t_step);
    if (!(t_min > 0.0)) throw rh::ValidationError("aivs-sweep needs --t-min > 0");
    const auto grid = make_grid(t_min, t_max, t_step, "T");
    if (grid.back() > t_crit_prime * (1.0 + 1e-12))
        throw rh::ValidationError("T grid exceeds T'_crit = " + rh::format_number(t_crit_prime) +
                                  "; the non-asymptotic left bound is undefined there");
    return rh::aivs_table(p, grid, o.threads);
}

rh::Table cmd_mgf(const Options& o, const rh::ModelParams& p) {
    const double u = single_u(o);
    if (!o.t) throw UsageError("mgf needs --t");
    const double t = *o.t;
    if (o.xi_flat && !o.xi_file.empty()) throw UsageError("--xi-flat and --xi-file are mutually exclusive");
    const rh::VarianceCurve xi = !o.xi_file.empty() ? rh::load_variance_curve(o.xi_file)
                                                    : rh::VarianceCurve::flat(o.xi_flat.value_or(p.v0()));
    const rh::SolverConfig cfg = solver_config(o, 1.0);
    const double phi_alpha = rh::mgf(p, u, t, xi, cfg);
    std::vector<std::string> columns{"u", "t", "alpha", "phi_alpha"};
    std::vector<rh::Cell> row{u, t, p.alpha(), phi_alpha};
    if (o.compare) {
        const double phi_1 = rh::mgf(p.with_alpha(1.0), u, t, xi, cfg);
        bool applies = false;
        if (p.alpha() < 1.0 && p.rho() < 0.0) {
            const double boundary = rh::c2_zero(p);
            if (u <= boundary)
                applies = t <= rh::fixed_point_T_alpha(p.alpha());
            else if (u <= 0.0)
                applies = t <= rh::fixed_point_T_alpha_lambda(p);
        }
        columns.insert(columns.end(), {"phi_1", "phi1_le_phi_alpha", "theorem_applies"});
        row.insert(row.end(), {phi_1, yes_no(phi_1 <= phi_alpha * (1.0 + 1e-4)), yes_no(applies)});
    }
    rh::Table table(columns);
    table.add_row(row);
    return table;
}

rh::Table cmd_solve_psi(const Options& o, const rh::ModelParams& p, std::ostream& err) {
    const double u = single_u(o);
    const rh::Kernel kernel = o.kernel_file.empty() ? rh::Kernel::power_law(p.alpha()) : rh::load_tabulated_kernel(o.kernel_file);
    const rh::PsiSolution sol = rh::solve_psi(kernel, p, u, solver_config(o, 1.0));
    if (sol.status == rh::SolveStatus::blew_up)
        err << "psi blew up in [" << rh::format_number(sol.blowup->lower) << ", " << rh::format_number(sol.blowup->upper)
            << "]\n";
    rh::Table table({"t", "psi"});
    for (std::size_t i = 0; i < sol.times.size(); ++i) table.add_row({sol.times[i], sol.values[i]});
    return table;
}

void emit(const rh::Table& table, const Options& o, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) throw rh::ValidationError("cannot open output file: " + o.out);
        sink = &file;
    }
    if (o.format == "json")
        rh::write_json(table, *sink);
    else
        rh::write_csv(table, *sink);
}

void add_options(CLI::App& app, Options& o) {
    app.add_option("--rho", o.rho, "correlation, in (-1,1)")->capture_default_str();
    app.add_option("--lambda", o.lambda, "mean-reversion speed > 0")->capture_default_str();
    app.add_option("--eta", o.eta, "vol-of-vol > 0")->capture_default_str();
    app.add_option("--alpha", o.alpha, "roughness index in (1/2, 1]")->capture_default_str();
    app.add_option("--v0", o.v0, "spot variance >= 0")->capture_default_str();
    app.add_option("--u", o.u, "moment order (repeatable for classify)");
    app.add_option("--t", o.t, "maturity for mgf");
    app.add_option("--u-min", o.u_min, "u grid start")->capture_default_str();
    app.add_option("--u-max", o.u_max, "u grid end")->capture_default_str();
    app.add_option("--u-step", o.u_step, "u grid step")->capture_default_str();
    app.add_option("--t-min", o.t_min, "T grid start (default: t-step)");
    app.add_option("--t-max", o.t_max, "T grid end (default: T'_crit)");
    app.add_option("--t-step", o.t_step, "T grid step (default: t-max/200)");
    app.add_flag("--numeric", o.numeric, "add numeric rough blow-up estimates");
    app.add_flag("--compare", o.compare, "also report the classic MGF and the comparison verdict");
    app.add_option("--xi-flat", o.xi_flat, "flat forward variance level (default: v0)");
    app.add_option("--xi-file", o.xi_file, "forward variance curve file (T, xi)");
    app.add_option("--kernel-file", o.kernel_file, "tabulated kernel file (t, kappa) for solve-psi");
    app.add_option("--step", o.step, "solver time step")->capture_default_str();
    app.add_option("--horizon", o.horizon, "solver horizon (solve-psi/mgf default 1; sweep cap default 1e4)");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", o.out, "output file (default: stdout)");
    app.add_option("--threads", o.threads, "worker threads for sweeps (0: all cores)")->capture_default_str();
    app.set_config("--config", "", "flat key=value file; command-line flags override it");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rhcmp: explosion times, critical moments, MGFs and wing slopes for rough vs classic Heston"};
    app.name("rhcmp");
    Options o;
    add_options(app, o);
    app.require_subcommand(1);
    auto* classify = app.add_subcommand("classify", "case A-D classification per u")->fallthrough();
    auto* explosion = app.add_subcommand("explosion-sweep", "explosion times and KM bounds over a u grid")->fallthrough();
    auto* aivs = app.add_subcommand("aivs-sweep", "wing slopes and bounds over a maturity grid")->fallthrough();
    auto* mgf = app.add_subcommand("mgf", "moment generating function under a forward variance curve")->fallthrough();
    auto* solve = app.add_subcommand("solve-psi", "dump the numeric Volterra-Riccati solution")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "rhcmp: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const rh::ModelParams p(o.rho, o.lambda, o.eta, o.alpha, o.v0);
        std::optional<rh::Table> table;
        if (classify->parsed())
            table = cmd_classify(o, p);
        else if (explosion->parsed())
            table = cmd_explosion_sweep(o, p);
        else if (aivs->parsed())
            table = cmd_aivs_sweep(o, p);
        else if (mgf->parsed())
            table = cmd_mgf(o, p);
        else if (solve->parsed())
            table = cmd_solve_psi(o, p, err);
        emit(*table, o, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "rhcmp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rh::ValidationError& e) {
        err << "rhcmp: invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "rhcmp: " << e.what() << "\n";
        return kExitNumeric;
    }
}

}  // namespace rhcmp
