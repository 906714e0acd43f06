#include "roughheston/volterra.hpp"

#include "roughheston/errors.hpp"
#include "roughheston/riccati.hpp"
#include "roughheston/table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace roughheston {

namespace {

// Lagrange basis on integer nodes, as ascending polynomial coefficients in x.
template <std::size_t N>
std::array<std::array<double, 4>, N> lagrange_basis(const std::array<int, N>& nodes) {
    std::array<std::array<double, 4>, N> basis{};
    for (std::size_t q = 0; q < N; ++q) {
        std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
        for (std::size_t r = 0; r < N; ++r) {
            if (r == q) continue;
            const double scale = 1.0 / (nodes[q] - nodes[r]);
            std::array<double, 4> next{};
            for (std::size_t k = 0; k < 4; ++k) {
                if (k + 1 < 4) next[k + 1] += poly[k] * scale;
                next[k] -= poly[k] * nodes[r] * scale;
            }
            poly = next;
        }
        basis[q] = poly;
    }
    return basis;
}

template <std::size_t N>
std::array<double, N> weights(const std::array<std::array<double, 4>, N>& basis, const std::array<double, 4>& mom) {
    std::array<double, N> w{};
    for (std::size_t q = 0; q < N; ++q)
        for (std::size_t k = 0; k < 4; ++k) w[q] += basis[q][k] * mom[k];
    return w;
}

struct Stencils {
    std::array<std::array<double, 4>, 3> quad_first = lagrange_basis<3>({0, 1, 2});
    std::array<std::array<double, 4>, 3> quad_second = lagrange_basis<3>({-1, 0, 1});
    std::array<std::array<double, 4>, 4> cubic_first = lagrange_basis<4>({0, 1, 2, 3});
    std::array<std::array<double, 4>, 4> cubic_second = lagrange_basis<4>({-1, 0, 1, 2});
    std::array<std::array<double, 4>, 4> cubic_back = lagrange_basis<4>({-2, -1, 0, 1});
};

const Stencils& stencils() {
    static const Stencils s;
    return s;
}

// The Riccati symbols are quadratics in w.
struct Quadratic {
    double a0;
    double a1;
    double a2;
    double operator()(double w) const { return a0 + w * (a1 + w * a2); }
    // x = hist + weight * q(x) has a real root; when it has none the discrete solution has blown up
    bool solvable(double hist, double weight) const {
        const double b = 1.0 - weight * a1;
        return b * b - 4.0 * weight * a2 * (hist + weight * a0) >= 0.0;
    }
};

PsiSolution solve_generic(const Kernel& kernel, const Quadratic& symbol, double u, const SolverConfig& cfg) {
    cfg.validate();
    const double h = cfg.step;
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.horizon / h - 1e-9));
    const Stencils& st = stencils();

    std::vector<std::array<double, 4>> back(std::max<std::size_t>(steps, 2));  // backward-stencil weights per lag
    std::vector<std::array<double, 4>> moments(back.size());
    for (std::size_t m = 0; m < back.size(); ++m) {
        moments[m] = kernel.interval_moments(h, m);
        back[m] = weights(st.cubic_back, moments[m]);
    }

    PsiSolution sol;
    sol.kernel_tag = kernel.tag();
    sol.u = u;
    sol.times.reserve(steps + 1);
    sol.values.reserve(steps + 1);
    sol.times.push_back(0.0);
    sol.values.push_back(0.0);
    std::vector<double> rv{symbol(0.0)};
    rv.reserve(steps + 1);

    // Block start: the first two nodes are solved together on the quadratic stencil {0, h, 2h},
    // so the first step is as accurate as the rest.
    double start2 = 0.0;
    {
        const auto a = weights(st.quad_first, moments[0]);
        const auto b0 = weights(st.quad_first, moments[1]);
        const auto b1 = weights(st.quad_second, moments[0]);
        double x1 = 0.0;
        double x2 = 0.0;
        for (int it = 0; it <= cfg.corrector_iters + 2; ++it) {
            const double r1 = symbol(x1);
            const double r2 = symbol(x2);
            x1 = a[0] * rv[0] + a[1] * r1 + a[2] * r2;
            x2 = (b0[0] + b1[0]) * rv[0] + (b0[1] + b1[1]) * r1 + (b0[2] + b1[2]) * r2;
            if (!std::isfinite(x1) || !std::isfinite(x2) || std::fabs(x2) > cfg.blowup_threshold) break;
        }
        start2 = x2;
        if (std::isfinite(x1) && std::fabs(x1) <= cfg.blowup_threshold) {
            rv.push_back(symbol(x1));
            sol.times.push_back(h);
            sol.values.push_back(x1);
        }
    }

    for (std::size_t n = 1; n <= steps; ++n) {
        double hist = 0.0;
        double implicit = 0.0;
        if (n == 1) {
            if (sol.times.size() == 2) continue;
            sol.status = SolveStatus::blew_up;
            sol.blowup = TimeBracket{0.0, h};
            return sol;
        } else if (n == 2) {
            const auto w0 = weights(st.quad_first, moments[1]);
            const auto w1 = weights(st.quad_second, moments[0]);
            hist = (w0[0] + w1[0]) * rv[0] + (w0[1] + w1[1]) * rv[1];
            implicit = w0[2] + w1[2];
        } else {
            const auto w0 = weights(st.cubic_first, moments[n - 1]);
            const auto w1 = weights(st.cubic_second, moments[n - 2]);
            for (std::size_t q = 0; q < 3; ++q) hist += (w0[q] + w1[q]) * rv[q];
            if (n == 3)
                implicit += w0[3] + w1[3];
            else
                hist += (w0[3] + w1[3]) * rv[3];
            for (std::size_t j = 2; j + 1 < n; ++j) {
                const auto& g = back[n - 1 - j];
                hist += g[0] * rv[j - 2] + g[1] * rv[j - 1] + g[2] * rv[j] + g[3] * rv[j + 1];
            }
            const auto& g = back[0];
            hist += g[0] * rv[n - 3] + g[1] * rv[n - 2] + g[2] * rv[n - 1];
            implicit += g[3];
        }

        double x = n == 2 ? start2 : sol.values.back();
        bool exploded = !symbol.solvable(hist, implicit);
        for (int it = 0; !exploded && it <= cfg.corrector_iters; ++it) {
            x = hist + implicit * symbol(x);
            if (!std::isfinite(x) || std::fabs(x) > cfg.blowup_threshold) {
                exploded = true;
                break;
            }
        }
        const double t = static_cast<double>(n) * h;
        if (exploded) {
            sol.status = SolveStatus::blew_up;
            sol.blowup = TimeBracket{sol.times.back(), t};
            return sol;
        }
        sol.times.push_back(t);
        sol.values.push_back(x);
        rv.push_back(symbol(x));
    }
    return sol;
}

double interpolate_linear(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto i = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

}  // namespace

void SolverConfig::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("solver step must be positive");
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ValidationError("solver horizon must be positive");
    if (!(blowup_threshold >= 1e6)) throw ValidationError("blowup_threshold must be at least 1e6");
    if (corrector_iters < 1 || corrector_iters > 10) throw ValidationError("corrector_iters must lie in [1, 10]");
    if (horizon / step > 5e7) throw ValidationError("horizon/step exceeds 5e7 grid points");
}

PsiSolution solve_psi(const Kernel& kernel, const ModelParams& p, double u, const SolverConfig& cfg) {
    return solve_generic(kernel, {symbol_c1(u), symbol_c2(p, u), 0.5 * p.eta() * p.eta()}, u, cfg);
}

PsiSolution solve_psi_resolvent_form(const ModelParams& p, double u, const SolverConfig& cfg) {
    const Kernel kernel = Kernel::scaled_resolvent(p.alpha(), p.lambda());
    return solve_generic(kernel, {symbol_c1(u), symbol_c2(p, u) + p.lambda(), 0.5 * p.eta() * p.eta()}, u, cfg);
}

ExplosionEstimate estimate_explosion_time(const Kernel& kernel, const ModelParams& p, double u,
                                          const SolverConfig& cfg, double tolerance) {
    const Case label = classify(p, u);
    if (label == Case::C || label == Case::D) return {label, std::nullopt};
    SolverConfig run = cfg;
    PsiSolution sol = solve_psi(kernel, p, u, run);
    if (sol.status != SolveStatus::blew_up)
        throw HorizonError("no blow-up before the solver horizon; increase the horizon");
    TimeBracket bracket = *sol.blowup;
    const double target = tolerance > 0.0 ? tolerance : cfg.step;
    while (bracket.width() > target * (1.0 + 1e-9)) {
        const double previous = run.step;
        run.step *= 0.5;
        run.horizon = bracket.upper + 4.0 * previous;
        for (int extend = 0;; ++extend) {
            sol = solve_psi(kernel, p, u, run);
            if (sol.status == SolveStatus::blew_up) break;
            if (extend == 4 || run.horizon >= cfg.horizon) throw HorizonError("refined solve did not blow up before the horizon");
            run.horizon = std::min(cfg.horizon, run.horizon * 1.5);
        }
        bracket = *sol.blowup;
    }
    return {label, bracket};
}

VarianceCurve VarianceCurve::flat(double xi0) {
    if (!(xi0 > 0.0) || !std::isfinite(xi0)) throw ValidationError("flat variance curve needs xi0 > 0");
    return VarianceCurve({0.0}, {xi0});
}

VarianceCurve VarianceCurve::piecewise_linear(std::vector<double> maturities, std::vector<double> values) {
    if (maturities.empty() || maturities.size() != values.size())
        throw ValidationError("variance curve needs matching, non-empty columns");
    for (std::size_t i = 0; i < maturities.size(); ++i) {
        if (!(maturities[i] >= 0.0) || !std::isfinite(maturities[i])) throw ValidationError("variance curve: maturities must be finite and >= 0");
        if (i > 0 && !(maturities[i] > maturities[i - 1])) throw ValidationError("variance curve: maturities must be strictly increasing");
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) throw ValidationError("variance curve: values must be positive");
    }
    return VarianceCurve(std::move(maturities), std::move(values));
}

double VarianceCurve::operator()(double maturity) const {
    if (!(maturity >= 0.0)) throw DomainError("variance curve needs maturity >= 0");
    if (knots_.size() == 1) return values_.front();
    return interpolate_linear(knots_, values_, maturity);
}

bool VarianceCurve::is_nondecreasing() const noexcept {
    return std::is_sorted(values_.begin(), values_.end());
}

VarianceCurve load_variance_curve(std::istream& in) {
    std::vector<double> t;
    std::vector<double> v;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        ls >> std::ws;
        if (ls.eof()) continue;
        double a = 0.0;
        double b = 0.0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest))
            throw ValidationError("variance curve line " + std::to_string(line_no) + ": expected two numbers");
        t.push_back(a);
        v.push_back(b);
    }
    return VarianceCurve::piecewise_linear(std::move(t), std::move(v));
}

VarianceCurve load_variance_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open variance curve file: " + path);
    return load_variance_curve(in);
}

double mgf(const ModelParams& p, double u, double t, const VarianceCurve& xi, const SolverConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("mgf needs finite t >= 0");
    if (t == 0.0) return 1.0;
    SolverConfig run = cfg;
    const double n = std::max(1.0, std::ceil(t / cfg.step - 1e-9));
    run.step = t / n;
    run.horizon = t;
    const PsiSolution sol = solve_psi(Kernel::power_law(p.alpha()), p, u, run);
    if (sol.status == SolveStatus::blew_up || sol.times.size() < static_cast<std::size_t>(n) + 1)
        throw ExplosionError("t is beyond the numeric blow-up of psi");
    double integral = 0.0;
    const std::size_t last = sol.times.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        const double s = sol.times[i];
        const double f = xi(std::max(0.0, t - s)) * eval_R0(p, u, sol.values[i]);
        integral += (i == 0 || i == last) ? 0.5 * f : f;
    }
    return std::exp(integral * run.step);
}

double forward_variance(const ModelParams& p, double theta, double maturity) {
    if (!(theta >= 0.0)) throw DomainError("forward_variance needs theta >= 0");
    if (!(maturity >= 0.0)) throw DomainError("forward_variance needs T >= 0");
    return p.v0() + (theta - p.v0()) * p.lambda() * cumulative_L(p, maturity);
}

void write_psi_csv(const PsiSolution& sol, std::ostream& out) {
    Table table({"t", "psi"});
    for (std::size_t i = 0; i < sol.times.size(); ++i) table.add_row({sol.times[i], sol.values[i]});
    write_csv(table, out);
}

}  // namespace roughheston
