#pragma once

#include "roughheston/kernels.hpp"
#include "roughheston/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace roughheston {

struct SolverConfig {
    double step = 1e-3;
    double horizon = 1.0;
    double blowup_threshold = 1e8;
    int corrector_iters = 3;

    // Throws ValidationError on step <= 0, horizon <= 0, threshold < 1e6 or iters outside [1, 10].
    void validate() const;
};

enum class SolveStatus { completed, blew_up };

struct TimeBracket {
    double lower;
    double upper;
    double width() const noexcept { return upper - lower; }
};

struct PsiSolution {
    std::vector<double> times;
    std::vector<double> values;
    SolveStatus status = SolveStatus::completed;
    std::optional<TimeBracket> blowup;  // set iff status == blew_up
    std::string kernel_tag;
    double u = 0.0;
};

// psi(t) = int_0^t kappa(t-s) R(u, psi(s)) ds by product integration on a uniform grid:
// piecewise-cubic interpolation of R(u,psi) against exact kernel moments, then a
// predictor and corrector_iters fixed-point sweeps for the implicit node.
PsiSolution solve_psi(const Kernel& kernel, const ModelParams& p, double u, const SolverConfig& cfg);

// psi(t) = (1/lambda) int_0^t r(t-s) R0(u, psi(s)) ds with the resolvent of lambda*kappa_alpha.
PsiSolution solve_psi_resolvent_form(const ModelParams& p, double u, const SolverConfig& cfg);

struct ExplosionEstimate {
    Case label;
    std::optional<TimeBracket> bracket;  // nullopt: no explosion (cases C/D)
    bool is_finite() const noexcept { return bracket.has_value(); }
};

// Blow-up bracket of solve_psi. Restarts from t = 0 with halved step until the bracket is
// narrower than tolerance (default: one step). Cases C/D return an infinite estimate without
// solving. Throws HorizonError if cases A/B do not blow up before cfg.horizon.
ExplosionEstimate estimate_explosion_time(const Kernel& kernel, const ModelParams& p, double u,
                                          const SolverConfig& cfg, double tolerance = 0.0);

class VarianceCurve {
public:
    static VarianceCurve flat(double xi0);
    // Linear interpolation between knots, flat extrapolation outside them.
    static VarianceCurve piecewise_linear(std::vector<double> maturities, std::vector<double> values);

    double operator()(double maturity) const;
    bool is_flat() const noexcept { return knots_.size() == 1; }
    bool is_nondecreasing() const noexcept;

private:
    VarianceCurve(std::vector<double> t, std::vector<double> v) : knots_(std::move(t)), values_(std::move(v)) {}
    std::vector<double> knots_;
    std::vector<double> values_;
};

// Two-column text (T, xi); same format rules as tabulated kernels.
VarianceCurve load_variance_curve(std::istream& in);
VarianceCurve load_variance_curve(const std::string& path);

// E[S_t^u]/S_0^u = exp(int_0^t xi(t-s) R0(u, psi_alpha(s,u)) ds), trapezoid on the solver grid.
// The grid step is cfg.step shrunk so that t is a grid point. Throws ExplosionError past blow-up.
double mgf(const ModelParams& p, double u, double t, const VarianceCurve& xi, const SolverConfig& cfg);

// xi(T) = V0 + (theta - V0) * lambda * L(T) for a constant mean-reversion level theta.
double forward_variance(const ModelParams& p, double theta, double maturity);

void write_psi_csv(const PsiSolution& sol, std::ostream& out);

}  // namespace roughheston
