#pragma once

#include "roughheston/model.hpp"
#include "roughheston/table.hpp"
#include "roughheston/volterra.hpp"

#include <optional>
#include <vector>

namespace roughheston {

enum class Side { lower, upper };

// All functions below need rho < 0 (DomainError otherwise).

// Inverse of T1* on (-inf, d-) (lower) or (d+, inf) (upper).
double u1_critical(const ModelParams& p, double t, Side side);
// Inverse of T1bar* on (lambda/(rho eta), d-) (lower, needs t > T_crit) or (d+, inf) (upper).
double u1_pseudo(const ModelParams& p, double t, Side side);
// Inverse of the envelope time on (-inf, d-): u1_critical below T_crit, u1_pseudo above.
double u1_envelope_lower(const ModelParams& p, double t);

// T1bar*(lambda/(rho eta)) = |rho| pi / sqrt(lambda (lambda - rho eta))
double threshold_T_crit(const ModelParams& p);
// (alpha Gamma(alpha) T_crit)^(1/alpha)
double threshold_T_crit_prime(const ModelParams& p);

struct CriticalBounds {
    double lower;  // u_alpha^-(t) >= lower
    double upper;  // u_alpha^+(t) <= upper
};

CriticalBounds rough_critical_bounds(const ModelParams& p, double t);

// Moment order whose numeric power-law blow-up time is within tol of t, by bisection.
// Assumes the rough explosion time is strictly monotone on each side (only weak monotonicity is proven).
double rough_critical_numeric(const ModelParams& p, double t, Side side, double tol, const SolverConfig& cfg);

// Columns t, u1_minus, u1bar_minus, u1bar_plus, rough_lower_bound, rough_upper_bound [, numeric_rough_minus].
// u1bar_minus is u1_envelope_lower, i.e. equal to u1_minus for t <= T_crit.
Table critical_moments_table(const ModelParams& p, const std::vector<double>& t_grid,
                             const std::optional<SolverConfig>& numeric = std::nullopt, double tol = 1e-3,
                             unsigned threads = 0);

}  // namespace roughheston
