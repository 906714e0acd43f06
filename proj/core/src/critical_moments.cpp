#include "roughheston/critical_moments.hpp"

#include "parallel.hpp"
#include "roughheston/errors.hpp"
#include "roughheston/heston.hpp"
#include "roughheston/kernels.hpp"
#include "roughheston/riccati.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace roughheston {

namespace {

void require_negative_rho(const ModelParams& p) {
    if (!(p.rho() < 0.0)) throw DomainError("critical moments need rho < 0");
}

void require_positive_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite");
}

double edge_offset(double x) { return 1e-12 * std::max(1.0, std::fabs(x)); }

// Solve time(u) = t on [lo, hi] for a monotone time; time(lo) - t and time(hi) - t of opposite signs.
double invert(const std::function<double(double)>& time, double t, double lo, double hi) {
    auto f = [&](double u) { return time(u) - t; };
    auto tol = [](double a, double b) { return std::fabs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(a), std::fabs(b)); };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol);
    return 0.5 * (a + b);
}

// Increasing time on (-inf, edge): push the far end left until time < t.
double invert_left_branch(const std::function<double(double)>& time, double t, double edge, double far_start) {
    const double near = edge - edge_offset(edge);
    if (time(near) <= t) return near;
    double far = far_start;
    for (double width = std::max(1.0, edge - far_start); time(far) >= t; width *= 2.0) {
        far = edge - width;
        if (width > 1e300) throw BracketError("could not bracket the critical moment");
    }
    return invert(time, t, far, near);
}

// Decreasing time on (edge, inf): push the far end right until time < t.
double invert_right_branch(const std::function<double(double)>& time, double t, double edge) {
    const double near = edge + edge_offset(edge);
    if (time(near) <= t) return near;
    double far = edge + 1.0;
    for (double width = 1.0; time(far) >= t; width *= 2.0) {
        far = edge + width;
        if (width > 1e300) throw BracketError("could not bracket the critical moment");
    }
    return invert(time, t, near, far);
}

double classic_time(const ModelParams& p, double u) { return t1_star(p, u).value_or_inf(); }
double envelope_time(const ModelParams& p, double u) { return t1_bar_star(p, u).value(); }

}  // namespace

double u1_critical(const ModelParams& p, double t, Side side) {
    require_negative_rho(p);
    require_positive_t(t);
    const auto roots = delta_roots(p);
    auto time = [&p](double u) { return classic_time(p, u); };
    if (side == Side::lower) return invert_left_branch(time, t, roots.d_minus, roots.d_minus - 1.0);
    return invert_right_branch(time, t, roots.d_plus);
}

double u1_pseudo(const ModelParams& p, double t, Side side) {
    require_negative_rho(p);
    require_positive_t(t);
    const auto roots = delta_roots(p);
    auto time = [&p](double u) { return envelope_time(p, u); };
    if (side == Side::upper) return invert_right_branch(time, t, roots.d_plus);
    const double boundary = c2_zero(p);
    if (!(t > threshold_T_crit(p))) throw DomainError("lower pseudo-moment needs t > T_crit");
    const double near = roots.d_minus - edge_offset(roots.d_minus);
    if (envelope_time(p, near) <= t) return near;
    if (envelope_time(p, boundary) >= t) return boundary;  // rounding at the T_crit end
    return invert(time, t, boundary, near);
}

double u1_envelope_lower(const ModelParams& p, double t) {
    require_negative_rho(p);
    require_positive_t(t);
    return t > threshold_T_crit(p) ? u1_pseudo(p, t, Side::lower) : u1_critical(p, t, Side::lower);
}

double threshold_T_crit(const ModelParams& p) {
    require_negative_rho(p);
    const double lam = p.lambda();
    return -p.rho() * boost::math::constants::pi<double>() / std::sqrt(lam * (lam - p.rho() * p.eta()));
}

double threshold_T_crit_prime(const ModelParams& p) {
    const double a = p.alpha();
    return std::pow(std::tgamma(a + 1.0) * threshold_T_crit(p), 1.0 / a);
}

CriticalBounds rough_critical_bounds(const ModelParams& p, double t) {
    require_negative_rho(p);
    require_positive_t(t);
    const double tau = cumulative_K(p.alpha(), t);
    CriticalBounds b{u1_envelope_lower(p, tau), u1_pseudo(p, tau, Side::upper)};
    if (t <= fixed_point_T_alpha(p.alpha())) {
        b.lower = std::max(b.lower, u1_envelope_lower(p, t));
        b.upper = std::min(b.upper, u1_pseudo(p, t, Side::upper));
    }
    return b;
}

double rough_critical_numeric(const ModelParams& p, double t, Side side, double tol, const SolverConfig& cfg) {
    require_negative_rho(p);
    require_positive_t(t);
    cfg.validate();
    if (!(tol > 0.0)) throw DomainError("rough_critical_numeric needs tol > 0");
    const Kernel kernel = Kernel::power_law(p.alpha());
    SolverConfig run = cfg;
    run.horizon = t + tol + 4.0 * cfg.step;
    // Numeric explosion time, +inf when it lies beyond the horizon.
    auto explosion = [&](double u) {
        try {
            const auto est = estimate_explosion_time(kernel, p, u, run, 0.5 * tol);
            if (!est.is_finite()) return std::numeric_limits<double>::infinity();
            return 0.5 * (est.bracket->lower + est.bracket->upper);
        } catch (const HorizonError&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    const auto roots = delta_roots(p);
    const CriticalBounds bounds = rough_critical_bounds(p, t);
    const bool lower = side == Side::lower;
    const double edge = lower ? roots.d_minus : roots.d_plus;
    // `outer` explodes before t, `inner` (closer to the edge) after t.
    double outer = lower ? bounds.lower : bounds.upper;
    for (double push = 1.0; explosion(outer) > t; push *= 2.0) {
        outer += lower ? -push : push;
        if (push > 1e6) throw BracketError("rough_critical_numeric: no exploding order found");
    }
    double inner = 0.5 * (outer + edge);
    for (int i = 0; explosion(inner) <= t; ++i) {
        inner = 0.5 * (inner + edge);
        if (i > 60) throw BracketError("rough_critical_numeric: no surviving order found");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (outer + inner);
        const double tm = explosion(mid);
        if (std::fabs(tm - t) <= tol) return mid;
        if (tm > t)
            inner = mid;
        else
            outer = mid;
        if (std::fabs(inner - outer) <= 1e-12 * std::max(1.0, std::fabs(mid))) return mid;
    }
    return 0.5 * (outer + inner);
}

Table critical_moments_table(const ModelParams& p, const std::vector<double>& t_grid,
                             const std::optional<SolverConfig>& numeric, double tol, unsigned threads) {
    std::vector<std::string> columns{"t", "u1_minus", "u1bar_minus", "u1bar_plus", "rough_lower_bound", "rough_upper_bound"};
    if (numeric) columns.emplace_back("numeric_rough_minus");
    std::vector<std::vector<Cell>> rows(t_grid.size());
    detail::parallel_for(t_grid.size(), threads, [&](std::size_t i) {
        const double t = t_grid[i];
        const CriticalBounds b = rough_critical_bounds(p, t);
        std::vector<Cell> row{t, u1_critical(p, t, Side::lower), u1_envelope_lower(p, t), u1_pseudo(p, t, Side::upper),
                              b.lower, b.upper};
        if (numeric) row.emplace_back(rough_critical_numeric(p, t, Side::lower, tol, *numeric));
        rows[i] = std::move(row);
    });
    Table table(std::move(columns));
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

}  // namespace roughheston
