#include "roughheston/heston.hpp"

#include "roughheston/errors.hpp"
#include "roughheston/riccati.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>

namespace roughheston {

namespace {

constexpr double kHalfPi = boost::math::constants::half_pi<double>();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Explosion time of psi1 as a plain number (inf when global).
double t1_value(const ModelParams& p, double u) {
    const double c1 = symbol_c1(u);
    if (c1 <= 0.0) return kInf;
    const double c2 = symbol_c2(p, u);
    const double delta = discriminant(p, u);
    if (delta < 0.0) {
        const double s = std::sqrt(-delta);
        return std::atan2(2.0 * s, c2) / s;
    }
    if (c2 < 0.0) return kInf;
    if (delta == 0.0) return 2.0 / c2;
    const double d = std::sqrt(delta);
    const double eta2 = p.eta() * p.eta();
    return std::log1p(4.0 * d * (c2 + 2.0 * d) / (2.0 * eta2 * c1)) / (2.0 * d);
}

void require_envelope_case(const ModelParams& p, double u) {
    // c2 = 0 is the boundary with case A; allow it up to the rounding of rho*eta*u - lambda
    const double c2_slack = 8.0 * std::numeric_limits<double>::epsilon() * (std::fabs(p.rho() * p.eta() * u) + p.lambda());
    if (symbol_c1(u) <= 0.0 || symbol_c2(p, u) > c2_slack || discriminant(p, u) >= 0.0)
        throw CaseError("u is not in case B");
}

double t1_bar_value(const ModelParams& p, double u) {
    const double s = std::sqrt(-discriminant(p, u));
    return (kHalfPi - symbol_c2(p, u) / (2.0 * s)) / s;
}

// Arctan-branch inverse written without tan, so it stays accurate close to the pole.
double q_inverse_arctan(double s, double c2, double eta2, double t_explode, double y) {
    return std::sin(s * y) * std::hypot(2.0 * s, c2) / (eta2 * std::sin(s * (t_explode - y)));
}

}  // namespace

ExplosionTime ExplosionTime::finite(double t, Case label) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("explosion time must be positive and finite");
    return ExplosionTime(t, label);
}

double ExplosionTime::value() const {
    if (!time_) throw DomainError("explosion time is infinite");
    return *time_;
}

double ExplosionTime::value_or_inf() const noexcept { return time_ ? *time_ : kInf; }

double q_integral(const ModelParams& p, double u, double w) {
    if (w == 0.0) return 0.0;
    const double c2 = symbol_c2(p, u);
    const double eta2 = p.eta() * p.eta();
    const double delta = discriminant(p, u);
    if (delta < 0.0) {
        const double s = std::sqrt(-delta);
        const double a = (eta2 * w + c2) / (2.0 * s);
        const double b = c2 / (2.0 * s);
        return std::atan2(eta2 * w / (2.0 * s), 1.0 + a * b) / s;
    }
    const auto roots = symbol_roots(p, u);
    const double lo = roots->lower;
    const double hi = roots->upper;
    if (lo == 0.0 || hi == 0.0) throw DomainError("R(u,0) = 0: Q(u,w) diverges for every w != 0");
    const double xl = -w / lo;
    const double xh = -w / hi;
    if (!(xl > -1.0) || !(xh > -1.0)) throw DomainError("integration path crosses a root of R(u,.)");
    if (delta == 0.0) return (2.0 / eta2) * w / (lo * (lo - w));
    return (std::log1p(xh) - std::log1p(xl)) / (2.0 * std::sqrt(delta));
}

double q_inverse(const ModelParams& p, double u, double y) {
    if (!(y >= 0.0)) throw RangeError("q_inverse needs y >= 0");
    if (y == 0.0 || symbol_c1(u) == 0.0) return 0.0;
    const double t_explode = t1_value(p, u);
    if (y >= t_explode) throw RangeError("y is at or beyond the explosion time of Q(u,.)");
    const double c2 = symbol_c2(p, u);
    const double eta2 = p.eta() * p.eta();
    const double delta = discriminant(p, u);
    if (delta < 0.0) {
        const double s = std::sqrt(-delta);
        const double w = q_inverse_arctan(s, c2, eta2, t_explode, y);
        if (t_explode - y >= 1e-6 || !std::isfinite(w)) return w;
        // Close to the pole: refine by bisection on Q itself.
        auto f = [&](double x) { return q_integral(p, u, x) - y; };
        double hi = 2.0 * w;
        for (int i = 0; i < 64 && f(hi) < 0.0; ++i) hi *= 2.0;
        if (f(hi) < 0.0 || f(0.5 * w) > 0.0) return w;
        boost::math::tools::eps_tolerance<double> tol(50);
        const auto [a, b] = boost::math::tools::bisect(f, 0.5 * w, hi, tol);
        return 0.5 * (a + b);
    }
    const auto roots = symbol_roots(p, u);
    const double lo = roots->lower;
    const double hi = roots->upper;
    if (delta == 0.0) {
        const double yp = 0.5 * y * eta2;
        return yp * lo * lo / (1.0 + yp * lo);
    }
    const double e = std::expm1(2.0 * std::sqrt(delta) * y);
    if (std::isinf(e)) return lo;  // saturated at the attracting root
    return e * lo * hi / (hi - lo + e * hi);
}

double psi1(const ModelParams& p, double u, double t) {
    if (!(t >= 0.0)) throw DomainError("psi1 needs t >= 0");
    if (t >= t1_value(p, u)) throw ExplosionError("t is at or beyond the explosion time T1*(u)");
    return q_inverse(p, u, t);
}

double psi1_bar(const ModelParams& p, double u, double t) {
    require_envelope_case(p, u);
    if (!(t >= 0.0)) throw DomainError("psi1_bar needs t >= 0");
    const double t_explode = t1_bar_value(p, u);
    if (t >= t_explode) throw ExplosionError("t is at or beyond the explosion time T1bar*(u)");
    const double delta = discriminant(p, u);
    const double eta2 = p.eta() * p.eta();
    const double w0 = w_min_location(p, u);
    const double slope = -2.0 * delta / eta2;  // R(u, w0)
    const double t0 = w0 / slope;
    if (t <= t0) return slope * t;
    const double s = std::sqrt(-delta);
    return w0 + 2.0 * s * std::sin(s * (t - t0)) / (eta2 * std::sin(s * (t_explode - t)));
}

ExplosionTime t1_star(const ModelParams& p, double u) {
    const Case label = classify(p, u);
    const double t = t1_value(p, u);
    return std::isinf(t) ? ExplosionTime::infinite(label) : ExplosionTime::finite(t, label);
}

ExplosionTime t1_bar_star(const ModelParams& p, double u) {
    require_envelope_case(p, u);
    return ExplosionTime::finite(t1_bar_value(p, u), classify(p, u));
}

ExplosionTime t1_tilde(const ModelParams& p, double u) {
    if (!(p.rho() < 0.0)) throw DomainError("t1_tilde needs rho < 0");
    const auto [d_minus, d_plus] = delta_roots(p);
    if (u >= d_minus && u <= d_plus) throw DomainError("t1_tilde is undefined on [d-, d+]");
    if (u <= c2_zero(p)) return t1_star(p, u);
    return t1_bar_star(p, u);
}

ExplosionTime envelope_explosion_time(const ModelParams& p, double u) {
    switch (classify(p, u)) {
        case Case::A: return t1_star(p, u);
        case Case::B: return t1_bar_star(p, u);
        default: return ExplosionTime::infinite(classify(p, u));
    }
}

}  // namespace roughheston
