#pragma once

#include "roughheston/model.hpp"

#include <optional>

namespace roughheston {

// Explosion time of a classic Heston moment, possibly infinite.
// The infinite case is a state of the value, not a sentinel number.
class ExplosionTime {
public:
    static ExplosionTime finite(double t, Case label);
    static ExplosionTime infinite(Case label) { return ExplosionTime(std::nullopt, label); }

    bool is_finite() const noexcept { return time_.has_value(); }
    // Throws DomainError when infinite.
    double value() const;
    // +inf for the infinite case; meant for output and ordering only.
    double value_or_inf() const noexcept;
    Case label() const noexcept { return label_; }

private:
    ExplosionTime(std::optional<double> t, Case label) : time_(t), label_(label) {}
    std::optional<double> time_;
    Case label_;
};

// Q(u,w) = int_0^w dz / R(u,z). Throws DomainError if [0,w] touches a root of R(u,.).
double q_integral(const ModelParams& p, double u, double w);
// Inverse of Q(u,.) on y >= 0. Throws RangeError at or beyond the explosion time.
double q_inverse(const ModelParams& p, double u, double y);

// Classic Heston Riccati solution psi' = R(u,psi), psi(0) = 0.
double psi1(const ModelParams& p, double u, double t);
// Solution driven by the envelope R-bar instead of R (case B, or the boundary c2 = 0).
double psi1_bar(const ModelParams& p, double u, double t);

ExplosionTime t1_star(const ModelParams& p, double u);
// Explosion time of psi1_bar. Throws CaseError outside case B and its c2 = 0 boundary.
ExplosionTime t1_bar_star(const ModelParams& p, double u);
// T1* left of lambda/(rho eta), T1bar* to the right. rho < 0, u outside [d-, d+].
ExplosionTime t1_tilde(const ModelParams& p, double u);
// T1* in case A, T1bar* in case B, infinite in C/D.
ExplosionTime envelope_explosion_time(const ModelParams& p, double u);

}  // namespace roughheston
