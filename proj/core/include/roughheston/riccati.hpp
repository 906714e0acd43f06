#pragma once

#include "roughheston/model.hpp"

#include <optional>

namespace roughheston {

// R(u,w) = c1(u) + c2(u) w + (eta^2/2) w^2
double symbol_c1(double u) noexcept;
double symbol_c2(const ModelParams& p, double u) noexcept;

double eval_R(const ModelParams& p, double u, double w) noexcept;
double eval_R0(const ModelParams& p, double u, double w) noexcept;
// Nondecreasing lower envelope of R(u,.): flat at the vertex value left of w0(u).
double eval_Rbar(const ModelParams& p, double u, double w) noexcept;

// Quarter discriminant of w -> R(u,w).
double discriminant(const ModelParams& p, double u) noexcept;

struct DeltaRoots {
    double d_minus;
    double d_plus;
};

// Roots of u -> discriminant(p,u); always real for |rho| < 1.
DeltaRoots delta_roots(const ModelParams& p);

// lambda/(rho eta), where c2 changes sign (A/B boundary for rho < 0).
// Throws DomainError for rho == 0.
double c2_zero(const ModelParams& p);

double w_min_location(const ModelParams& p, double u) noexcept;
// Smaller root of R(u,.). Throws DomainError when the discriminant is negative.
double w_first_root(const ModelParams& p, double u);

struct SymbolRoots {
    double lower;
    double upper;
};

// Real roots of R(u,.), computed without cancellation; nullopt when there are none.
std::optional<SymbolRoots> symbol_roots(const ModelParams& p, double u) noexcept;

Case classify(const ModelParams& p, double u) noexcept;

}  // namespace roughheston
