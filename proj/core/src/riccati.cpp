#include "roughheston/riccati.hpp"

#include "roughheston/errors.hpp"

#include <cmath>
#include <utility>

namespace roughheston {

double symbol_c1(double u) noexcept { return 0.5 * u * (u - 1.0); }

double symbol_c2(const ModelParams& p, double u) noexcept { return p.rho() * p.eta() * u - p.lambda(); }

double eval_R(const ModelParams& p, double u, double w) noexcept {
    const double eta2 = p.eta() * p.eta();
    return symbol_c1(u) + w * (symbol_c2(p, u) + 0.5 * eta2 * w);
}

double eval_R0(const ModelParams& p, double u, double w) noexcept { return eval_R(p, u, w) + p.lambda() * w; }

double eval_Rbar(const ModelParams& p, double u, double w) noexcept {
    const double w0 = w_min_location(p, u);
    return eval_R(p, u, w <= w0 ? w0 : w);
}

double discriminant(const ModelParams& p, double u) noexcept {
    const double c2 = symbol_c2(p, u);
    return 0.25 * (c2 * c2 - p.eta() * p.eta() * (u * u - u));
}

DeltaRoots delta_roots(const ModelParams& p) {
    // 4 Delta(u) = -eta^2 (1-rho^2) u^2 + (eta^2 - 2 rho eta lambda) u + lambda^2
    const double eta = p.eta();
    const double a = -eta * eta * (1.0 - p.rho() * p.rho());
    const double b = eta * eta - 2.0 * p.rho() * eta * p.lambda();
    const double c = p.lambda() * p.lambda();
    const double disc = b * b - 4.0 * a * c;  // > 0 since a < 0 < c
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = q / a;
    double r2 = c / q;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

double c2_zero(const ModelParams& p) {
    if (p.rho() == 0.0) throw DomainError("c2(u) has no zero when rho = 0");
    return p.lambda() / (p.rho() * p.eta());
}

double w_min_location(const ModelParams& p, double u) noexcept {
    return -symbol_c2(p, u) / (p.eta() * p.eta());
}

std::optional<SymbolRoots> symbol_roots(const ModelParams& p, double u) noexcept {
    const double delta = discriminant(p, u);
    if (delta < 0.0) return std::nullopt;
    const double half_eta2 = 0.5 * p.eta() * p.eta();
    const double c1 = symbol_c1(u);
    const double c2 = symbol_c2(p, u);
    const double q = -0.5 * (c2 + std::copysign(2.0 * std::sqrt(delta), c2));
    if (q == 0.0) return SymbolRoots{0.0, 0.0};
    double r1 = q / half_eta2;
    double r2 = c1 / q;
    if (r1 > r2) std::swap(r1, r2);
    return SymbolRoots{r1, r2};
}

double w_first_root(const ModelParams& p, double u) {
    const auto roots = symbol_roots(p, u);
    if (!roots) throw DomainError("R(u,.) has no real roots (case A/B)");
    return roots->lower;
}

Case classify(const ModelParams& p, double u) noexcept {
    if (symbol_c1(u) <= 0.0) return Case::D;
    if (symbol_c2(p, u) >= 0.0) return Case::A;
    if (discriminant(p, u) < 0.0) return Case::B;
    return Case::C;
}

}  // namespace roughheston
