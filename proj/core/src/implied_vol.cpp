#include "roughheston/implied_vol.hpp"

#include "parallel.hpp"
#include "roughheston/critical_moments.hpp"
#include "roughheston/errors.hpp"
#include "roughheston/kernels.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace roughheston {

namespace {

// Maturities within rounding of T'_crit count as inside the domain.
bool within_crit_prime(const ModelParams& p, double maturity) {
    return maturity <= threshold_T_crit_prime(p) * (1.0 + 1e-12);
}

}  // namespace

double lee_varsigma(double y) {
    if (!(y >= 0.0)) throw DomainError("lee_varsigma needs y >= 0");
    if (y == 0.0) return 2.0;
    if (std::isinf(y)) return 0.0;
    // 2 - 4(r - y) with r = sqrt(y^2 + y) equals 2(r - y)/(r + y) = 2y/(r + y)^2.
    if (y <= 1.0) {
        const double r = std::sqrt(y * y + y);
        return 2.0 * (r - y) / (r + y);
    }
    const double g = 1.0 + std::sqrt(1.0 + 1.0 / y);  // (r + y)/y
    return 2.0 / (y * g * g);
}

double aivs_classic(const ModelParams& p, double maturity, Wing wing) {
    if (!(maturity > 0.0)) throw DomainError("aivs_classic needs T > 0");
    if (wing == Wing::left) return lee_varsigma(-u1_critical(p, maturity, Side::lower)) / maturity;
    return lee_varsigma(u1_critical(p, maturity, Side::upper) - 1.0) / maturity;
}

double aivs_rough_lower_left(const ModelParams& p, double maturity) {
    if (!(maturity > 0.0)) throw DomainError("aivs_rough_lower_left needs T > 0");
    if (!within_crit_prime(p, maturity)) throw DomainError("aivs_rough_lower_left needs T <= T'_crit");
    const double a = p.alpha();
    const double prefactor = std::pow(maturity, a - 1.0) / std::tgamma(a + 1.0);
    return prefactor * aivs_classic(p, cumulative_K(a, maturity), Wing::left);
}

SmallTimeConstants aivs_small_T_constants(const ModelParams& p) {
    const double rho = p.rho();
    if (!(rho < 0.0)) throw DomainError("small-time constants need rho < 0");
    const double pi = boost::math::constants::pi<double>();
    const double rbar = std::sqrt(1.0 - rho * rho);
    SmallTimeConstants c{};
    c.c_minus = pi - 2.0 * std::atan(-rho / rbar);
    c.c_plus = pi - 2.0 * std::atan(rho / rbar);
    c.d = pi - 2.0 * rho / rbar;
    c.aivs0_left = p.eta() * rbar / (2.0 * c.c_minus);
    c.aivs0_right = p.eta() * rbar / (2.0 * c.c_plus);
    c.right_prefactor = c.c_plus / c.d;
    return c;
}

AsymptoticBound aivs_rough_asymptotic_bound(const ModelParams& p, double maturity, Wing wing) {
    if (!(maturity > 0.0)) throw DomainError("aivs_rough_asymptotic_bound needs T > 0");
    const SmallTimeConstants c = aivs_small_T_constants(p);
    const double a = p.alpha();
    const double prefactor = std::pow(maturity, a - 1.0) / std::tgamma(a + 1.0);
    if (wing == Wing::left) return {prefactor * c.aivs0_left};
    return {c.right_prefactor * prefactor * c.aivs0_right};
}

Table aivs_table(const ModelParams& p, const std::vector<double>& maturities, unsigned threads) {
    for (double m : maturities) {
        if (!(m > 0.0) || !within_crit_prime(p, m)) throw DomainError("aivs sweep maturities must lie in (0, T'_crit]");
    }
    std::vector<std::vector<Cell>> rows(maturities.size());
    detail::parallel_for(maturities.size(), threads, [&](std::size_t i) {
        const double m = maturities[i];
        rows[i] = {m,
                   aivs_classic(p, m, Wing::left),
                   aivs_classic(p, m, Wing::right),
                   aivs_rough_lower_left(p, m),
                   aivs_rough_asymptotic_bound(p, m, Wing::left).value,
                   aivs_rough_asymptotic_bound(p, m, Wing::right).value};
    });
    Table table({"T", "aivs1_left", "aivs1_right", "bound_left", "asym_left", "asym_right"});
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

}  // namespace roughheston
