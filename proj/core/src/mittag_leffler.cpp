#include "roughheston/mittag_leffler.hpp"

#include "roughheston/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <cmath>
#include <complex>
#include <optional>

namespace roughheston {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
    long double sum = 0.0L;
    long double carry = 0.0L;
    void add(long double v) {
        const long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    long double value() const { return sum + carry; }
};

constexpr int kMaxTerms = 20000;

double series_positive(double a, double b, double x) {
    const double scale = std::pow(x, 1.0 / a);
    if (scale > 700.0) throw AccuracyError("mittag_leffler: positive argument overflows (x^(1/a) > 700)");
    const long double lx = std::log(static_cast<long double>(x));
    long double sum = 0.0L;
    for (int k = 0; k < kMaxTerms; ++k) {
        const long double term = std::exp(k * lx - std::lgamma(static_cast<long double>(a) * k + b));
        sum += term;
        if (a * k + b > scale + 2.0 && term < 1e-19L * sum) return static_cast<double>(sum);
    }
    throw AccuracyError("mittag_leffler: series did not converge");
}

// Alternating series. Gives up if cancellation would cost more than 8 digits.
double series_alternating(double a, double b, double x) {
    CompensatedSum acc;
    long double largest = 0.0L;
    const long double lx = std::log(std::fabs(static_cast<long double>(x)));
    for (int k = 0; k < kMaxTerms; ++k) {
        const long double mag = std::exp(k * lx - std::lgamma(static_cast<long double>(a) * k + b));
        const long double term = (k % 2 == 0) ? mag : -mag;
        acc.add(term);
        if (mag > largest) largest = mag;
        const long double s = std::fabs(acc.value());
        if (k > 4 && a * k + b > std::pow(std::fabs(x), 1.0 / a) + 2.0 && mag < 1e-20L * (s + largest * 1e-19L)) {
            if (largest * 1e-19L > 1e-11L * s) throw AccuracyError("mittag_leffler: series cancellation too severe");
            return static_cast<double>(acc.value());
        }
    }
    throw AccuracyError("mittag_leffler: series did not converge");
}

// Algebraic expansion on the negative axis for a < 1:
//   E_{a,b}(x) ~ -sum_{k>=1} x^{-k} / Gamma(b - a k).
// Accepted only if the optimally truncated tail is below 1e-15 of the sum.
// Truncation is judged on the envelope |1/Gamma(z)| <= Gamma(1 - z)/pi (z < 1/2), so a
// term that is small only because b - a k sits near a pole does not fake convergence.
std::optional<double> asymptotic_negative(double a, double b, double x) {
    const double ly = std::log(-x);
    const double pi = boost::math::constants::pi<double>();
    CompensatedSum acc;
    double previous = INFINITY;
    for (int k = 1; k < 400; ++k) {
        const double z = b - a * k;
        const double rg = reciprocal_gamma(z);
        const double bound = z < 0.5 ? std::exp(std::lgamma(1.0 - z) - k * ly) / pi : std::exp(-k * ly) * std::fabs(rg);
        if (bound > previous) break;
        if (bound < 1e-15 * std::fabs(static_cast<double>(acc.value())) && k > 1) return static_cast<double>(acc.value());
        acc.add(-std::exp(-k * ly) * rg * ((k % 2 == 0) ? 1.0 : -1.0));
        previous = bound;
    }
    return std::nullopt;
}

// Laplace inversion along a Weideman-Trefethen hyperbola, long double arithmetic.
// E_{a,b}(x) = 1/(2 pi i) int e^z z^(a-b) / (z^a - x) dz, valid for a <= 1 and x < 0.
double contour_negative(double a, double b, double x) {
    using cld = std::complex<long double>;
    constexpr int n = 16;
    const long double sigma = 1.1721L;
    const long double h = 1.0818L / n;
    const long double mu = 4.4921L * n;
    const long double la = a;
    const long double lb = b;
    const long double lx = x;
    cld total = 0.0L;
    for (int k = -n; k <= n; ++k) {
        const cld w(-sigma, k * h);
        const cld z = mu * (1.0L + std::sin(w));
        const cld dz = cld(0.0L, 1.0L) * mu * std::cos(w);
        const cld logz = std::log(z);
        const cld f = std::exp(z + (la - lb) * logz) / (std::exp(la * logz) - lx);
        total += f * dz;
    }
    const long double pi = boost::math::constants::pi<long double>();
    return static_cast<double>((total * h / cld(0.0L, 2.0L * pi)).real());
}

}  // namespace

double reciprocal_gamma(double z) {
    if (z > 0.5) return 1.0 / std::tgamma(z);
    const double s = boost::math::sin_pi(z);
    if (s == 0.0) return 0.0;
    // reflection: 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
    return s * std::exp(std::lgamma(1.0 - z)) / boost::math::constants::pi<double>();
}

double mittag_leffler(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("mittag_leffler needs a > 0 and b > 0");
    if (!std::isfinite(x)) throw DomainError("mittag_leffler needs a finite argument");
    if (x == 0.0) return reciprocal_gamma(b);
    if (a == 1.0 && b == 1.0) return std::exp(x);
    if (a == 1.0 && b == 2.0) return std::expm1(x) / x;
    if (x > 0.0) return series_positive(a, b, x);
    if (x >= -1.0 || a > 1.0) return series_alternating(a, b, x);
    if (a < 1.0) {
        if (const auto v = asymptotic_negative(a, b, x)) return *v;
    } else if (x < -10.0) {
        throw AccuracyError("mittag_leffler: a = 1 with b not in {1,2} is limited to x >= -10");
    }
    return contour_negative(a, b, x);
}

}  // namespace roughheston
