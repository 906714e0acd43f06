#pragma once

#include "roughheston/model.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace roughheston {

// Power-law kernel t^(alpha-1)/Gamma(alpha) and its integral K_alpha.
double kappa_alpha(double alpha, double t);
double cumulative_K(double alpha, double t);
// Positive fixed point of K_alpha. For alpha = 1 every point is fixed and 1.0 is returned.
double fixed_point_T_alpha(double alpha);

// Resolvent of lambda * kappa_alpha and L(t) = (1/lambda) int_0^t r.
double resolvent(const ModelParams& p, double t);
double cumulative_L(const ModelParams& p, double t);
// Positive solution of L(t) = t. Absolute accuracy 1e-10. Rejects alpha = 1 (no positive fixed point).
double fixed_point_T_alpha_lambda(const ModelParams& p);

// A nonnegative, nonincreasing kernel with finite cumulative integral.
class Kernel {
public:
    enum class Kind { power_law, scaled_resolvent, tabulated };

    static Kernel power_law(double alpha);
    // r_{alpha,lambda}/lambda, the kernel of the R0 reformulation.
    static Kernel scaled_resolvent(double alpha, double lambda);
    // Piecewise constant: value k[i] on (t[i-1], t[i]] with t[-1] = 0, and k.back() beyond t.back().
    static Kernel tabulated(std::vector<double> t, std::vector<double> k);

    double operator()(double t) const;
    double cumulative(double t) const;
    Kind kind() const noexcept;
    std::string tag() const;

    // Moments int_{mh}^{(m+1)h} kappa(tau) x^j dtau for j = 0..3, where x = (m+1) - tau/h.
    // Exact on the singular first interval, Gauss-Legendre elsewhere.
    std::array<double, 4> interval_moments(double h, std::size_t m) const;

private:
    struct PowerLaw {
        double alpha;
    };
    struct ScaledResolvent {
        double alpha;
        double lambda;
    };
    struct Tabulated {
        std::vector<double> t;
        std::vector<double> k;
        std::vector<double> prefix;  // cumulative integral at each t[i]
    };
    using Impl = std::variant<PowerLaw, ScaledResolvent, Tabulated>;

    explicit Kernel(Impl impl) : impl_(std::move(impl)) {}
    Impl impl_;
};

// Two-column text (t, kappa): '#' comments and blank lines ignored, whitespace or comma separated.
Kernel load_tabulated_kernel(std::istream& in);
Kernel load_tabulated_kernel(const std::string& path);

}  // namespace roughheston
