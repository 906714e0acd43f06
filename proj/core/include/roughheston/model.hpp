#pragma once

#include <string>

namespace roughheston {

// Heston symbol parameters plus roughness index and spot variance.
// Construction validates every invariant, so a ModelParams value is always usable.
class ModelParams {
public:
    ModelParams(double rho, double lambda, double eta, double alpha = 1.0, double v0 = 0.04);

    double rho() const noexcept { return rho_; }
    double lambda() const noexcept { return lambda_; }
    double eta() const noexcept { return eta_; }
    double alpha() const noexcept { return alpha_; }
    double v0() const noexcept { return v0_; }

    ModelParams with_alpha(double alpha) const { return {rho_, lambda_, eta_, alpha, v0_}; }

    // rho=-0.8, lambda=2, eta=0.2, alpha=0.6, v0=0.04
    static ModelParams reference();

private:
    double rho_;
    double lambda_;
    double eta_;
    double alpha_;
    double v0_;
};

enum class Case { A, B, C, D };

char to_char(Case c) noexcept;
std::string to_string(Case c);

}  // namespace roughheston
