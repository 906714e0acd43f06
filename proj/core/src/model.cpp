#include "roughheston/model.hpp"

#include "roughheston/errors.hpp"

#include <cmath>

namespace roughheston {

ModelParams::ModelParams(double rho, double lambda, double eta, double alpha, double v0)
    : rho_(rho), lambda_(lambda), eta_(eta), alpha_(alpha), v0_(v0) {
    if (!(rho > -1.0 && rho < 1.0)) throw ValidationError("rho must lie in (-1, 1)");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("lambda must be positive and finite");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw ValidationError("eta must be positive and finite");
    if (!(alpha > 0.5 && alpha <= 1.0)) throw ValidationError("alpha must lie in (1/2, 1]");
    if (!(v0 >= 0.0) || !std::isfinite(v0)) throw ValidationError("v0 must be nonnegative and finite");
}

ModelParams ModelParams::reference() { return {-0.8, 2.0, 0.2, 0.6, 0.04}; }

char to_char(Case c) noexcept {
    switch (c) {
        case Case::A: return 'A';
        case Case::B: return 'B';
        case Case::C: return 'C';
        case Case::D: return 'D';
    }
    return '?';
}

std::string to_string(Case c) { return std::string(1, to_char(c)); }

}  // namespace roughheston
