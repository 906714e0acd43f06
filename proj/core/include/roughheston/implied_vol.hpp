#pragma once

#include "roughheston/model.hpp"
#include "roughheston/table.hpp"

#include <vector>

namespace roughheston {

// Lee's map: 2 - 4(sqrt(y^2 + y) - y), y >= 0.
double lee_varsigma(double y);

enum class Wing { left, right };

// Classic Heston asymptotic implied-variance slope from the critical moments (rho < 0).
double aivs_classic(const ModelParams& p, double maturity, Wing wing);
// Non-asymptotic lower bound on the rough left-wing slope, 0 < T <= T'_crit.
double aivs_rough_lower_left(const ModelParams& p, double maturity);

struct SmallTimeConstants {
    double c_minus;
    double c_plus;
    double d;
    double aivs0_left;   // lim_{T->0} classic left slope
    double aivs0_right;  // lim_{T->0} classic right slope
    double right_prefactor;  // c_plus / d
};

SmallTimeConstants aivs_small_T_constants(const ModelParams& p);

// Small-maturity lower bound; only meaningful as T -> 0, never a finite-T guarantee.
struct AsymptoticBound {
    double value;
    bool asymptotic_only = true;
};

AsymptoticBound aivs_rough_asymptotic_bound(const ModelParams& p, double maturity, Wing wing);

// Columns T, aivs1_left, aivs1_right, bound_left, asym_left, asym_right.
// Every maturity must lie in (0, T'_crit] (DomainError otherwise).
Table aivs_table(const ModelParams& p, const std::vector<double>& maturities, unsigned threads = 0);

}  // namespace roughheston
