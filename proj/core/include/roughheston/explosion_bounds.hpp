#pragma once

#include "roughheston/heston.hpp"
#include "roughheston/model.hpp"
#include "roughheston/table.hpp"
#include "roughheston/volterra.hpp"

#include <optional>
#include <vector>

namespace roughheston {

// (alpha Gamma(alpha) T)^(1/alpha) with T = T1* in case A and T1bar* in case B; infinite in C/D.
ExplosionTime km_upper_bound(const ModelParams& p, double u);
// Minimum of km_upper_bound and the classic time itself when that time is <= T_alpha.
ExplosionTime km_refined_bound(const ModelParams& p, double u);

// Columns u, case, T1_star, T1_bar_star, km_bound [, numeric_estimate].
// T1_bar_star holds the envelope time: T1* in case A, T1bar* in case B, inf otherwise.
// With a solver config, numeric_estimate is the upper edge of the power-law blow-up bracket;
// each solve runs to min(cfg.horizon, 1.1 * km_bound).
Table explosion_table(const ModelParams& p, const std::vector<double>& u_grid,
                      const std::optional<SolverConfig>& numeric = std::nullopt, unsigned threads = 0);

}  // namespace roughheston
