#include "roughheston/explosion_bounds.hpp"

#include "parallel.hpp"
#include "roughheston/kernels.hpp"
#include "roughheston/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace roughheston {

ExplosionTime km_upper_bound(const ModelParams& p, double u) {
    const ExplosionTime classic = envelope_explosion_time(p, u);
    if (!classic.is_finite()) return classic;
    const double a = p.alpha();
    if (a == 1.0) return classic;
    return ExplosionTime::finite(std::pow(std::tgamma(a + 1.0) * classic.value(), 1.0 / a), classic.label());
}

ExplosionTime km_refined_bound(const ModelParams& p, double u) {
    const ExplosionTime km = km_upper_bound(p, u);
    if (!km.is_finite()) return km;
    const double classic = envelope_explosion_time(p, u).value();
    if (classic <= fixed_point_T_alpha(p.alpha()) && classic < km.value())
        return ExplosionTime::finite(classic, km.label());
    return km;
}

Table explosion_table(const ModelParams& p, const std::vector<double>& u_grid,
                      const std::optional<SolverConfig>& numeric, unsigned threads) {
    std::vector<std::string> columns{"u", "case", "T1_star", "T1_bar_star", "km_bound"};
    if (numeric) {
        numeric->validate();
        columns.emplace_back("numeric_estimate");
    }
    std::vector<std::vector<Cell>> rows(u_grid.size());
    const Kernel kernel = Kernel::power_law(p.alpha());
    detail::parallel_for(u_grid.size(), threads, [&](std::size_t i) {
        const double u = u_grid[i];
        const ExplosionTime km = km_upper_bound(p, u);
        std::vector<Cell> row{u, to_string(classify(p, u)), t1_star(p, u).value_or_inf(),
                              envelope_explosion_time(p, u).value_or_inf(), km.value_or_inf()};
        if (numeric) {
            double estimate = std::numeric_limits<double>::infinity();
            if (km.is_finite()) {
                SolverConfig cfg = *numeric;
                cfg.horizon = std::min(cfg.horizon, 1.1 * km.value());
                estimate = estimate_explosion_time(kernel, p, u, cfg).bracket->upper;
            }
            row.emplace_back(estimate);
        }
        rows[i] = std::move(row);
    });
    Table table(std::move(columns));
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

}  // namespace roughheston
