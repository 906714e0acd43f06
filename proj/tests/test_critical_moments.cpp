#include "doctest.h"

#include <roughheston/critical_moments.hpp>
#include <roughheston/errors.hpp>
#include <roughheston/heston.hpp>
#include <roughheston/kernels.hpp>
#include <roughheston/riccati.hpp>

#include <cmath>

using namespace roughheston;

namespace {
const ModelParams ref = ModelParams::reference();
const double t_crit = 1.209199576156145;
const double t_crit_prime = 1.137627302102546;
}  // namespace

TEST_CASE("critical moment inversion") {
    CHECK(u1_critical(ref, 0.649968944654883, Side::lower) == doctest::Approx(-20.0).epsilon(1e-12));
    CHECK(u1_critical(ref, 2.198566591631006, Side::upper) == doctest::Approx(60.0).epsilon(1e-12));
    const auto d = delta_roots(ref);
    CHECK(std::abs(u1_critical(ref, 1e3, Side::lower) - d.d_minus) < 1e-3);
    CHECK(std::abs(u1_critical(ref, 1e3, Side::upper) - d.d_plus) < 1e-3);
    CHECK_THROWS_AS(u1_critical(ModelParams(0.2, 2.0, 0.2), 1.0, Side::lower), DomainError);
    CHECK_THROWS_AS(u1_critical(ref, 0.0, Side::lower), DomainError);
}

TEST_CASE("critical moments round trip and are monotone in t") {
    double prev_lo = -INFINITY, prev_hi = INFINITY;
    for (int i = 0; i <= 200; ++i) {
        const double t = 0.05 * std::pow(400.0, i / 200.0);  // 0.05 .. 20
        const double lo = u1_critical(ref, t, Side::lower);
        const double hi = u1_critical(ref, t, Side::upper);
        CHECK(lo < 0.0);
        CHECK(hi > 1.0);
        CHECK(t1_star(ref, lo).value() == doctest::Approx(t).epsilon(1e-9));
        CHECK(t1_star(ref, hi).value() == doctest::Approx(t).epsilon(1e-9));
        CHECK(lo > prev_lo);
        CHECK(hi < prev_hi);
        prev_lo = lo;
        prev_hi = hi;
    }
}

TEST_CASE("pseudo moments") {
    CHECK(u1_pseudo(ref, 4.479486826828906, Side::upper) == doctest::Approx(60.0).epsilon(1e-12));
    CHECK(u1_pseudo(ref, t_crit * (1.0 + 1e-12), Side::lower) == doctest::Approx(-12.5).epsilon(1e-4));
    CHECK_THROWS_AS(u1_pseudo(ref, 1.0, Side::lower), DomainError);
    for (int i = 0; i <= 100; ++i) {
        const double t = 0.05 * std::pow(400.0, i / 100.0);
        const double hi = u1_pseudo(ref, t, Side::upper);
        CHECK(t1_bar_star(ref, hi).value() == doctest::Approx(t).epsilon(1e-9));
        if (t > t_crit) {
            const double lo = u1_pseudo(ref, t, Side::lower);
            CHECK(t1_bar_star(ref, lo).value() == doctest::Approx(t).epsilon(1e-9));
            CHECK(lo > -12.5);
            CHECK(lo < delta_roots(ref).d_minus);
        }
    }
}

TEST_CASE("envelope inverse switches branch at the threshold") {
    CHECK(u1_envelope_lower(ref, 0.649968944654883) == doctest::Approx(-20.0).epsilon(1e-12));
    CHECK(u1_envelope_lower(ref, 3.0) == u1_pseudo(ref, 3.0, Side::lower));
    CHECK(u1_envelope_lower(ref, t_crit * (1.0 - 1e-12)) == doctest::Approx(u1_envelope_lower(ref, t_crit * (1.0 + 1e-12))).epsilon(1e-4));
}

TEST_CASE("thresholds") {
    CHECK(threshold_T_crit(ref) == doctest::Approx(t_crit).epsilon(1e-13));
    CHECK(threshold_T_crit_prime(ref) == doctest::Approx(t_crit_prime).epsilon(1e-13));
    CHECK(t1_bar_star(ref, c2_zero(ref)).value() == doctest::Approx(threshold_T_crit(ref)).epsilon(1e-13));
    CHECK(threshold_T_crit_prime(ref.with_alpha(1.0)) == doctest::Approx(t_crit).epsilon(1e-14));
}

TEST_CASE("rough critical bounds") {
    const auto b = rough_critical_bounds(ref, 0.404257147156245);
    CHECK(b.lower == doctest::Approx(-20.0).epsilon(1e-8));
    CHECK(b.upper > 1.0);
    const ModelParams one = ref.with_alpha(1.0);
    for (double t : {0.1, 0.5, 1.0, 3.0}) {
        const auto c = rough_critical_bounds(one, t);
        CHECK(c.lower == doctest::Approx(u1_envelope_lower(one, t)).epsilon(1e-14));
        CHECK(c.upper == doctest::Approx(u1_pseudo(one, t, Side::upper)).epsilon(1e-14));
        if (t <= t_crit) CHECK(c.lower == doctest::Approx(u1_critical(one, t, Side::lower)).epsilon(1e-14));
    }
    // continuous across the switch to the pseudo-moment branch
    const auto below = rough_critical_bounds(ref, t_crit_prime * (1.0 - 1e-10));
    const auto above = rough_critical_bounds(ref, t_crit_prime * (1.0 + 1e-10));
    CHECK(below.lower == doctest::Approx(-12.5).epsilon(1e-3));
    CHECK(above.lower == doctest::Approx(below.lower).epsilon(1e-3));
}

TEST_CASE("numeric rough critical moments") {
    SolverConfig cfg;
    cfg.step = 2e-3;
    const double tol = 1e-2;
    // classic kernel: the numeric inverse lands on the closed-form one
    const ModelParams one = ref.with_alpha(1.0);
    const double u = rough_critical_numeric(one, 0.649968944654883, Side::lower, tol, cfg);
    CHECK(std::abs(t1_star(one, u).value() - 0.649968944654883) <= 2.0 * tol);

    for (double t : {0.2, 0.404257147156245}) {
        const auto b = rough_critical_bounds(ref, t);
        const double lo = rough_critical_numeric(ref, t, Side::lower, tol, cfg);
        CHECK(lo >= b.lower);
        CHECK(lo < delta_roots(ref).d_minus);
    }
    const double t_up = 2.0;
    const double hi = rough_critical_numeric(ref, t_up, Side::upper, tol, cfg);
    CHECK(hi <= rough_critical_bounds(ref, t_up).upper);
}

TEST_CASE("exploding moments lie beyond the rough critical moment") {
    // if T_alpha(u) <= t then u <= u_alpha^-(t)
    SolverConfig cfg;
    cfg.step = 2e-3;
    cfg.horizon = 2.0;
    const double tol = 1e-2;
    const Kernel k = Kernel::power_law(0.6);
    for (double u : {-15.0, -25.0}) {
        const auto est = estimate_explosion_time(k, ref, u, cfg);
        for (double factor : {1.0, 1.5}) {
            const double t = est.bracket->upper * factor;
            const double found = rough_critical_numeric(ref, t, Side::lower, tol, cfg);
            // the inversion tolerance is in time, so compare explosion times rather than orders
            SolverConfig wide = cfg;
            wide.horizon = 4.0;
            const auto at_found = estimate_explosion_time(k, ref, found, wide);
            CHECK(est.bracket->upper <= at_found.bracket->upper + 2.0 * tol);
        }
    }
}

TEST_CASE("sweep table") {
    const Table t = critical_moments_table(ref, {0.1, 0.5, 1.0, 1.1376});
    CHECK(t.columns() == std::vector<std::string>{"t", "u1_minus", "u1bar_minus", "u1bar_plus", "rough_lower_bound",
                                                  "rough_upper_bound"});
    CHECK(t.rows().size() == 4);
    const Table late = critical_moments_table(ref, {2.0});
    CHECK(std::get<double>(late.rows()[0][2]) == doctest::Approx(u1_pseudo(ref, 2.0, Side::lower)));
}
