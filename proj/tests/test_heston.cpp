#include "doctest.h"
#include "oracles/oracles.hpp"

#include <roughheston/errors.hpp>
#include <roughheston/heston.hpp>
#include <roughheston/riccati.hpp>

#include <cmath>
#include <random>

using namespace roughheston;

namespace {
const ModelParams ref = ModelParams::reference();
const oracle::Symbol sym = oracle::reference_symbol();
}  // namespace

TEST_CASE("explosion time against quadrature of 1/R") {
    for (double u : {-12.6, -13.0, -15.0, -20.0, -40.0, -100.0, 52.6, 55.0, 60.0, 80.0, 200.0}) {
        CAPTURE(u);
        const double q = oracle::explosion_time_quadrature(sym, u);
        CHECK(t1_star(ref, u).value() == doctest::Approx(q).epsilon(1e-12));
    }
    // frozen 40-digit values
    CHECK(t1_star(ref, -20.0).value() == doctest::Approx(0.649968944654883).epsilon(1e-13));
    CHECK(t1_star(ref, 60.0).value() == doctest::Approx(2.198566591631006).epsilon(1e-13));
}

TEST_CASE("explosion time on the log branch") {
    // Delta > 0 with c1 > 0 and c2 > 0 needs rho > 0.
    const ModelParams p(0.9, 0.1, 2.0);
    REQUIRE(discriminant(p, 2.0) > 0.0);
    REQUIRE(symbol_c2(p, 2.0) > 0.0);
    const oracle::Symbol s{0.9, 0.1, 2.0};
    const double t = t1_star(p, 2.0).value();
    CHECK(t == doctest::Approx(oracle::explosion_time_quadrature(s, 2.0)).epsilon(1e-12));
    CHECK(q_integral(p, 2.0, 50.0) == doctest::Approx(oracle::q_quadrature(s, 2.0, 50.0)).epsilon(1e-12));
    for (double w : {0.01, 1.0, 100.0}) CHECK(q_inverse(p, 2.0, q_integral(p, 2.0, w)) == doctest::Approx(w).epsilon(1e-9));
    CHECK(psi1(p, 2.0, 0.5 * t) == doctest::Approx(oracle::riccati_ode(s, 2.0, 0.5 * t)).epsilon(1e-8));
}

TEST_CASE("no explosion in cases C and D") {
    for (double u : {0.5, 0.0, 1.0, -3.0, 10.0, 40.0}) {
        const auto t = t1_star(ref, u);
        CHECK_FALSE(t.is_finite());
        CHECK(std::isinf(t.value_or_inf()));
        CHECK_THROWS_AS(t.value(), DomainError);
    }
    CHECK(t1_star(ref, 0.5).label() == Case::D);
    CHECK(t1_star(ref, 10.0).label() == Case::C);
}

TEST_CASE("Q integral") {
    CHECK(q_integral(ref, -20.0, 0.0) == 0.0);
    for (double w : {0.1, 1.0, 10.0, 1e3}) {
        CHECK(q_integral(ref, -20.0, w) == doctest::Approx(oracle::q_quadrature(sym, -20.0, w)).epsilon(1e-12));
        CHECK(q_integral(ref, 60.0, w) == doctest::Approx(oracle::q_quadrature(sym, 60.0, w)).epsilon(1e-12));
    }
    CHECK(q_integral(ref, -20.0, 1e12) == doctest::Approx(t1_star(ref, -20.0).value()).epsilon(1e-9));
    // grows without bound at the first root in case C
    const double ws = w_first_root(ref, 10.0);
    CHECK(q_integral(ref, 10.0, ws * (1.0 - 1e-9)) > q_integral(ref, 10.0, ws * (1.0 - 1e-6)));
    CHECK(q_integral(ref, 10.0, ws * (1.0 - 1e-9)) > 1.0);
    CHECK_THROWS_AS(q_integral(ref, 10.0, ws + 1.0), DomainError);
}

TEST_CASE("Q inverse round trip") {
    CHECK(q_inverse(ref, -20.0, 0.0) == 0.0);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> lw(-4.0, 6.0);
    for (double u : {-20.0, -8.0, 60.0, -13.0}) {
        for (int i = 0; i < 100; ++i) {
            const double w = std::pow(10.0, lw(gen));
            const double y = q_integral(ref, u, w);
            CHECK(q_inverse(ref, u, y) == doctest::Approx(w).epsilon(1e-9));
        }
    }
    for (double u : {10.0, -3.0}) {
        const double ws = w_first_root(ref, u);
        for (int i = 1; i < 100; ++i) {
            const double w = ws * i / 100.0;
            CHECK(q_inverse(ref, u, q_integral(ref, u, w)) == doctest::Approx(w).epsilon(1e-9));
        }
    }
    CHECK(q_inverse(ref, 10.0, 1e3) == doctest::Approx(13.514707296108227).epsilon(1e-9));
    CHECK_THROWS_AS(q_inverse(ref, -20.0, 0.7), RangeError);
}

TEST_CASE("Riccati solution against an ODE integrator") {
    CHECK(psi1(ref, 0.0, 1.0) == 0.0);
    CHECK(psi1(ref, 1.0, 1.0) == 0.0);
    const double t = 0.5 * t1_star(ref, -20.0).value();
    CHECK(psi1(ref, -20.0, t) == doctest::Approx(oracle::riccati_ode(sym, -20.0, t)).epsilon(1e-8));
    for (double u : {-13.0, -8.0, -3.0, 0.5, 10.0, 60.0}) {
        for (double s : {0.05, 0.2, 0.5}) {
            CAPTURE(u);
            CAPTURE(s);
            CHECK(psi1(ref, u, s) == doctest::Approx(oracle::riccati_ode(sym, u, s)).epsilon(1e-8));
        }
    }
    CHECK(psi1(ref, 10.0, 200.0) == doctest::Approx(13.514707296108227).epsilon(1e-10));
}

TEST_CASE("Riccati solution satisfies the ODE") {
    const double h = 1e-5;
    for (double u : {-20.0, 60.0, 10.0, 0.5, -3.0}) {
        const auto te = t1_star(ref, u);
        const double tmax = te.is_finite() ? 0.9 * te.value() : 3.0;
        for (int i = 1; i <= 20; ++i) {
            const double t = tmax * i / 21.0;
            const double d = (psi1(ref, u, t + h) - psi1(ref, u, t - h)) / (2.0 * h);
            const double r = eval_R(ref, u, psi1(ref, u, t));
            CHECK(std::abs(d - r) <= 1e-6 * std::max(1.0, std::abs(r)));
        }
    }
}

TEST_CASE("blow-up of the Riccati solution") {
    for (double u : {-20.0, 60.0}) {
        const double te = t1_star(ref, u).value();
        double prev = 0.0;
        for (double gap : {4e-7, 1e-7, 1e-9}) {
            const double v = psi1(ref, u, te - gap);
            CHECK(v > 1e8);
            CHECK(v > prev);
            prev = v;
        }
        CHECK_THROWS_AS(psi1(ref, u, te), ExplosionError);
        CHECK_THROWS_AS(psi1(ref, u, te + 1.0), ExplosionError);
    }
}

TEST_CASE("saturation in cases C and D") {
    const double ws = w_first_root(ref, 10.0);
    const double wd = w_first_root(ref, 0.5);
    double prev_c = 0.0, prev_d = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double t = 0.2 * i;
        const double c = psi1(ref, 10.0, t), d = psi1(ref, 0.5, t);
        CHECK(c >= prev_c);
        CHECK(c <= ws);
        CHECK(d <= prev_d);
        CHECK(d >= wd);
        prev_c = c;
        prev_d = d;
    }
}

TEST_CASE("pseudo explosion time") {
    CHECK(t1_bar_star(ref, 60.0).value() == doctest::Approx(4.479486826828906).epsilon(1e-13));
    CHECK(t1_bar_star(ref, 60.0).value() >= t1_star(ref, 60.0).value());
    CHECK(t1_bar_star(ref, -12.5).value() == doctest::Approx(1.209199576156145).epsilon(1e-13));
    CHECK(t1_bar_star(ref, -12.5 + 1e-9).value() == doctest::Approx(1.209199576156145).epsilon(1e-8));
    CHECK_THROWS_AS(t1_bar_star(ref, -20.0), CaseError);
    CHECK_THROWS_AS(t1_bar_star(ref, 10.0), CaseError);
    const auto d = delta_roots(ref);
    for (int i = 1; i < 50; ++i) {
        const double u = -12.5 + (d.d_minus + 12.5) * i / 50.0;
        CHECK(t1_bar_star(ref, u).value() >= t1_star(ref, u).value());
    }
}

TEST_CASE("envelope solution") {
    CHECK(psi1_bar(ref, 60.0, 0.0) == 0.0);
    CHECK(psi1_bar(ref, 60.0, 1e-3) == doctest::Approx(88.0 * 1e-3).epsilon(1e-12));
    for (double u : {60.0, -8.0, 100.0}) {
        const double tb = t1_bar_star(ref, u).value();
        const double ts = t1_star(ref, u).value();
        const double h = 1e-6;
        for (int i = 1; i < 40; ++i) {
            const double t = 0.98 * ts * i / 40.0;
            CHECK(psi1_bar(ref, u, t) <= psi1(ref, u, t) * (1.0 + 1e-12));
        }
        for (int i = 1; i < 40; ++i) {
            const double t = 0.98 * tb * i / 40.0;
            const double d = (psi1_bar(ref, u, t + h) - psi1_bar(ref, u, t - h)) / (2.0 * h);
            const double r = eval_Rbar(ref, u, psi1_bar(ref, u, t));
            CHECK(std::abs(d - r) <= 1e-5 * std::max(1.0, std::abs(r)));
        }
        CHECK(psi1_bar(ref, u, tb * (1.0 - 1e-9)) > 1e6);
    }
}

TEST_CASE("combined time") {
    CHECK(t1_tilde(ref, -12.5).value() == doctest::Approx(t1_star(ref, -12.5).value()).epsilon(1e-12));
    CHECK(t1_tilde(ref, -12.5).value() == doctest::Approx(t1_bar_star(ref, -12.5).value()).epsilon(1e-12));
    CHECK(t1_tilde(ref, -20.0).value() == t1_star(ref, -20.0).value());
    CHECK(t1_tilde(ref, 60.0).value() == t1_bar_star(ref, 60.0).value());
    CHECK_THROWS_AS(t1_tilde(ref, 0.0), DomainError);
    CHECK_THROWS_AS(t1_tilde(ModelParams(0.3, 2.0, 0.2), -20.0), DomainError);
    CHECK(envelope_explosion_time(ref, -20.0).value() == t1_star(ref, -20.0).value());
    CHECK(envelope_explosion_time(ref, 60.0).value() == t1_bar_star(ref, 60.0).value());
    CHECK_FALSE(envelope_explosion_time(ref, 10.0).is_finite());
}

TEST_CASE("explosion times are monotone away from the interval [d-, d+]") {
    const auto d = delta_roots(ref);
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double u = -200.0 + (d.d_minus - 1e-3 + 200.0) * i / 199.0;
        const double t = t1_star(ref, u).value();
        CHECK(t > prev);
        prev = t;
    }
    prev = INFINITY;
    for (int i = 0; i < 200; ++i) {
        const double u = d.d_plus + 1e-3 + 300.0 * i / 199.0;
        const double t = t1_star(ref, u).value();
        CHECK(t < prev);
        prev = t;
    }
    prev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double u = -12.5 + (d.d_minus - 1e-3 + 12.5) * i / 99.0;
        const double t = t1_bar_star(ref, u).value();
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("combined time is C1 across the case boundary") {
    const double k = -12.5, h = 1e-6;
    const double left = (t1_star(ref, k).value() - t1_star(ref, k - h).value()) / h;
    const double right = (t1_bar_star(ref, k + h).value() - t1_bar_star(ref, k).value()) / h;
    CHECK(std::abs(left - right) < 1e-4);
}
