#include "doctest.h"
#include "oracles/oracles.hpp"

#include <roughheston/errors.hpp>
#include <roughheston/mittag_leffler.hpp>

#include <cmath>

using roughheston::mittag_leffler;

namespace {

struct Frozen {
    double a, b, x, value;
};

// 40-digit series sums (mpmath), plus two spectral-integral values at x = -200.
const Frozen frozen[] = {
    {0.6, 0.6, -0.5, 0.31922307382676061},
    {0.6, 0.6, -3, 0.031693926561557027},
    {0.6, 0.6, -30, 0.00030776027117107537},
    {0.6, 1, -7.5, 0.062638906158043227},
    {0.6, 2, -12, 0.088095722247347855},
    {0.75, 0.75, -15, 0.0010556553297295079},
    {0.9, 0.9, -4, 0.01992384714278625},
    {0.99, 0.99, -20, 3.1301009208912253e-5},
    {0.55, 1.6, -2.5, 0.32425046882227526},
    {0.6, 0.6, 2.5, 306.99104629360101},
    {0.8, 1.3, 40, 1.5270368098106542e+43},
    {1, 0.5, -3, -0.14740544177658249},
    {1.5, 1, -4, -0.27242487890994054},
    {0.6, 0.6, -200, 6.7879322360950589e-6},
    {0.6, 1, -200, 0.0022583936635707115},
};

}  // namespace

TEST_CASE("exponential and hyperbolic special cases") {
    for (int i = 0; i <= 100; ++i) {
        const double x = -5.0 + 0.1 * i;
        CHECK(mittag_leffler(1.0, 1.0, x) == doctest::Approx(std::exp(x)).epsilon(1e-10));
        CHECK(mittag_leffler(1.0, 2.0, x) == doctest::Approx(x == 0.0 ? 1.0 : std::expm1(x) / x).epsilon(1e-10));
    }
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.1 * i;
        CHECK(mittag_leffler(2.0, 1.0, x) == doctest::Approx(std::cosh(std::sqrt(x))).epsilon(1e-10));
    }
}

TEST_CASE("value at zero is a reciprocal gamma") {
    CHECK(mittag_leffler(0.6, 0.6, 0.0) == doctest::Approx(0.671504972442073).epsilon(1e-13));
    CHECK(mittag_leffler(0.6, 1.0, 0.0) == 1.0);
    CHECK(roughheston::reciprocal_gamma(0.0) == 0.0);
    CHECK(roughheston::reciprocal_gamma(-3.0) == 0.0);
    CHECK(roughheston::reciprocal_gamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-14));
}

TEST_CASE("frozen high-precision values") {
    for (const auto& f : frozen) {
        CAPTURE(f.a);
        CAPTURE(f.b);
        CAPTURE(f.x);
        CHECK(mittag_leffler(f.a, f.b, f.x) == doctest::Approx(f.value).epsilon(1e-11));
    }
}

TEST_CASE("agreement with the spectral integral on the negative axis") {
    for (double a : {0.55, 0.6, 0.75, 0.9, 0.99}) {
        for (double x : {-0.5, -1.0, -2.0, -5.0, -10.0, -20.0, -30.0, -50.0}) {
            CAPTURE(a);
            CAPTURE(x);
            CHECK(mittag_leffler(a, 1.0, x) == doctest::Approx(oracle::ml_one(a, x)).epsilon(1e-8));
            CHECK(mittag_leffler(a, a, x) == doctest::Approx(oracle::ml_aa(a, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("positivity and monotonicity on the negative axis") {
    for (double a : {0.55, 0.6, 0.8, 1.0}) {
        double prev = 1.0 / std::tgamma(a);
        for (int i = 1; i <= 300; ++i) {
            const double x = -0.5 * i;
            const double v = mittag_leffler(a, a, x);
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("outside the accuracy envelope") {
    CHECK_THROWS_AS(mittag_leffler(0.6, 1.0, 1e3), roughheston::AccuracyError);
    CHECK_THROWS_AS(mittag_leffler(1.0, 0.5, -50.0), roughheston::AccuracyError);
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, -1.0), roughheston::DomainError);
    CHECK_THROWS_AS(mittag_leffler(0.6, -1.0, -1.0), roughheston::DomainError);
    CHECK_THROWS_AS(mittag_leffler(0.6, 1.0, NAN), roughheston::DomainError);
}
