#include <doctest.h>

#include <cmath>

#include "ewg/quadrature.hpp"
#include "ewg/residual_life.hpp"
#include "support.hpp"

using namespace ewg;
using ewg::test::rel_diff;

TEST_SUITE("residual_life") {

TEST_CASE("spec validation and survival-underflow refusal") {
    CHECK_THROWS_AS(ResidualSpec(-1.0, 1), std::domain_error);
    CHECK_THROWS_AS(ResidualSpec(0.0, 0), std::domain_error);
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK_THROWS_AS(residual_moment(expo, ResidualSpec(700.0, 1), SeriesControl{}),
                    std::domain_error);
}

TEST_CASE("memorylessness of the exponential restriction") {
    SeriesControl ctrl;
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    for (double t : {0.0, 0.5, 1.0, 3.0, 5.0}) {
        CHECK(rel_diff(residual_moment(expo, ResidualSpec(t, 1), ctrl).value, 1.0) < 1e-10);
        CHECK(rel_diff(residual_moment(expo, ResidualSpec(t, 2), ctrl).value, 2.0) < 1e-10);
        CHECK(rel_diff(mean_residual_life(expo, t, ctrl), 1.0) < 1e-10);
        CHECK(rel_diff(residual_variance(expo, t, ctrl), 1.0) < 1e-8);
    }
    EwgParams expo2(1.0, 2.0, 1.0, 0.0);
    for (double t : {0.0, 1.0, 2.5}) CHECK(rel_diff(mean_residual_life(expo2, t, ctrl), 0.5) < 1e-10);
}

TEST_CASE("age zero recovers the raw moments") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 2.0, 0.7, 0.3),
                               EwgParams(5.0, 0.5, 3.0, 0.9)})
        for (int r : {1, 2, 3}) {
            const double m = residual_moment(p, ResidualSpec(0.0, r), ctrl).value;
            CHECK(rel_diff(m, raw_moment_series(p, r, ctrl).value) < 1e-8);
        }
}

TEST_CASE("frozen quadrature-oracle values for the MRL") {
    SeriesControl ctrl;
    EwgParams p(2.0, 1.0, 2.0, 0.5);
    const double expected[] = {1.2182759883290264, 0.84199235297302219, 0.50358253736230223,
                               0.23121834171995162};
    const double ts[] = {0.1, 0.5, 1.0, 2.0};
    for (int i = 0; i < 4; ++i) {
        CHECK(rel_diff(mean_residual_life(p, ts[i], ctrl), expected[i]) < 1e-8);
        CHECK(rel_diff(residual_moment(p, ResidualSpec(ts[i], 1), ctrl).value, expected[i]) < 1e-8);
        CHECK(rel_diff(residual_moment_quadrature(p, ResidualSpec(ts[i], 1)).value, expected[i]) <
              1e-8);
    }
    SUBCASE("limit t -> 0 recovers the mean") {
        CHECK(rel_diff(mean_residual_life(p, 0.0, ctrl), 1.3182146842271312) < 1e-9);
    }
}

TEST_CASE("dedicated MRL series equals the general series at r = 1") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 1.0, 0.7, 0.3),
                               EwgParams(1.0, 2.0, 1.0, 0.8)})
        for (double prob : {0.1, 0.5, 0.9}) {
            const double t = quantile(p, prob);
            CHECK(rel_diff(mean_residual_life(p, t, ctrl),
                           residual_moment(p, ResidualSpec(t, 1), ctrl).value) < 1e-8);
        }
}

TEST_CASE("series engine vs quadrature engine, theta <= 0.8") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 2.0, 0.7, 0.3),
                               EwgParams(5.0, 0.5, 3.0, 0.8), EwgParams(1.0, 1.0, 1.0, 0.8)})
        for (double prob : {0.05, 0.5, 0.95})
            for (int r : {1, 2}) {
                const double t = quantile(p, prob);
                const double series = residual_moment(p, ResidualSpec(t, r), ctrl).value;
                const double quad = residual_moment_quadrature(p, ResidualSpec(t, r)).value;
                CHECK(rel_diff(series, quad) < 1e-4);
            }
}

TEST_CASE("frozen residual variance and nonnegativity everywhere") {
    SeriesControl ctrl;
    CHECK(rel_diff(residual_variance(EwgParams(0.5, 1.0, 0.7, 0.3), 1.0, ctrl),
                   5.0045714190735968) < 1e-7);
    for (const EwgParams& p : ewg::test::module_grid())
        for (double prob : {0.2, 0.8}) {
            const double t = quantile(p, prob);
            CHECK(residual_variance(p, t, ctrl) >= 0.0);
        }
}

TEST_CASE("survival identity m1(t) = (1/S(t)) integral of S over (t, inf)") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(1.5, 0.5, 1.2, 0.6)})
        for (double prob : {0.1, 0.6}) {
            const double t = quantile(p, prob);
            const double upper = quantile(p, 1.0 - 1e-13);
            QuadratureOptions opts;
            opts.rel_tol = 1e-10;
            const double integral =
                integrate([&](double u) { return survival(p, u); }, {t, upper}, opts).value +
                integrate_to_infinity([&](double u) { return survival(p, u); }, upper, opts).value;
            CHECK(rel_diff(mean_residual_life(p, t, ctrl), integral / survival(p, t)) < 1e-6);
        }
}

TEST_CASE("DMRL under increasing hazard (gamma > 1, alpha >= 1)") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.2), EwgParams(1.0, 1.0, 3.0, 0.5)}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double prob : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const double m = mean_residual_life(p, quantile(p, prob), ctrl);
            CHECK(m <= prev * (1.0 + 1e-9));
            prev = m;
        }
    }
}

} // TEST_SUITE
