#include <doctest.h>

#include <cmath>
#include <limits>

#include "ewg/distribution.hpp"
#include "ewg/errors.hpp"
#include "support.hpp"

using namespace ewg;
using ewg::test::module_grid;
using ewg::test::rel_diff;

TEST_SUITE("distribution") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(EwgParams(0.0, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(EwgParams(1.0, -1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(EwgParams(1.0, 1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(EwgParams(1.0, 1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(EwgParams(1.0, 1.0, 1.0, -0.1), std::domain_error);
    CHECK_NOTHROW(EwgParams(1.0, 1.0, 1.0, 0.0));
    CHECK_NOTHROW(EwgParams(1.0, 1.0, 1.0, 0.999999));
}

TEST_CASE("pdf: unit exponential point and plug-in oracle") {
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK(rel_diff(pdf(expo, 1.0), std::exp(-1.0)) < 1e-14);
    // frozen high-precision plug-in value
    EwgParams p(2.0, 1.0, 1.0, 0.5);
    CHECK(rel_diff(pdf(p, 1.0), 0.36315792960059085) < 1e-13);
    CHECK_THROWS_AS(pdf(p, -0.1), std::domain_error);
}

TEST_CASE("pdf at y = 0: the analytic limit by gamma*alpha regime") {
    CHECK(pdf(EwgParams(2.0, 1.0, 2.0, 0.3), 0.0) == 0.0);            // g a > 1
    CHECK(pdf(EwgParams(1.0, 3.0, 1.0, 0.25), 0.0) ==
          doctest::Approx(0.75 * 3.0).epsilon(1e-13));                 // g a = 1 -> (1-theta) beta
    CHECK(pdf(EwgParams(2.0, 3.0, 0.5, 0.25), 0.0) ==
          doctest::Approx(0.75 * 3.0).epsilon(1e-13));                 // another g a = 1 case
    CHECK(pdf(EwgParams(0.5, 1.0, 0.5, 0.0), 0.0) ==
          std::numeric_limits<double>::infinity());                    // g a < 1
}

TEST_CASE("cdf: median of the exponential, edge values, plug-in oracle") {
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK(rel_diff(cdf(expo, std::log(2.0)), 0.5) < 1e-14);
    for (const EwgParams& p : module_grid()) CHECK(cdf(p, 0.0) == 0.0);
    EwgParams p(2.0, 0.5, 1.5, 0.7);
    CHECK(rel_diff(cdf(p, 2.0), 0.16642162920936143) < 1e-13);
    CHECK(cdf(p, 1e10) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(cdf(p, -1.0), std::domain_error);
}

TEST_CASE("survival: complements the cdf everywhere on the grid") {
    for (const EwgParams& p : module_grid()) {
        CHECK(survival(p, 0.0) == 1.0);
        for (double prob : {0.05, 0.3, 0.6, 0.95}) {
            const double y = quantile(p, prob);
            CHECK(std::abs(survival(p, y) + cdf(p, y) - 1.0) < 1e-14);
        }
    }
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK(rel_diff(survival(expo, 1.0), std::exp(-1.0)) < 1e-14);
}

TEST_CASE("hazard: exponential is flat, Weibull grows linearly, ratio matches oracles") {
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    for (double y : {0.0, 0.2, 1.0, 10.0, 80.0})
        CHECK(rel_diff(hazard(expo, y), 1.0) < 1e-12);
    EwgParams rayleigh(1.0, 1.0, 2.0, 0.0);
    for (double y : {0.1, 0.7, 3.0}) CHECK(rel_diff(hazard(rayleigh, y), 2.0 * y) < 1e-12);
    EwgParams p(0.5, 1.0, 0.5, 0.5);
    for (double prob : {0.01, 0.2, 0.5, 0.9, 0.999}) {
        const double y = quantile(p, prob);
        CHECK(rel_diff(hazard(p, y), pdf(p, y) / survival(p, y)) < 1e-12);
    }
}

TEST_CASE("quantile: closed form inverts the cdf") {
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK(rel_diff(quantile(expo, 0.5), std::log(2.0)) < 1e-14);
    EwgParams p(2.0, 1.0, 2.0, 0.6);
    // frozen bisection/oracle value for prob = 0.9
    CHECK(rel_diff(quantile(p, 0.9), 1.9594222145580837) < 1e-12);
    SUBCASE("bisection oracle") {
        double lo = 0.0, hi = 50.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (cdf(p, mid) < 0.9 ? lo : hi) = mid;
        }
        CHECK(rel_diff(quantile(p, 0.9), 0.5 * (lo + hi)) < 1e-10);
    }
    CHECK_THROWS_AS(quantile(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(quantile(p, 1.0), std::domain_error);
}

TEST_CASE("median closed form: substituting p = 1/2") {
    for (const EwgParams& p : module_grid()) {
        const double direct =
            std::pow(-std::log(1.0 - std::pow(1.0 / (2.0 - p.theta), 1.0 / p.alpha)),
                     1.0 / p.gamma_shape) /
            p.beta;
        CHECK(rel_diff(median(p), direct) < 1e-12);
    }
}

TEST_CASE("round trip quantile(cdf(y)) through the bulk") {
    for (const EwgParams& p : module_grid())
        for (double prob : {0.001, 0.05, 0.35, 0.65, 0.95, 0.999}) {
            const double y = quantile(p, prob);
            CHECK(rel_diff(quantile(p, cdf(p, y)), y) < 1e-8);
        }
}

TEST_CASE("inversion identity cdf(quantile(u)) = u") {
    for (const EwgParams& p : module_grid())
        for (double u : {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999})
            CHECK(std::abs(cdf(p, quantile(p, u)) - u) < 1e-12);
}

TEST_CASE("cdf is the antiderivative of pdf (central differences)") {
    for (const EwgParams& p : module_grid())
        for (double prob : {0.1, 0.4, 0.8}) {
            const double y = quantile(p, prob);
            const double h = 1e-6 * y;
            const double deriv = (cdf(p, y + h) - cdf(p, y - h)) / (2.0 * h);
            CHECK(rel_diff(deriv, pdf(p, y)) < 1e-6);
        }
}

TEST_CASE("theta = 0 reduces exactly to the exponentiated Weibull") {
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double g : {0.5, 1.0, 2.0})
            for (double b : {0.5, 2.0}) {
                EwgParams p(a, b, g, 0.0);
                for (double y : {0.01, 0.5, 1.0, 4.0}) {
                    CHECK(rel_diff(pdf(p, y), ew_pdf(a, b, g, y)) < 1e-14);
                    CHECK(rel_diff(cdf(p, y), ew_cdf(a, b, g, y)) < 1e-14);
                }
            }
}

TEST_CASE("EW mixture series matches the closed-form pdf") {
    SeriesControl ctrl;
    for (const EwgParams& p : module_grid())
        for (double prob : {0.02, 0.3, 0.7, 0.98}) {
            const double y = quantile(p, prob);
            CHECK(rel_diff(mixture_pdf(p, y, ctrl), pdf(p, y)) < 1e-10);
        }
    SUBCASE("tiny term cap raises a truncation error carrying the partial sum") {
        SeriesControl tiny;
        tiny.max_terms = 3;
        EwgParams p(1.0, 1.0, 1.0, 0.9);
        try {
            mixture_pdf(p, 1.0, tiny);
            FAIL("expected SeriesTruncationError");
        } catch (const SeriesTruncationError& e) {
            CHECK(e.terms_used() == 3);
            CHECK(e.partial_sum() > 0.0);
            CHECK(e.partial_sum() < pdf(p, 1.0));
        }
    }
}

TEST_CASE("hazard shape classifier: monotone exhibits") {
    CHECK(classify_hazard_shape(EwgParams(2.0, 1.0, 2.0, 0.2)) == HazardShape::increasing);
    CHECK(classify_hazard_shape(EwgParams(0.5, 1.0, 0.5, 0.2)) == HazardShape::decreasing);
    CHECK(to_string(HazardShape::bathtub) == "bathtub");
    // constant hazard has no nonzero runs
    CHECK(classify_hazard_shape(EwgParams(1.0, 1.0, 1.0, 0.0)) == HazardShape::other);
}

} // TEST_SUITE
