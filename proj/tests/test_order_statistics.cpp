#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ewg/order_statistics.hpp"
#include "ewg/sampling.hpp"
#include "ewg/special_functions.hpp"
#include "support.hpp"

using namespace ewg;
using ewg::test::kKsCritical01;
using ewg::test::rel_diff;

TEST_SUITE("order_statistics") {

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(OrderStatSpec(0, 1), std::domain_error);
    CHECK_THROWS_AS(OrderStatSpec(3, 0), std::domain_error);
    CHECK_THROWS_AS(OrderStatSpec(3, 4), std::domain_error);
    CHECK_NOTHROW(OrderStatSpec(3, 3));
}

TEST_CASE("n = 1 collapses to the parent distribution") {
    EwgParams p(2.0, 1.0, 1.5, 0.4);
    OrderStatSpec s(1, 1);
    for (double y : {0.05, 0.5, 1.0, 3.0}) {
        CHECK(rel_diff(order_stat_pdf(p, s, y), pdf(p, y)) < 1e-12);
        CHECK(rel_diff(order_stat_cdf(p, s, y), cdf(p, y)) < 1e-12);
    }
}

TEST_CASE("max of two unit exponentials: closed point value and F^n cdf") {
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    OrderStatSpec max2(2, 2);
    const double e1 = std::exp(-1.0);
    CHECK(rel_diff(order_stat_pdf(expo, max2, 1.0), 2.0 * (1.0 - e1) * e1) < 1e-12);
    OrderStatSpec max3(3, 3);
    for (double y : {0.2, 1.0, 2.5})
        CHECK(rel_diff(order_stat_cdf(expo, max3, y), std::pow(cdf(expo, y), 3.0)) < 1e-12);
}

TEST_CASE("closed form equals the generic Beta-weighted composition") {
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 2.0, 0.7, 0.3),
                               EwgParams(1.5, 1.0, 1.0, 0.8)})
        for (int n : {2, 5})
            for (int r = 1; r <= n; ++r) {
                OrderStatSpec s(n, r);
                for (double prob : {0.05, 0.3, 0.7, 0.95}) {
                    const double y = quantile(p, prob);
                    const double F = cdf(p, y);
                    const double generic = pdf(p, y) * std::pow(F, r - 1.0) *
                                           std::pow(1.0 - F, static_cast<double>(n - r)) /
                                           std::exp(ln_beta(r, n - r + 1));
                    CHECK(rel_diff(order_stat_pdf(p, s, y), generic) < 1e-12);
                }
            }
}

TEST_CASE("cdf of the 2nd of 4 against simulated order statistics") {
    EwgParams p(1.5, 1.0, 0.8, 0.3);
    OrderStatSpec s(4, 2);
    constexpr std::size_t reps = 100000;
    const auto draws = sample(p, SampleSpec{4 * reps, 5150, SampleMethod::inversion});
    std::vector<double> second(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        std::array<double, 4> block{draws[4 * i], draws[4 * i + 1], draws[4 * i + 2],
                                    draws[4 * i + 3]};
        std::sort(block.begin(), block.end());
        second[i] = block[1];
    }
    const double d =
        ewg::test::ks_statistic(second, [&](double y) { return order_stat_cdf(p, s, y); });
    CHECK(d * std::sqrt(static_cast<double>(reps)) < kKsCritical01);
}

TEST_CASE("exponential expectations: E max(2) = 1.5, E min(2) = 0.5") {
    SeriesControl ctrl;
    EwgParams expo(1.0, 1.0, 1.0, 0.0);
    CHECK(rel_diff(order_stat_moment(expo, OrderStatSpec(1, 1), 1, ctrl).value, 1.0) < 1e-10);
    CHECK(rel_diff(order_stat_moment(expo, OrderStatSpec(2, 2), 1, ctrl).value, 1.5) < 1e-10);
    CHECK(rel_diff(order_stat_moment(expo, OrderStatSpec(2, 1), 1, ctrl).value, 0.5) < 1e-10);
    CHECK(rel_diff(order_stat_moment_quadrature(expo, OrderStatSpec(2, 2), 1).value, 1.5) < 1e-8);
}

TEST_CASE("triple series matches quadrature for n <= 5, theta <= 0.8") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 1.0, 0.7, 0.8),
                               EwgParams(1.0, 2.0, 1.0, 0.3), EwgParams(5.0, 0.5, 3.0, 0.8)})
        for (int n : {1, 3, 5})
            for (int r = 1; r <= n; r += 2)
                for (int k : {1, 2}) {
                    OrderStatSpec s(n, r);
                    const double series = order_stat_moment(p, s, k, ctrl).value;
                    const double quad = order_stat_moment_quadrature(p, s, k).value;
                    CHECK(rel_diff(series, quad) < 1e-4);
                }
}

TEST_CASE("moments are nondecreasing in rank") {
    SeriesControl ctrl;
    EwgParams p(2.0, 1.0, 1.5, 0.4);
    for (int k : {1, 2}) {
        double prev = 0.0;
        for (int r = 1; r <= 4; ++r) {
            const double m = order_stat_moment(p, OrderStatSpec(4, r), k, ctrl).value;
            CHECK(m >= prev);
            prev = m;
        }
    }
}

TEST_CASE("rank-mixture identities") {
    SeriesControl ctrl;
    for (const EwgParams& p : {EwgParams(2.0, 1.0, 2.0, 0.5), EwgParams(0.5, 2.0, 0.7, 0.3)}) {
        for (int n : {2, 4}) {
            SUBCASE("densities average to the parent") {
                for (double prob : {0.1, 0.5, 0.9}) {
                    const double y = quantile(p, prob);
                    double sum = 0.0;
                    for (int r = 1; r <= n; ++r)
                        sum += order_stat_pdf(p, OrderStatSpec(n, r), y);
                    CHECK(rel_diff(sum / n, pdf(p, y)) < 1e-10);
                }
            }
            SUBCASE("expectations add to n E(Y)") {
                double sum = 0.0;
                for (int r = 1; r <= n; ++r)
                    sum += order_stat_moment(p, OrderStatSpec(n, r), 1, ctrl).value;
                CHECK(rel_diff(sum, n * raw_moment_quadrature(p, 1).value) < 1e-6);
            }
        }
    }
}

} // TEST_SUITE
