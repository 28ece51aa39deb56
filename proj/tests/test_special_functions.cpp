#include <doctest.h>

#include <cmath>
#include <random>

#include "ewg/errors.hpp"
#include "ewg/special_functions.hpp"
#include "support.hpp"

using namespace ewg;
using ewg::test::adaptive_simpson;
using ewg::test::rel_diff;

TEST_SUITE("special_functions") {

TEST_CASE("ln_gamma known values") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-13));
    // log sqrt(pi)
    CHECK(rel_diff(ln_gamma(0.5), 0.57236494292470009) < 1e-13);
    CHECK(rel_diff(ln_gamma(10.0), std::log(362880.0)) < 1e-13);
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-3.2), std::domain_error);
}

TEST_CASE("upper incomplete gamma against the defining integral") {
    // exponential tail for s = 1
    for (double t : {0.0, 0.4, 2.0, 11.0})
        CHECK(rel_diff(upper_incomplete_gamma(1.0, t), std::exp(-t)) < 1e-13);
    // full integral at t = 0
    CHECK(rel_diff(upper_incomplete_gamma(3.5, 0.0), std::exp(ln_gamma(3.5))) < 1e-13);
    // frozen independent high-precision value
    CHECK(rel_diff(upper_incomplete_gamma(2.5, 1.3), 1.0121136007032034) < 1e-12);
    // in-test quadrature oracle of the defining integral (truncated far tail)
    const double oracle = adaptive_simpson(
        [](double x) { return std::pow(x, 1.5) * std::exp(-x); }, 1.3, 60.0, 1e-14);
    CHECK(rel_diff(upper_incomplete_gamma(2.5, 1.3), oracle) < 1e-12);
    CHECK_THROWS_AS(upper_incomplete_gamma(-1.0, 2.0), std::domain_error);
}

TEST_CASE("lower incomplete gamma") {
    for (double t : {0.1, 1.0, 7.0})
        CHECK(rel_diff(lower_incomplete_gamma(1.0, t), -std::expm1(-t)) < 1e-13);
    CHECK(lower_incomplete_gamma(4.2, 0.0) == 0.0);
    CHECK(rel_diff(lower_incomplete_gamma(3.0, 2.0), 0.64664716763387308) < 1e-12);
    const double oracle =
        adaptive_simpson([](double x) { return x * x * std::exp(-x); }, 0.0, 2.0, 1e-14);
    CHECK(rel_diff(lower_incomplete_gamma(3.0, 2.0), oracle) < 1e-12);
    CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), std::domain_error);
}

TEST_CASE("upper + lower = complete over a wide sweep") {
    for (double s : {0.2, 0.7, 1.0, 2.5, 8.0, 20.0, 50.0}) {
        const double gamma_s = std::exp(ln_gamma(s));
        for (double t : {0.0, 1e-6, 0.3, 1.0, 4.0, 15.0, 60.0, 100.0}) {
            const double sum = upper_incomplete_gamma(s, t) + lower_incomplete_gamma(s, t);
            CHECK(rel_diff(sum, gamma_s) < 1e-12);
        }
    }
}

TEST_CASE("recurrence Gamma^t(s+1) = s Gamma^t(s) + t^s e^{-t}") {
    for (double s : {0.5, 1.3, 4.0, 12.0})
        for (double t : {0.0, 0.2, 1.0, 5.0, 22.0}) {
            const double lhs = upper_incomplete_gamma(s + 1.0, t);
            const double rhs =
                s * upper_incomplete_gamma(s, t) + (t > 0.0 ? std::pow(t, s) * std::exp(-t) : 0.0);
            CHECK(rel_diff(lhs, rhs) < 1e-10);
        }
}

TEST_CASE("generalized binomial") {
    CHECK(generalized_binomial(3.0, 2) == doctest::Approx(3.0));
    CHECK(generalized_binomial(0.5, 2) == doctest::Approx(-0.125));
    for (double a : {-2.5, 0.0, 0.31, 7.0, 100.0}) CHECK(generalized_binomial(a, 0) == 1.0);

    SUBCASE("matches factorials for integer arguments up to 20") {
        for (long a = 0; a <= 20; ++a) {
            double fact_a = 1.0;
            for (long i = 2; i <= a; ++i) fact_a *= i;
            for (long j = 0; j <= a; ++j) {
                double fj = 1.0, faj = 1.0;
                for (long i = 2; i <= j; ++i) fj *= i;
                for (long i = 2; i <= a - j; ++i) faj *= i;
                CHECK(generalized_binomial(static_cast<double>(a), j) ==
                      doctest::Approx(fact_a / (fj * faj)).epsilon(1e-12));
            }
        }
    }
    SUBCASE("exactly zero past an integer upper argument") {
        CHECK(generalized_binomial(3.0, 5) == 0.0);
        CHECK(generalized_binomial(0.0, 1) == 0.0);
        CHECK(generalized_binomial(17.0, 18) == 0.0);
    }
    CHECK_THROWS_AS(generalized_binomial(2.0, -1), std::domain_error);
}

TEST_CASE("normal quantile") {
    CHECK(rel_diff(normal_quantile(0.975), 1.9599639845400542) < 1e-12);
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(normal_quantile(0.3) == doctest::Approx(-normal_quantile(0.7)).epsilon(1e-12));
    // round trip through erfc
    for (double p : {1e-6, 0.01, 0.2, 0.5, 0.77, 0.999}) {
        const double z = normal_quantile(p);
        CHECK(rel_diff(0.5 * std::erfc(-z / std::sqrt(2.0)), p) < 1e-12);
    }
    CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
}

TEST_CASE("weibull_series_kernel equals the direct alternating sum where that is stable") {
    SeriesControl ctrl;
    // small integer A: both routes available, must agree tightly
    for (double A : {0.0, 1.0, 3.0, 12.0})
        for (double S : {1.5, 2.0, 3.7})
            for (double w : {0.0, 0.5, 2.0}) {
                const double lib = weibull_series_kernel(A, S, 1.0, w, ctrl);
                double direct = 0.0;
                for (long k = 0; k <= static_cast<long>(A); ++k)
                    direct += (k % 2 == 0 ? 1.0 : -1.0) * generalized_binomial(A, k) *
                              std::pow(k + 1.0, -S) *
                              (w == 0.0 ? std::exp(ln_gamma(S))
                                        : upper_incomplete_gamma(S, (k + 1.0) * w));
                CHECK(rel_diff(lib, direct) < 1e-11);
            }
}

TEST_CASE("weibull_series_kernel integral route against Simpson oracle") {
    SeriesControl ctrl;
    // non-integer and large A exercise the integral representation
    struct Case { double A, S, rho, w; };
    for (const Case c : {Case{-0.5, 3.0, 1.0, 0.0}, Case{-1.5, 2.0, 1.0, 0.0},
                         Case{0.7, 1.4, 1.0, 0.0}, Case{37.2, 2.0, 1.0, 0.0},
                         Case{400.0, 1.5, 1.0, 0.0}, Case{5.5, 2.5, 2.0, 0.0},
                         Case{12.3, 1.8, 1.0, 0.8}}) {
        const double lib = weibull_series_kernel(c.A, c.S, c.rho, c.w, ctrl);
        auto f = [&](double tau) {
            if (tau <= 0.0) return 0.0;
            return std::exp((c.S - 1.0) * std::log(tau) - c.rho * tau +
                            c.A * std::log(-std::expm1(-tau)));
        };
        const double lo = std::max(c.w, 1e-12);
        double oracle = adaptive_simpson(f, lo, 60.0 + 2.0 * std::log1p(c.A > 0 ? c.A : 0.0), 1e-13);
        const double head_exp = c.A + c.S; // integrand ~ tau^{head_exp - 1} at 0
        if (c.w == 0.0 && head_exp < 1.0)
            oracle += std::pow(lo, head_exp) / head_exp; // truncated singular head
        CHECK(rel_diff(lib, oracle) < 1e-8);
    }
    CHECK_THROWS_AS(weibull_series_kernel(2.0, -1.0, 1.0, 0.0, ctrl), std::domain_error);
    CHECK_THROWS_AS(weibull_series_kernel(-0.5, 0.4, 1.0, 0.0, ctrl), DivergenceError);
}

} // TEST_SUITE
