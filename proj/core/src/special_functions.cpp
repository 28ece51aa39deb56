#include "ewg/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ewg/errors.hpp"
#include "ewg/quadrature.hpp"

namespace ewg {

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be > 0");
    return std::lgamma(x); // glibc lgamma is < 2 ulp for positive arguments
}

namespace {

// Regularized lower gamma P(s,t) by the power series, valid for t < s+1.
double reg_lower_series(double s, double t) {
    const double log_prefactor = s * std::log(t) - t - std::lgamma(s);
    if (log_prefactor < -745.0) return t < s ? 0.0 : 1.0;
    double term = 1.0 / s;
    double sum = term;
    double denom = s;
    for (int k = 0; k < 500; ++k) {
        denom += 1.0;
        term *= t / denom;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(log_prefactor);
}

// Regularized upper gamma Q(s,t) by the continued fraction (modified Lentz),
// valid for t >= s+1.
double reg_upper_cf(double s, double t) {
    const double log_prefactor = s * std::log(t) - t - std::lgamma(s);
    if (log_prefactor < -745.0) return 0.0;
    const double tiny = 1e-300;
    double b = t + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(log_prefactor) * h;
}

} // namespace

double regularized_upper_gamma(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("regularized_upper_gamma: s must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("regularized_upper_gamma: t must be >= 0");
    if (t == 0.0) return 1.0;
    if (t < s + 1.0) return 1.0 - reg_lower_series(s, t);
    return reg_upper_cf(s, t);
}

double upper_incomplete_gamma(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("upper_incomplete_gamma: s must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("upper_incomplete_gamma: t must be >= 0");
    return regularized_upper_gamma(s, t) * std::exp(std::lgamma(s));
}

double lower_incomplete_gamma(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("lower_incomplete_gamma: s must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("lower_incomplete_gamma: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (t < s + 1.0) return reg_lower_series(s, t) * std::exp(std::lgamma(s));
    return (1.0 - reg_upper_cf(s, t)) * std::exp(std::lgamma(s));
}

double generalized_binomial(double a, long j) {
    if (j < 0) throw std::domain_error("generalized_binomial: j must be >= 0");
    double c = 1.0;
    for (long i = 0; i < j; ++i) {
        c *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
        if (c == 0.0) return 0.0; // a is a nonnegative integer < j
    }
    return c;
}

double ln_beta(double a, double b) {
    return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p must be in (0,1)");
    // Acklam's rational approximation, then one Halley step against erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00, 2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley refinement: e = Phi(x) - p.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

namespace {

// Integrand of the kernel identity: tau^{S-1} e^{-rho tau} (1-e^{-tau})^A,
// evaluated in log space so huge A and tiny tau cannot overflow.
double kernel_integrand(double tau, double A, double S, double rho) {
    if (tau <= 0.0) return 0.0;
    const double log_one_minus = (tau > 1e-8) ? std::log(-std::expm1(-tau)) : std::log(tau) - 0.5 * tau;
    const double lv = (S - 1.0) * std::log(tau) - rho * tau + A * log_one_minus;
    return lv < -745.0 ? 0.0 : std::exp(lv);
}

double kernel_by_integral(double A, double S, double rho, double w) {
    // Peak of the integrand sits near max(S-1, log(1+A))/rho-ish; lay
    // breakpoints around it and extend the tail adaptively.
    const double tau_peak = std::max({(S - 1.0) / std::max(rho, 1e-12),
                                      std::log1p(std::max(A, 0.0)), 1.0});
    QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    auto f = [&](double tau) { return kernel_integrand(tau, A, S, rho); };

    double head = 0.0;
    double lo = w;
    const double c = S + A; // integrand behaves like tau^{c-1} at the origin
    if (c < 1.0 && w < 1e-6) {
        // Integrable tau^{c-1} head: substitute v = tau^c, under which
        // tau^{S-1}(1-e^{-tau})^A dtau = (1/c) e^{-rho tau} ((1-e^{-tau})/tau)^A dv
        // with tau = v^{1/c} -- bounded all the way to v = 0.
        const double eps_head = std::min(0.5, 0.25 * tau_peak);
        auto transformed = [&](double v) {
            if (v <= 0.0) return 0.0;
            const double tau = std::pow(v, 1.0 / c);
            const double log_one_minus =
                (tau > 1e-8) ? std::log(-std::expm1(-tau)) : std::log(tau) - 0.5 * tau;
            const double lv = -rho * tau + A * (log_one_minus - std::log(tau));
            return (lv < -745.0 ? 0.0 : std::exp(lv)) / c;
        };
        const double v_lo = std::pow(w, c);
        const double v_hi = std::pow(eps_head, c);
        if (v_hi > v_lo) {
            QuadratureResult r = integrate(transformed, v_lo, v_hi, opts);
            head = r.value;
            lo = eps_head;
        }
    }

    std::vector<double> breaks{lo};
    for (double m : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double x = tau_peak * m;
        if (x > breaks.back()) breaks.push_back(x);
    }
    const double far = breaks.back();
    QuadratureResult mid = breaks.size() > 1 ? integrate(f, breaks, opts)
                                             : QuadratureResult{0.0, 0.0, 0, true};
    QuadratureOptions tail_opts = opts;
    tail_opts.abs_tol = std::max(1e-300, 1e-15 * std::abs(head + mid.value));
    QuadratureResult tail = integrate_to_infinity(f, far, tail_opts);
    return head + mid.value + tail.value;
}

} // namespace

double weibull_series_kernel(double A, double S, double rho, double w,
                             const SeriesControl& ctrl) {
    if (!(S > 0.0)) throw std::domain_error("weibull_series_kernel: S must be > 0");
    if (!(rho > 0.0)) throw std::domain_error("weibull_series_kernel: rho must be > 0");
    if (!(w >= 0.0)) throw std::domain_error("weibull_series_kernel: w must be >= 0");
    if (w == 0.0 && A + S <= 0.0)
        throw DivergenceError("weibull_series_kernel: integral diverges at the origin (A + S <= 0)");

    const double rounded = std::round(A);
    const bool integral_A = std::abs(A - rounded) <= 1e-9 * std::max(1.0, std::abs(A));
    if (integral_A && rounded >= 0.0 && rounded <= 25.0) {
        // Finite alternating sum; cancellation is bounded by C(25,12) ~ 5e6.
        const long m = static_cast<long>(rounded);
        SeriesAccumulator acc(ctrl);
        double binom = 1.0;
        for (long k = 0; k <= m; ++k) {
            const double kr = static_cast<double>(k) + rho;
            const double gamma_factor =
                (w == 0.0) ? std::exp(ln_gamma(S)) : upper_incomplete_gamma(S, kr * w);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            acc.add(sign * binom * std::pow(kr, -S) * gamma_factor);
            binom *= (rounded - static_cast<double>(k)) / static_cast<double>(k + 1);
        }
        return acc.sum();
    }
    return kernel_by_integral(A, S, rho, w);
}

} // namespace ewg
