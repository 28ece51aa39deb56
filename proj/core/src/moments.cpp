#include "ewg/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "ewg/errors.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

std::string to_string(MomentEngine e) {
    return e == MomentEngine::series ? "series" : "quadrature";
}

namespace detail {

QuadratureResult logspace_density_integral(
    const EwgParams& p, const std::function<double(double, double)>& integrand,
    double y_lo, const QuadratureOptions& opts) {
    auto g = [&](double x) {
        const double y = std::exp(x);
        return integrand(y, log_pdf(p, y));
    };

    static const double probs[] = {1e-8, 1e-4, 1e-2, 0.1, 0.3, 0.5,
                                   0.7, 0.9, 0.99, 1.0 - 1e-4, 1.0 - 1e-8};
    std::vector<double> xs;
    if (y_lo > 0.0) xs.push_back(std::log(y_lo));
    for (double pr : probs) {
        const double x = std::log(quantile(p, pr));
        if (xs.empty() || x > xs.back() + 1e-12) xs.push_back(x);
    }
    if (xs.size() < 2) xs.push_back(xs.back() + 1.0);

    QuadratureResult total = integrate(g, xs, opts);

    // Tail: the integrand decays double-exponentially in x.
    QuadratureOptions tail_opts = opts;
    tail_opts.abs_tol = std::max(tail_opts.abs_tol, 1e-15 * std::abs(total.value)) + 1e-300;
    QuadratureResult tail = integrate_to_infinity(g, xs.back(), tail_opts);
    total.value += tail.value;
    total.error_estimate += tail.error_estimate;
    total.evaluations += tail.evaluations;
    total.converged = total.converged && tail.converged;

    if (y_lo <= 0.0) {
        // Head: panels descending from the smallest breakpoint until the
        // contributions die out (exponential in x for any convergent case).
        // Non-decaying panels signal a non-integrable (or log-divergent)
        // origin.
        double x_hi = xs.front();
        double prev = std::numeric_limits<double>::infinity();
        int quiet = 0, not_decaying = 0;
        for (int panel = 0; panel < 60; ++panel) {
            QuadratureResult piece = integrate(g, x_hi - 30.0, x_hi, opts);
            total.value += piece.value;
            total.error_estimate += piece.error_estimate;
            total.evaluations += piece.evaluations;
            const double contrib = std::abs(piece.value);
            const double floor =
                std::max(opts.abs_tol, 0.01 * opts.rel_tol * std::abs(total.value)) + 1e-300;
            if (contrib <= floor) {
                if (++quiet >= 2) return total;
            } else {
                quiet = 0;
            }
            not_decaying = contrib > 0.9 * prev ? not_decaying + 1 : 0;
            if (not_decaying >= 8 || !std::isfinite(total.value))
                throw DivergenceError("logspace_density_integral: diverges at the origin");
            prev = contrib;
            x_hi -= 30.0;
        }
        throw QuadratureError("logspace_density_integral: head did not settle", total.value,
                              total.error_estimate);
    }
    return total;
}

} // namespace detail

QuadratureResult density_expectation(const EwgParams& p, const std::function<double(double)>& g,
                                     double y_lo, const QuadratureOptions& opts) {
    return detail::logspace_density_integral(
        p,
        [&](double y, double lp) {
            const double mass = detail::exp_or_zero(lp + std::log(y));
            return mass == 0.0 ? 0.0 : g(y) * mass;
        },
        y_lo, opts);
}

MomentResult raw_moment_series(const EwgParams& p, int k, const SeriesControl& ctrl) {
    if (k < 1) throw std::domain_error("raw_moment_series: k must be >= 1");
    const double s = static_cast<double>(k) / p.gamma_shape + 1.0;
    const double prefactor = (1.0 - p.theta) * p.alpha * std::pow(p.beta, -k);
    SeriesAccumulator acc(ctrl);
    double weight = 1.0; // theta^{n-1}
    for (long n = 1; acc.want_more(); ++n) {
        const double inner =
            weibull_series_kernel(static_cast<double>(n) * p.alpha - 1.0, s, 1.0, 0.0, ctrl);
        acc.add(prefactor * static_cast<double>(n) * weight * inner);
        if (p.theta == 0.0) break; // only n = 1 contributes
        weight *= p.theta;
    }
    if (p.theta != 0.0 && !acc.converged())
        throw SeriesTruncationError("raw_moment_series: outer sum hit max_terms", acc.sum(),
                                    acc.terms());
    MomentResult r;
    r.value = acc.sum();
    r.terms_used = acc.terms();
    r.truncation_estimate =
        p.theta == 0.0 ? 0.0 : std::abs(acc.last_term()) * p.theta / (1.0 - p.theta);
    r.engine = MomentEngine::series;
    return r;
}

MomentResult raw_moment_quadrature(const EwgParams& p, int k) {
    if (k < 1) throw std::domain_error("raw_moment_quadrature: k must be >= 1");
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    QuadratureResult q = detail::logspace_density_integral(
        p,
        [&](double y, double lp) {
            return detail::exp_or_zero(lp + (k + 1.0) * std::log(y));
        },
        0.0, opts);
    if (!q.converged)
        throw QuadratureError("raw_moment_quadrature: tolerance not reached", q.value,
                              q.error_estimate);
    MomentResult r;
    r.value = q.value;
    r.terms_used = q.evaluations;
    r.truncation_estimate = q.error_estimate;
    r.engine = MomentEngine::quadrature;
    return r;
}

double mean(const EwgParams& p, const SeriesControl&) {
    return raw_moment_quadrature(p, 1).value;
}

double variance(const EwgParams& p, const SeriesControl& ctrl) {
    const double m1 = mean(p, ctrl);
    const double m2 = raw_moment_quadrature(p, 2).value;
    return std::max(0.0, m2 - m1 * m1);
}

double mgf(const EwgParams& p, double t, const SeriesControl& ctrl) {
    if (t == 0.0) return 1.0;
    if (p.gamma_shape < 1.0 && t > 0.0)
        throw std::domain_error(
            "mgf: diverges for all t > 0 when gamma < 1 (tail heavier than exponential)");
    SeriesAccumulator acc(ctrl);
    acc.add(1.0); // i = 0 term
    double prev_abs = 1.0;
    int growth_streak = 0;
    for (int i = 1; acc.want_more(); ++i) {
        const double moment = raw_moment_series(p, i, ctrl).value;
        const double log_scale = i * std::log(std::abs(t)) - ln_gamma(i + 1.0);
        const double sign = (t < 0.0 && i % 2 == 1) ? -1.0 : 1.0;
        const double term = sign * std::exp(log_scale) * moment;
        if (!std::isfinite(term))
            throw DivergenceError("mgf: series terms are no longer representable");
        acc.add(term);
        growth_streak = (std::abs(term) > prev_abs && i > 5) ? growth_streak + 1 : 0;
        if (growth_streak >= 8) throw DivergenceError("mgf: series terms are growing");
        prev_abs = std::abs(term);
    }
    if (!acc.converged())
        throw SeriesTruncationError("mgf: series hit max_terms", acc.sum(), acc.terms());
    return acc.sum();
}

} // namespace ewg
