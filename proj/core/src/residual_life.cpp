#include "ewg/residual_life.hpp"

#include <cmath>
#include <stdexcept>

#include "detail.hpp"
#include "ewg/errors.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

ResidualSpec::ResidualSpec(double t_, int r_) : t(t_), r(r_) {
    if (!(t >= 0.0)) throw std::domain_error("ResidualSpec: t must be >= 0");
    if (r < 1) throw std::domain_error("ResidualSpec: r must be >= 1");
}

namespace {

double checked_survival(const EwgParams& p, double t) {
    const double s = survival(p, t);
    if (s < 1e-280)
        throw std::domain_error(
            "residual life: survival underflow at this age; conditioning is meaningless");
    return s;
}

} // namespace

MomentResult residual_moment(const EwgParams& p, const ResidualSpec& spec,
                             const SeriesControl& ctrl) {
    const double St = checked_survival(p, spec.t);
    const double w = std::pow(p.beta * spec.t, p.gamma_shape);
    double total = 0.0;
    long terms = 0;
    double tail_estimate = 0.0;
    double binom_ri = 1.0; // C(r, i)
    for (int i = 0; i <= spec.r; ++i) {
        const double S = 1.0 + static_cast<double>(spec.r - i) / p.gamma_shape;
        SeriesAccumulator acc(ctrl);
        double weight = 1.0; // theta^j
        for (long j = 0; acc.want_more(); ++j) {
            const double A = p.alpha * static_cast<double>(j + 1) - 1.0;
            const double kern = weibull_series_kernel(A, S, 1.0, w, ctrl);
            acc.add(weight * static_cast<double>(j + 1) * kern);
            if (p.theta == 0.0) break;
            weight *= p.theta;
        }
        if (p.theta != 0.0 && !acc.converged())
            throw SeriesTruncationError("residual_moment: j-series hit max_terms",
                                        acc.sum(), acc.terms());
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        total += sign * binom_ri * std::pow(spec.t, i) *
                 std::pow(p.beta, -(spec.r - i)) * acc.sum();
        terms += acc.terms();
        tail_estimate += p.theta == 0.0 ? 0.0 : std::abs(acc.last_term()) * p.theta / (1.0 - p.theta);
        binom_ri *= static_cast<double>(spec.r - i) / static_cast<double>(i + 1);
    }
    MomentResult res;
    res.value = p.alpha * (1.0 - p.theta) * total / St;
    res.terms_used = terms;
    res.truncation_estimate = tail_estimate * p.alpha * (1.0 - p.theta) / St;
    res.engine = MomentEngine::series;
    return res;
}

MomentResult residual_moment_quadrature(const EwgParams& p, const ResidualSpec& spec) {
    const double St = checked_survival(p, spec.t);
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    QuadratureResult q = detail::logspace_density_integral(
        p,
        [&](double y, double lp) {
            const double gap = y - spec.t;
            if (gap <= 0.0) return 0.0;
            const double mass = detail::exp_or_zero(lp + std::log(y));
            return mass == 0.0 ? 0.0 : std::pow(gap, spec.r) * mass;
        },
        spec.t, opts);
    if (!q.converged)
        throw QuadratureError("residual_moment_quadrature: tolerance not reached", q.value,
                              q.error_estimate);
    MomentResult res;
    res.value = q.value / St;
    res.terms_used = q.evaluations;
    res.truncation_estimate = q.error_estimate / St;
    res.engine = MomentEngine::quadrature;
    return res;
}

double mean_residual_life(const EwgParams& p, double t, const SeriesControl& ctrl) {
    if (!(t >= 0.0)) throw std::domain_error("mean_residual_life: t must be >= 0");
    const double St = checked_survival(p, t);
    const double w = std::pow(p.beta * t, p.gamma_shape);
    const double S = 1.0 + 1.0 / p.gamma_shape;
    SeriesAccumulator acc(ctrl);
    double weight = 1.0; // theta^i
    for (long i = 0; acc.want_more(); ++i) {
        const double A = p.alpha * static_cast<double>(i + 1) - 1.0;
        acc.add(weight * static_cast<double>(i + 1) * weibull_series_kernel(A, S, 1.0, w, ctrl));
        if (p.theta == 0.0) break;
        weight *= p.theta;
    }
    if (p.theta != 0.0 && !acc.converged())
        throw SeriesTruncationError("mean_residual_life: series hit max_terms", acc.sum(),
                                    acc.terms());
    return p.alpha * (1.0 - p.theta) * acc.sum() / (p.beta * St) - t;
}

double residual_variance(const EwgParams& p, double t, const SeriesControl&) {
    const double m1 = residual_moment_quadrature(p, ResidualSpec(t, 1)).value;
    const double m2 = residual_moment_quadrature(p, ResidualSpec(t, 2)).value;
    return std::max(0.0, m2 - m1 * m1);
}

} // namespace ewg
