#include "ewg/order_statistics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"
#include "ewg/errors.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

OrderStatSpec::OrderStatSpec(int n_, int r_) : n(n_), r(r_) {
    if (n < 1) throw std::domain_error("OrderStatSpec: n must be >= 1");
    if (r < 1 || r > n) throw std::domain_error("OrderStatSpec: need 1 <= r <= n");
}

namespace {

double order_stat_log_pdf(const EwgParams& p, const OrderStatSpec& s, double y) {
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    // skip the (n-r) log(1-E^a) factor for the maximum, where 1-E^a may be 0
    const double tail_term =
        s.n > s.r ? (s.n - s.r) *
                        (k.one_minus_ea > 0.0 ? std::log(k.one_minus_ea)
                                              : -std::numeric_limits<double>::infinity())
                  : 0.0;
    return std::log(p.alpha) + std::log(p.gamma_shape) + p.gamma_shape * std::log(p.beta) +
           s.r * std::log1p(-p.theta) - ln_beta(s.r, s.n - s.r + 1) +
           (p.gamma_shape - 1.0) * std::log(y) - k.u +
           (p.alpha * s.r - 1.0) * k.log_e + tail_term -
           (s.n + 1.0) * std::log(k.denom);
}

} // namespace

double order_stat_pdf(const EwgParams& p, const OrderStatSpec& s, double y) {
    if (!(y >= 0.0)) throw std::domain_error("order_stat_pdf: y must be >= 0");
    if (y == 0.0) {
        // Leading behavior ~ y^{gamma alpha r - 1}; same limit policy as pdf.
        const double c = p.gamma_shape * p.alpha * s.r;
        if (c > 1.0) return 0.0;
        const double prefactor = std::exp(s.r * std::log1p(-p.theta) - ln_beta(s.r, s.n - s.r + 1));
        if (c == 1.0) return prefactor * p.alpha * p.gamma_shape * p.beta;
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(order_stat_log_pdf(p, s, y));
}

double order_stat_cdf(const EwgParams& p, const OrderStatSpec& s, double y) {
    if (!(y >= 0.0)) throw std::domain_error("order_stat_cdf: y must be >= 0");
    if (y == 0.0) return 0.0;
    const double F = cdf(p, y);
    const double Sv = survival(p, y);
    const double logF = std::log(F);
    const double logS = Sv > 0.0 ? std::log(Sv) : -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = s.r; k <= s.n; ++k) {
        const double log_choose = ln_gamma(s.n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(s.n - k + 1.0);
        const double log_term = log_choose + k * logF + (k < s.n ? (s.n - k) * logS : 0.0);
        sum += log_term < -745.0 ? 0.0 : std::exp(log_term);
    }
    return std::min(sum, 1.0);
}

MomentResult order_stat_moment(const EwgParams& p, const OrderStatSpec& s, int k,
                               const SeriesControl& ctrl) {
    if (k < 1) throw std::domain_error("order_stat_moment: k must be >= 1");
    const double Sgam = static_cast<double>(k) / p.gamma_shape + 1.0;
    const double log_prefactor = std::log(p.alpha) - k * std::log(p.beta) +
                                 s.r * std::log1p(-p.theta) - ln_beta(s.r, s.n - s.r + 1);
    const double prefactor = std::exp(log_prefactor);
    SeriesAccumulator outer(ctrl);
    for (long i = 0; outer.want_more(); ++i) {
        // theta^i C(n+i, i), assembled in log space so large i cannot overflow
        const double log_weight = (p.theta > 0.0 ? i * std::log(p.theta) : 0.0) +
                                  ln_gamma(s.n + i + 1.0) - ln_gamma(i + 1.0) -
                                  ln_gamma(s.n + 1.0);
        double block = 0.0;
        double choose = 1.0; // C(n-r, j)
        for (long j = 0; j <= s.n - s.r; ++j) {
            const double A = p.alpha * static_cast<double>(i + j + s.r) - 1.0;
            const double inner = weibull_series_kernel(A, Sgam, 1.0, 0.0, ctrl);
            block += (j % 2 == 0 ? 1.0 : -1.0) * choose * inner;
            choose *= static_cast<double>(s.n - s.r - j) / static_cast<double>(j + 1);
        }
        outer.add(prefactor * std::exp(log_weight) * block);
        if (p.theta == 0.0) break;
    }
    if (p.theta != 0.0 && !outer.converged())
        throw SeriesTruncationError("order_stat_moment: i-series hit max_terms", outer.sum(),
                                    outer.terms());
    MomentResult r;
    r.value = outer.sum();
    r.terms_used = outer.terms();
    r.truncation_estimate =
        p.theta == 0.0 ? 0.0 : std::abs(outer.last_term()) * p.theta / (1.0 - p.theta);
    r.engine = MomentEngine::series;
    return r;
}

MomentResult order_stat_moment_quadrature(const EwgParams& p, const OrderStatSpec& s, int k) {
    if (k < 1) throw std::domain_error("order_stat_moment_quadrature: k must be >= 1");
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    QuadratureResult q = detail::logspace_density_integral(
        p,
        [&](double y, double /*lp of the parent; the order statistic has its own*/) {
            const double lp = order_stat_log_pdf(p, s, y);
            return detail::exp_or_zero(lp + (k + 1.0) * std::log(y));
        },
        0.0, opts);
    if (!q.converged)
        throw QuadratureError("order_stat_moment_quadrature: tolerance not reached", q.value,
                              q.error_estimate);
    MomentResult r;
    r.value = q.value;
    r.terms_used = q.evaluations;
    r.truncation_estimate = q.error_estimate;
    r.engine = MomentEngine::quadrature;
    return r;
}

} // namespace ewg
