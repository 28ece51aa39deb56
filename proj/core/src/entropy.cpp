#include "ewg/entropy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"
#include "ewg/errors.hpp"
#include "ewg/quadrature.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

std::string to_string(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::closed_series: return "closed_series";
        case EntropyMethod::quadrature: return "quadrature";
        case EntropyMethod::limit: return "limit";
    }
    return "quadrature";
}

namespace {

void check_order(double r) {
    if (!(r > 0.0) || r == 1.0)
        throw std::domain_error("renyi_entropy: order r must be positive and != 1");
}

// integral of f^r over (0, inf) by quadrature; DivergenceError when infinite.
double integral_f_pow_r(const EwgParams& p, double r) {
    QuadratureOptions opts;
    opts.rel_tol = 1e-11;
    QuadratureResult q = detail::logspace_density_integral(
        p,
        [&](double y, double lp) {
            return detail::exp_or_zero(r * lp + std::log(y));
        },
        0.0, opts);
    return q.value;
}

} // namespace

EntropyResult renyi_entropy(const EwgParams& p, double r, const SeriesControl& ctrl) {
    check_order(r);
    const double S = r - (r - 1.0) / p.gamma_shape;
    if (!(S > 0.0)) {
        std::ostringstream msg;
        msg << "renyi_entropy: series gamma argument r-(r-1)/gamma = " << S
            << " is not positive for gamma = " << p.gamma_shape << ", r = " << r
            << "; use the quadrature engine";
        throw std::domain_error(msg.str());
    }
    // sum_j theta^j Gamma(2r+j)/(Gamma(2r) j!) sum_k (-1)^k C(a(j+r)-r, k) Gamma(S)/(k+r)^S
    const double log2r = ln_gamma(2.0 * r);
    SeriesAccumulator acc(ctrl);
    for (long j = 0; acc.want_more(); ++j) {
        const double A = p.alpha * (static_cast<double>(j) + r) - r;
        const double inner = weibull_series_kernel(A, S, r, 0.0, ctrl);
        const double log_weight = static_cast<double>(j) * std::log(p.theta == 0.0 ? 1.0 : p.theta) +
                                  ln_gamma(2.0 * r + j) - log2r - ln_gamma(j + 1.0);
        const double weight = (p.theta == 0.0 && j > 0) ? 0.0 : std::exp(log_weight);
        acc.add(weight * inner);
        if (p.theta == 0.0) break;
    }
    if (p.theta != 0.0 && !acc.converged())
        throw SeriesTruncationError("renyi_entropy: series hit max_terms", acc.sum(), acc.terms());
    const double log_integral = r * std::log(p.alpha * (1.0 - p.theta)) +
                                (r - 1.0) * std::log(p.beta * p.gamma_shape) +
                                std::log(acc.sum());
    EntropyResult res;
    res.value = log_integral / (1.0 - r);
    res.method = EntropyMethod::closed_series;
    res.terms_used = acc.terms();
    return res;
}

EntropyResult renyi_entropy_quadrature(const EwgParams& p, double r) {
    check_order(r);
    EntropyResult res;
    res.value = std::log(integral_f_pow_r(p, r)) / (1.0 - r);
    res.method = EntropyMethod::quadrature;
    return res;
}

EntropyResult shannon_entropy(const EwgParams& p, const SeriesControl&) {
    QuadratureOptions opts;
    opts.rel_tol = 1e-11;
    opts.abs_tol = 1e-13; // the entropy itself can be arbitrarily close to zero
    QuadratureResult q = detail::logspace_density_integral(
        p,
        [&](double y, double lp) {
            const double mass = detail::exp_or_zero(lp + std::log(y));
            return mass == 0.0 ? 0.0 : -lp * mass;
        },
        0.0, opts);
    if (!q.converged)
        throw QuadratureError("shannon_entropy: tolerance not reached", q.value, q.error_estimate);
    EntropyResult res;
    res.value = q.value;
    res.method = EntropyMethod::quadrature;
    return res;
}

EntropyResult shannon_entropy_via_limit(const EwgParams& p, double h) {
    const double lo = renyi_entropy_quadrature(p, 1.0 - h).value;
    const double hi = renyi_entropy_quadrature(p, 1.0 + h).value;
    EntropyResult res;
    res.value = 0.5 * (lo + hi);
    res.method = EntropyMethod::limit;
    return res;
}

} // namespace ewg
