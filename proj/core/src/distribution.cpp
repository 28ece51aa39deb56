#include "ewg/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "ewg/errors.hpp"

namespace ewg {

namespace detail {

DistKernel eval_dist_kernel(const EwgParams& p, double y) {
    DistKernel k;
    k.u = std::pow(p.beta * y, p.gamma_shape);
    // If (beta y)^gamma underflows, fall back to log E ~ gamma log(beta y).
    k.log_e = k.u > 0.0 ? log1mexp(k.u)
                        : p.gamma_shape * std::log(p.beta * y);
    k.one_minus_ea = -std::expm1(p.alpha * k.log_e);
    k.denom = (1.0 - p.theta) + p.theta * k.one_minus_ea;
    return k;
}

} // namespace detail

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::log1mexp;

void require_nonnegative(double y, const char* who) {
    if (!(y >= 0.0)) throw std::domain_error(std::string(who) + ": y must be >= 0");
}

} // namespace

EwgParams::EwgParams(double alpha_, double beta_, double gamma_shape_, double theta_)
    : alpha(alpha_), beta(beta_), gamma_shape(gamma_shape_), theta(theta_) {
    if (!(std::isfinite(alpha) && alpha > 0.0))
        throw std::domain_error("EwgParams: alpha must be finite and > 0");
    if (!(std::isfinite(beta) && beta > 0.0))
        throw std::domain_error("EwgParams: beta must be finite and > 0");
    if (!(std::isfinite(gamma_shape) && gamma_shape > 0.0))
        throw std::domain_error("EwgParams: gamma must be finite and > 0");
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::domain_error("EwgParams: theta must lie in [0, 1)");
}

double ew_log_pdf(double alpha, double beta, double gamma_shape, double y) {
    if (y <= 0.0) {
        const double c = gamma_shape * alpha;
        if (c > 1.0) return -kInf;
        if (c == 1.0) return std::log(alpha * gamma_shape * std::pow(beta, c));
        return kInf;
    }
    const double u = std::pow(beta * y, gamma_shape);
    const double log_e = u > 0.0 ? log1mexp(u) : gamma_shape * std::log(beta * y);
    return std::log(alpha) + std::log(gamma_shape) + gamma_shape * std::log(beta) +
           (gamma_shape - 1.0) * std::log(y) - u + (alpha - 1.0) * log_e;
}

double ew_pdf(double alpha, double beta, double gamma_shape, double y) {
    return std::exp(ew_log_pdf(alpha, beta, gamma_shape, y));
}

double ew_cdf(double alpha, double beta, double gamma_shape, double y) {
    if (y <= 0.0) return 0.0;
    const double u = std::pow(beta * y, gamma_shape);
    const double log_e = u > 0.0 ? log1mexp(u) : gamma_shape * std::log(beta * y);
    return std::exp(alpha * log_e);
}

double ew_quantile(double alpha, double beta, double gamma_shape, double prob) {
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("ew_quantile: prob must be in (0,1)");
    const double v = std::log(prob) / alpha;   // log E
    const double u = -log1mexp(-v);            // -log(1 - E), stable for v near 0 and -inf
    return std::pow(u, 1.0 / gamma_shape) / beta;
}

double log_pdf(const EwgParams& p, double y) {
    require_nonnegative(y, "pdf");
    if (y == 0.0) {
        const double c = p.gamma_shape * p.alpha;
        if (c > 1.0) return -kInf;
        if (c == 1.0) return std::log((1.0 - p.theta) * p.beta);
        return kInf;
    }
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    return std::log1p(-p.theta) + std::log(p.alpha) + std::log(p.gamma_shape) +
           p.gamma_shape * std::log(p.beta) + (p.gamma_shape - 1.0) * std::log(y) - k.u +
           (p.alpha - 1.0) * k.log_e - 2.0 * std::log(k.denom);
}

double pdf(const EwgParams& p, double y) {
    const double lp = log_pdf(p, y);
    return lp == kInf ? kInf : std::exp(lp);
}

double cdf(const EwgParams& p, double y) {
    require_nonnegative(y, "cdf");
    if (y == 0.0) return 0.0;
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    return (1.0 - p.theta) * std::exp(p.alpha * k.log_e) / k.denom;
}

double survival(const EwgParams& p, double y) {
    require_nonnegative(y, "survival");
    if (y == 0.0) return 1.0;
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    return k.one_minus_ea / k.denom;
}

double log_survival(const EwgParams& p, double y) {
    require_nonnegative(y, "survival");
    if (y == 0.0) return 0.0;
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    // 1 - E^alpha = -expm1(alpha log E); for log-accuracy at large y use
    // log(alpha) - u + O(e^{-u}) territory via log1mexp of the exponent.
    const double ale = p.alpha * k.log_e;
    const double log_one_minus_ea = ale < 0.0 ? log1mexp(-ale) : -kInf;
    return log_one_minus_ea - std::log(k.denom);
}

double hazard(const EwgParams& p, double y) {
    require_nonnegative(y, "hazard");
    if (y == 0.0) return pdf(p, 0.0); // S(0) = 1
    const double lh = log_pdf(p, y) - log_survival(p, y);
    return lh == kInf ? kInf : std::exp(lh);
}

double quantile(const EwgParams& p, double prob) {
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("quantile: prob must be in (0,1)");
    const double w = prob / (1.0 - p.theta * (1.0 - prob)); // E^alpha at the quantile
    const double v = std::log(w) / p.alpha;                 // log E
    const double u = -log1mexp(-v);                         // (beta y)^gamma
    return std::pow(u, 1.0 / p.gamma_shape) / p.beta;
}

double median(const EwgParams& p) { return quantile(p, 0.5); }

double mixture_pdf(const EwgParams& p, double y, const SeriesControl& ctrl) {
    require_nonnegative(y, "mixture_pdf");
    if (y == 0.0) return pdf(p, 0.0);
    if (p.theta == 0.0) return ew_pdf(p.alpha, p.beta, p.gamma_shape, y); // single mixture component
    const detail::DistKernel k = detail::eval_dist_kernel(p, y);
    const double log_base = std::log(p.gamma_shape) + p.gamma_shape * std::log(p.beta) +
                            (p.gamma_shape - 1.0) * std::log(y) - k.u;
    SeriesAccumulator acc(ctrl);
    double log_weight = std::log1p(-p.theta); // log[(1-theta) theta^j]
    for (long j = 0; acc.want_more(); ++j) {
        const double aj = p.alpha * static_cast<double>(j + 1);
        const double log_term = log_weight + std::log(aj) + log_base + (aj - 1.0) * k.log_e;
        acc.add(log_term < -745.0 ? 0.0 : std::exp(log_term));
        log_weight += std::log(p.theta);
    }
    if (!acc.converged())
        throw SeriesTruncationError("mixture_pdf: series did not converge within max_terms",
                                    acc.sum(), acc.terms());
    return acc.sum();
}

std::string to_string(HazardShape s) {
    switch (s) {
        case HazardShape::increasing: return "increasing";
        case HazardShape::decreasing: return "decreasing";
        case HazardShape::bathtub: return "bathtub";
        case HazardShape::unimodal: return "unimodal";
        case HazardShape::other: return "other";
    }
    return "other";
}

HazardShape classify_hazard_shape(const EwgParams& p) {
    constexpr int kPoints = 2048;
    constexpr double kDeadBand = 1e-9;
    const double y_lo = quantile(p, 1e-4);
    const double y_hi = quantile(p, 1.0 - 1e-4);
    const double lx0 = std::log(y_lo), lx1 = std::log(y_hi);

    std::vector<double> h(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        const double x = std::exp(lx0 + (lx1 - lx0) * i / (kPoints - 1));
        h[i] = hazard(p, x);
    }

    std::vector<int> runs; // compressed signs of successive differences
    for (int i = 0; i + 1 < kPoints; ++i) {
        const double d = h[i + 1] - h[i];
        const double scale = std::max(std::abs(h[i]), std::abs(h[i + 1]));
        int s = 0;
        if (std::abs(d) > kDeadBand * scale) s = d > 0.0 ? 1 : -1;
        if (s != 0 && (runs.empty() || runs.back() != s)) runs.push_back(s);
    }

    if (runs.empty()) return HazardShape::other; // numerically constant
    if (runs.size() == 1) return runs[0] > 0 ? HazardShape::increasing : HazardShape::decreasing;
    if (runs.size() == 2 && runs[0] < 0) return HazardShape::bathtub;
    if (runs.size() == 2 && runs[0] > 0) return HazardShape::unimodal;
    return HazardShape::other;
}

} // namespace ewg
