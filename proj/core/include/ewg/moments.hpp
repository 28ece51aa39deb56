#ifndef EWG_MOMENTS_HPP
#define EWG_MOMENTS_HPP

#include <functional>
#include <string>

#include "ewg/distribution.hpp"
#include "ewg/quadrature.hpp"
#include "ewg/series.hpp"

namespace ewg {

enum class MomentEngine { series, quadrature };

std::string to_string(MomentEngine e);

struct MomentResult {
    double value = 0.0;
    long terms_used = 0;
    double truncation_estimate = 0.0; // bound on the omitted tail / quadrature error
    MomentEngine engine = MomentEngine::series;
};

/// E(Y^k) by the double series
///   (1-theta) alpha beta^{-k} Gamma(k/g+1)
///     sum_n sum_j n theta^{n-1} (-1)^j C(n alpha - 1, j) (j+1)^{-(k/g+1)} ,
/// outer index n (geometric weight), inner index j folded through
/// weibull_series_kernel. For integer n*alpha the inner sum is finite with
/// upper index n*alpha - 1.
MomentResult raw_moment_series(const EwgParams& p, int k, const SeriesControl& ctrl = {});

/// E(Y^k) by adaptive quadrature of y^k f(y) over (0, inf), carried out in
/// log-y space so the integrable y^{g a - 1} endpoint singularity (g a < 1)
/// disappears. Relative error target 1e-8 or better.
MomentResult raw_moment_quadrature(const EwgParams& p, int k);

/// Default-engine mean (quadrature; the series is the cross-check engine).
double mean(const EwgParams& p, const SeriesControl& ctrl = {});

/// E(Y^2) - E(Y)^2, clamped at zero against roundoff.
double variance(const EwgParams& p, const SeriesControl& ctrl = {});

/// Moment generating function via the power series sum_i t^i E(Y^i) / i!.
/// Requires gamma_shape >= 1 for t > 0 (the Weibull tail is heavier than
/// exponential otherwise and the MGF does not exist); mgf(p, 0) = 1 exactly.
/// Throws DivergenceError if the terms are detected to grow.
double mgf(const EwgParams& p, double t, const SeriesControl& ctrl = {});

/// Expectation of an arbitrary weight: integral of g(y) f(y) dy over
/// (y_lo, inf), evaluated in log-space with quantile-derived breakpoints.
/// Shared by the quadrature engines of moments, entropy and residual life.
QuadratureResult density_expectation(const EwgParams& p,
                                     const std::function<double(double)>& g,
                                     double y_lo = 0.0,
                                     const QuadratureOptions& opts = {});

} // namespace ewg

#endif
