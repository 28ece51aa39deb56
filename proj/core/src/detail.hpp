#ifndef EWG_SRC_DETAIL_HPP
#define EWG_SRC_DETAIL_HPP

// Internal helpers shared between the translation units of the core library.
// Not installed.

#include <cmath>
#include <functional>

#include "ewg/distribution.hpp"
#include "ewg/quadrature.hpp"

namespace ewg::detail {

inline double exp_or_zero(double a) { return a < -745.0 ? 0.0 : std::exp(a); }

/// log(1 - e^{-u}) for u > 0 without cancellation on either side of ln 2.
inline double log1mexp(double u) {
    return u > 0.6931471805599453 ? std::log1p(-std::exp(-u)) : std::log(-std::expm1(-u));
}

/// Shared per-point pieces of the EWG closed forms, all cancellation-safe:
/// u = (beta y)^gamma, log_e = log(1-e^{-u}), one_minus_ea = 1 - E^alpha,
/// denom = 1 - theta E^alpha.
struct DistKernel {
    double u;
    double log_e;
    double one_minus_ea;
    double denom;
};

DistKernel eval_dist_kernel(const EwgParams& p, double y);

/// Adaptive integral of a density-weighted function over (y_lo, inf) carried
/// out in x = log y space, with breakpoints laid at the distribution's
/// quantiles. The integrand callback receives (y, log f(y)) and must return
/// the x-space value, i.e. the y-space integrand already multiplied by the
/// Jacobian y. Working in log space removes the integrable y^{g a - 1}
/// endpoint singularity that appears for g a < 1.
QuadratureResult logspace_density_integral(
    const EwgParams& p, const std::function<double(double, double)>& integrand, double y_lo,
    const QuadratureOptions& opts);

} // namespace ewg::detail

#endif
