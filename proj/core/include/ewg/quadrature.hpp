#ifndef EWG_QUADRATURE_HPP
#define EWG_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace ewg {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;     // absolute floor; 0 means purely relative
    int max_intervals = 4000; // adaptive subdivision cap
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 15(7) on [a, b]. Splits the interval with
/// the largest local error estimate until the summed estimate meets
/// max(abs_tol, rel_tol * |integral|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Same, seeded with user breakpoints (strictly increasing).
QuadratureResult integrate(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts = {});

/// Integrates f over [a, inf) by adaptive panels of geometrically growing
/// width, stopping once two consecutive panels contribute below tolerance.
/// Throws DivergenceError if panel contributions keep growing.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opts = {});

} // namespace ewg

#endif
