#ifndef EWG_RESIDUAL_LIFE_HPP
#define EWG_RESIDUAL_LIFE_HPP

#include "ewg/distribution.hpp"
#include "ewg/moments.hpp"
#include "ewg/series.hpp"

namespace ewg {

/// Age t >= 0 and residual moment order r >= 1 for m_r(t) = E[(Y-t)^r | Y>t].
struct ResidualSpec {
    double t;
    int r;

    ResidualSpec(double t_, int r_);
};

/// m_r(t) by the triple series
///   [alpha(1-theta)/S(t)] sum_{i=0}^{r} sum_j sum_k
///     (-1)^{i+k} (j+1) t^i theta^j / ((k+1)^{1+(r-i)/g} beta^{r-i})
///     C(r,i) C(alpha(j+1)-1, k) Gamma_upper((k+1)(beta t)^g; 1+(r-i)/g) ,
/// the k-index folded through weibull_series_kernel. Refuses when S(t)
/// underflows below 1e-280 (conditioning on a vanishing tail).
MomentResult residual_moment(const EwgParams& p, const ResidualSpec& s,
                             const SeriesControl& ctrl = {});

/// m_r(t) by quadrature of (y-t)^r f(y) over (t, inf) divided by S(t).
/// Default engine.
MomentResult residual_moment_quadrature(const EwgParams& p, const ResidualSpec& s);

/// Mean residual life by its dedicated double series
///   [alpha(1-theta)/(beta S(t))] sum_i sum_j (-1)^j C(alpha(i+1)-1, j)
///     theta^i (i+1) (j+1)^{-(1+1/g)} Gamma_upper((j+1)(beta t)^g; 1+1/g) - t.
double mean_residual_life(const EwgParams& p, double t, const SeriesControl& ctrl = {});

/// Var[Y-t | Y>t] = m_2(t) - m_1(t)^2 (default quadrature engine; clamped
/// at zero against roundoff).
double residual_variance(const EwgParams& p, double t, const SeriesControl& ctrl = {});

} // namespace ewg

#endif
