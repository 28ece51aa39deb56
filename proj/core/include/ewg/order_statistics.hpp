#ifndef EWG_ORDER_STATISTICS_HPP
#define EWG_ORDER_STATISTICS_HPP

#include "ewg/distribution.hpp"
#include "ewg/moments.hpp"
#include "ewg/series.hpp"

namespace ewg {

/// Rank r within a sample of size n, 1 <= r <= n.
struct OrderStatSpec {
    int n;
    int r;

    OrderStatSpec(int n_, int r_);
};

/// Density of Y_{r:n} via the closed form
///   [alpha g b^g (1-theta)^r / B(r, n-r+1)] y^{g-1} e^{-(by)^g}
///     (1-e^{-(by)^g})^{alpha r - 1} [1-(1-e^{-(by)^g})^alpha]^{n-r}
///     / [1 - theta (1-e^{-(by)^g})^alpha]^{n+1}.
double order_stat_pdf(const EwgParams& p, const OrderStatSpec& s, double y);

/// Distribution of Y_{r:n}: sum_{k=r}^{n} C(n,k) F^k (1-F)^{n-k}.
double order_stat_cdf(const EwgParams& p, const OrderStatSpec& s, double y);

/// E(Y_{r:n}^k) by the triple series
///   [alpha beta^{-k} (1-theta)^r / B(r, n-r+1)]
///     sum_i sum_{j=0}^{n-r} sum_s (-1)^{j+s} theta^i C(n+i,i) C(n-r,j)
///       C(alpha(i+j+r)-1, s) Gamma(k/g+1)/(s+1)^{k/g+1} ,
/// with the s-index folded through weibull_series_kernel and the i-index
/// truncated once theta^i C(n+i, i) falls below tolerance.
MomentResult order_stat_moment(const EwgParams& p, const OrderStatSpec& s, int k,
                               const SeriesControl& ctrl = {});

/// E(Y_{r:n}^k) by quadrature of y^k order_stat_pdf. Default engine.
MomentResult order_stat_moment_quadrature(const EwgParams& p, const OrderStatSpec& s, int k);

} // namespace ewg

#endif
