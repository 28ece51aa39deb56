#ifndef EWG_SPECIAL_FUNCTIONS_HPP
#define EWG_SPECIAL_FUNCTIONS_HPP

#include "ewg/series.hpp"

namespace ewg {

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// Upper incomplete gamma integral over [t, inf) of x^{s-1} e^{-x},
/// s > 0, t >= 0. Series expansion for t < s+1, continued fraction otherwise.
double upper_incomplete_gamma(double s, double t);

/// Lower incomplete gamma integral over [0, t]; complement of the above.
double lower_incomplete_gamma(double s, double t);

/// Regularized upper gamma Q(s, t) = upper_incomplete_gamma(s, t) / Gamma(s).
double regularized_upper_gamma(double s, double t);

/// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j! for real a,
/// integer j >= 0, by multiplicative recurrence. Exactly zero when a is a
/// nonnegative integer and j > a; no gamma-function poles anywhere.
double generalized_binomial(double a, long j);

/// log Beta(a, b) for a, b > 0.
double ln_beta(double a, double b);

/// Standard normal quantile (inverse of Phi), p in (0, 1).
double normal_quantile(double p);

/// Evaluates the tail-weighted alternating binomial sum that underlies every
/// moment-type series in the library:
///
///   sum_{k>=0} (-1)^k C(A, k) (k+rho)^{-S} Gamma_upper((k+rho) w; S)
///     = integral_w^inf  tau^{S-1} e^{-rho tau} (1 - e^{-tau})^A dtau ,
///
/// where Gamma_upper(x; S) is the (unregularized) upper incomplete gamma and
/// the identity follows from (k+rho)^{-S} Gamma_upper((k+rho)w; S) =
/// integral_w^inf tau^{S-1} e^{-(k+rho)tau} dtau plus the binomial theorem.
///
/// Direct summation is used only when A is a small nonnegative integer (the
/// sum is then finite and cancellation stays below ~1e-9 relative). For real
/// or large A the alternating sum is numerically hopeless -- terms grow like
/// C(A, A/2) before collapsing -- so the right-hand integral is evaluated by
/// adaptive quadrature instead. Both routes are equal by the identity above.
///
/// Requires S > 0, rho > 0, w >= 0, and A + S > 0 when w = 0 (the integrand
/// behaves like tau^{A+S-1} at the origin); DivergenceError otherwise.
double weibull_series_kernel(double A, double S, double rho, double w,
                             const SeriesControl& ctrl);

} // namespace ewg

#endif
