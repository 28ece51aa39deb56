#ifndef EWG_DISTRIBUTION_HPP
#define EWG_DISTRIBUTION_HPP

#include <string>

#include "ewg/series.hpp"

namespace ewg {

/// Parameter vector of the exponentiated Weibull-geometric distribution:
/// the law of max(X_1, ..., X_N) where X_i ~ EW(alpha, beta, gamma_shape)
/// i.i.d. and N is geometric with success probability 1 - theta.
///
/// alpha, beta, gamma_shape > 0 and 0 <= theta < 1. beta has units 1/time.
struct EwgParams {
    double alpha;
    double beta;
    double gamma_shape;
    double theta;

    EwgParams(double alpha_, double beta_, double gamma_shape_, double theta_);
};

// --- exponentiated Weibull building blocks (theta = 0 kernel) ---

double ew_log_pdf(double alpha, double beta, double gamma_shape, double y);
double ew_pdf(double alpha, double beta, double gamma_shape, double y);
double ew_cdf(double alpha, double beta, double gamma_shape, double y);
double ew_quantile(double alpha, double beta, double gamma_shape, double prob);

// --- EWG kernel ---

/// log f(y). Returns -inf where the density vanishes and +inf at the y = 0
/// singularity arising when gamma_shape * alpha < 1.
double log_pdf(const EwgParams& p, double y);

/// f(y) = (1-theta) a g b^g y^{g-1} e^{-(by)^g} (1-e^{-(by)^g})^{a-1}
///        / [1 - theta (1-e^{-(by)^g})^a]^2, y >= 0.
/// At y = 0 the analytic limit is returned: 0 when g*a > 1, (1-theta)*beta
/// when g*a == 1, +inf when g*a < 1.
double pdf(const EwgParams& p, double y);

/// F(y) = (1-theta) (1-e^{-(by)^g})^a / [1 - theta (1-e^{-(by)^g})^a].
double cdf(const EwgParams& p, double y);

/// S(y) = [1 - (1-e^{-(by)^g})^a] / [1 - theta (1-e^{-(by)^g})^a] = 1 - F(y),
/// evaluated in a cancellation-safe shared form.
double survival(const EwgParams& p, double y);

double log_survival(const EwgParams& p, double y);

/// h(y) = f(y) / S(y). Finite wherever S > 0; at y = 0 follows the pdf limit.
double hazard(const EwgParams& p, double y);

/// Closed-form quantile: beta^{-1} [-log(1 - (p/(1-theta(1-p)))^{1/alpha})]^{1/gamma}.
double quantile(const EwgParams& p, double prob);

double median(const EwgParams& p);

/// Density via the infinite EW mixture
///   f(y) = (1-theta) sum_{j>=0} theta^j f_EW(y; alpha(j+1), beta, gamma),
/// truncated under ctrl. Cross-check route for the closed-form pdf.
double mixture_pdf(const EwgParams& p, double y, const SeriesControl& ctrl = {});

// --- hazard shape classification ---

enum class HazardShape { increasing, decreasing, bathtub, unimodal, other };

std::string to_string(HazardShape s);

/// Classifies the hazard curve on a 2048-point log-spaced grid over
/// [quantile(1e-4), quantile(1-1e-4)] from the signs of successive
/// differences (relative dead-band 1e-9).
HazardShape classify_hazard_shape(const EwgParams& p);

} // namespace ewg

#endif
