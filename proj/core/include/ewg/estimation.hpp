#ifndef EWG_ESTIMATION_HPP
#define EWG_ESTIMATION_HPP

#include <array>
#include <vector>

#include "ewg/distribution.hpp"
#include "ewg/submodels.hpp"

namespace ewg {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Complete lifetime sample. Every value must be strictly positive and
/// finite; fewer than 5 observations (parameter count + 1) is rejected.
struct DataSample {
    std::vector<double> values;

    explicit DataSample(std::vector<double> v);
    std::size_t n() const noexcept { return values.size(); }
};

struct Interval {
    double lower;
    double upper;
};

struct FitOptions {
    SubmodelKind kind = SubmodelKind::full;
    double level = 0.95;       // confidence level for the reported intervals
    int max_iterations = 500;  // per multistart
    double score_tol = 1e-6;   // converged when |U|_inf <= score_tol * max(1, |l|/n)
};

struct FitResult {
    EwgParams params{1.0, 1.0, 1.0, 0.0}; // the MLE
    SubmodelKind kind = SubmodelKind::full;
    double loglik = 0.0;
    double score_inf_norm = 0.0; // over free coordinates, original scale
    Mat4 observed_info{};        // I_n(theta-hat), full 4x4
    Vec4 std_errors{};           // 0 for pinned coordinates
    std::array<Interval, 4> ci{};
    double level = 0.95;
    bool converged = false;
    bool at_boundary = false;  // theta-hat pinned against its logit bounds
    bool ci_available = false; // false when the free information block is not PD
    int iterations = 0;
    int multistart_index = 0;
};

/// Total log-likelihood, accumulated through the same log-density kernel as
/// pdf so that log_likelihood == sum of log pdf(y_i) holds exactly.
double log_likelihood(const EwgParams& p, const DataSample& d);

/// Analytic score (dl/dalpha, dl/dbeta, dl/dgamma, dl/dtheta).
Vec4 score(const EwgParams& p, const DataSample& d);

/// Observed information I_n = -dU/dTheta by central differences of the
/// analytic score, step h_r = eps^{1/3} (1+|Theta_r|), symmetrized as
/// (H + H^T)/2.
Mat4 observed_information(const EwgParams& p, const DataSample& d);

/// Maximum-likelihood fit by quasi-Newton ascent on the unconstrained scale
/// (log alpha, log beta, log gamma, logit theta) with the analytic score
/// chain-ruled through the transform, followed by a damped Newton polish on
/// the score equations. Five deterministic multistarts (Weibull probability
/// -plot initializer plus four log-scale perturbations); the best converged
/// start wins, ties broken by multistart index.
FitResult fit_mle(const DataSample& d, const FitOptions& opts = {});

/// Per-parameter Wald intervals theta_r +/- z sqrt(I^{rr}) at the given
/// level, clipped to the parameter domain. Requires a converged fit with
/// positive-definite free information block.
std::array<Interval, 4> confidence_intervals(const FitResult& f, double level);

} // namespace ewg

#endif
