#ifndef EWG_SUBMODELS_HPP
#define EWG_SUBMODELS_HPP

#include <array>
#include <optional>
#include <string>

#include "ewg/distribution.hpp"
#include "ewg/series.hpp"

namespace ewg {

/// Named parameter restrictions of the EWG family:
///   CWG: alpha = 1          GEG: gamma = 1        CEG: alpha = gamma = 1
///   ERG: gamma = 2          RG:  alpha = 1, gamma = 2
///   EW:  theta = 0          FULL: no restriction
enum class SubmodelKind { cwg, geg, ceg, erg, rg, ew, full };

std::string to_string(SubmodelKind k);
SubmodelKind parse_submodel_kind(const std::string& name);

/// Free parameters for a restriction; coordinates pinned by the kind must be
/// left empty, the remaining ones must be supplied.
struct FreeParams {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma_shape;
    std::optional<double> theta;
};

/// Builds the full parameter vector with the restriction's coordinates
/// pinned. Supplying a pinned coordinate (or omitting a free one) is
/// rejected with std::invalid_argument.
EwgParams make_submodel(SubmodelKind kind, const FreeParams& free);

/// Which of (alpha, beta, gamma, theta) are free under the restriction.
std::array<bool, 4> free_mask(SubmodelKind kind);

/// Number of free parameters (AIC bookkeeping).
int free_param_count(SubmodelKind kind);

/// True when the parameter vector satisfies the restriction's pins.
bool params_match_kind(SubmodelKind kind, const EwgParams& p);

/// Mean via the sub-model's own moment series, cross-checked against the
/// general engine on the restricted parameters; disagreement beyond rel 1e-4
/// raises InternalConsistencyError. Returns the general-engine value.
double submodel_mean(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl = {});

/// Same with the k = 2 machinery: Var = E(Y^2) - E(Y)^2.
double submodel_variance(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl = {});

/// The sub-model moment series evaluated on their own (cross-check engines;
/// the ERG/RG decay powers (j+1)^{-3/2} and (j+1)^{-2} come from fixing
/// gamma = 2 in the general series).
double submodel_series_mean(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl = {});
double submodel_series_variance(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl = {});

namespace submodel_series {

/// Single (n, j) term of the general raw-moment series for E(Y^k):
/// (1-theta) alpha beta^{-k} Gamma(k/g+1) n theta^{n-1} (-1)^j
/// C(n alpha - 1, j) (j+1)^{-(k/g+1)}.
double general_moment_term(const EwgParams& p, int k, long n, long j);

/// Single (n, j) term of a sub-model's own mean/variance series
/// (k = 1 mean, k = 2 second-moment sum).
double restricted_moment_term(SubmodelKind kind, const EwgParams& p, int k, long n, long j);

} // namespace submodel_series

} // namespace ewg

#endif
