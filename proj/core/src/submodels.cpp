#include "ewg/submodels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ewg/errors.hpp"
#include "ewg/moments.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

std::string to_string(SubmodelKind k) {
    switch (k) {
        case SubmodelKind::cwg: return "cwg";
        case SubmodelKind::geg: return "geg";
        case SubmodelKind::ceg: return "ceg";
        case SubmodelKind::erg: return "erg";
        case SubmodelKind::rg: return "rg";
        case SubmodelKind::ew: return "ew";
        case SubmodelKind::full: return "full";
    }
    return "full";
}

SubmodelKind parse_submodel_kind(const std::string& name) {
    if (name == "cwg") return SubmodelKind::cwg;
    if (name == "geg") return SubmodelKind::geg;
    if (name == "ceg") return SubmodelKind::ceg;
    if (name == "erg") return SubmodelKind::erg;
    if (name == "rg") return SubmodelKind::rg;
    if (name == "ew") return SubmodelKind::ew;
    if (name == "full") return SubmodelKind::full;
    throw std::invalid_argument("unknown sub-model kind: " + name);
}

namespace {

struct Pins {
    std::optional<double> alpha;
    std::optional<double> gamma_shape;
    std::optional<double> theta;
};

Pins pins_for(SubmodelKind kind) {
    switch (kind) {
        case SubmodelKind::cwg: return {1.0, std::nullopt, std::nullopt};
        case SubmodelKind::geg: return {std::nullopt, 1.0, std::nullopt};
        case SubmodelKind::ceg: return {1.0, 1.0, std::nullopt};
        case SubmodelKind::erg: return {std::nullopt, 2.0, std::nullopt};
        case SubmodelKind::rg: return {1.0, 2.0, std::nullopt};
        case SubmodelKind::ew: return {std::nullopt, std::nullopt, 0.0};
        case SubmodelKind::full: return {};
    }
    return {};
}

[[noreturn]] void reject(SubmodelKind kind, const char* what) {
    std::ostringstream msg;
    msg << "make_submodel(" << to_string(kind) << "): " << what;
    throw std::invalid_argument(msg.str());
}

} // namespace

EwgParams make_submodel(SubmodelKind kind, const FreeParams& free) {
    const Pins pins = pins_for(kind);
    if (pins.alpha && free.alpha) reject(kind, "alpha is pinned by the restriction");
    if (pins.gamma_shape && free.gamma_shape) reject(kind, "gamma is pinned by the restriction");
    if (pins.theta && free.theta) reject(kind, "theta is pinned by the restriction");
    if (!pins.alpha && !free.alpha) reject(kind, "alpha must be supplied");
    if (!free.beta) reject(kind, "beta must be supplied");
    if (!pins.gamma_shape && !free.gamma_shape) reject(kind, "gamma must be supplied");
    if (!pins.theta && !free.theta) reject(kind, "theta must be supplied");
    return EwgParams(pins.alpha ? *pins.alpha : *free.alpha, *free.beta,
                     pins.gamma_shape ? *pins.gamma_shape : *free.gamma_shape,
                     pins.theta ? *pins.theta : *free.theta);
}

std::array<bool, 4> free_mask(SubmodelKind kind) {
    const Pins pins = pins_for(kind);
    return {!pins.alpha.has_value(), true, !pins.gamma_shape.has_value(),
            !pins.theta.has_value()};
}

int free_param_count(SubmodelKind kind) {
    const auto mask = free_mask(kind);
    int n = 0;
    for (bool b : mask) n += b ? 1 : 0;
    return n;
}

bool params_match_kind(SubmodelKind kind, const EwgParams& p) {
    const Pins pins = pins_for(kind);
    if (pins.alpha && p.alpha != *pins.alpha) return false;
    if (pins.gamma_shape && p.gamma_shape != *pins.gamma_shape) return false;
    if (pins.theta && p.theta != *pins.theta) return false;
    return true;
}

namespace {

void require_kind(SubmodelKind kind, const EwgParams& p, const char* who) {
    if (!params_match_kind(kind, p)) {
        std::ostringstream msg;
        msg << who << ": parameters do not satisfy the " << to_string(kind) << " restriction";
        throw std::invalid_argument(msg.str());
    }
}

// Exponent of the (j+1) power in a sub-model's own moment series. For ERG
// and RG the decay exponents k/2 + 1 follow from fixing gamma = 2 in the
// general series (a negated exponent would make the sums diverge).
double series_exponent(SubmodelKind kind, const EwgParams& p, int k) {
    switch (kind) {
        case SubmodelKind::geg:
        case SubmodelKind::ceg: return k + 1.0;
        case SubmodelKind::erg:
        case SubmodelKind::rg: return k / 2.0 + 1.0;
        default: return static_cast<double>(k) / p.gamma_shape + 1.0;
    }
}

// Common shape of the sub-model series: (1-theta) alpha beta^{-k} sum_n n theta^{n-1}
// [sum_j (-1)^j C(n alpha - 1, j) (j+1)^{-s} Gamma(s)], the inner sum folded
// through weibull_series_kernel.
double restricted_moment_sum(SubmodelKind kind, const EwgParams& p, int k,
                              const SeriesControl& ctrl) {
    const double s = series_exponent(kind, p, k);
    const double prefactor = (1.0 - p.theta) * p.alpha * std::pow(p.beta, -k);
    SeriesAccumulator acc(ctrl);
    double weight = 1.0;
    for (long n = 1; acc.want_more(); ++n) {
        const double inner =
            weibull_series_kernel(static_cast<double>(n) * p.alpha - 1.0, s, 1.0, 0.0, ctrl);
        acc.add(prefactor * static_cast<double>(n) * weight * inner);
        if (p.theta == 0.0) break;
        weight *= p.theta;
    }
    if (p.theta != 0.0 && !acc.converged())
        throw SeriesTruncationError("submodel series hit max_terms", acc.sum(),
                                    acc.terms());
    return acc.sum();
}

void check_agreement(double own, double general, const char* who) {
    const double scale = std::max({std::abs(own), std::abs(general), 1e-30});
    if (std::abs(own - general) > 1e-4 * scale) {
        std::ostringstream msg;
        msg << who << ": sub-model series " << own << " disagrees with general engine "
            << general << " beyond rel 1e-4";
        throw InternalConsistencyError(msg.str());
    }
}

} // namespace

double submodel_series_mean(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl) {
    require_kind(kind, p, "submodel_series_mean");
    return restricted_moment_sum(kind, p, 1, ctrl);
}

double submodel_series_variance(SubmodelKind kind, const EwgParams& p,
                                 const SeriesControl& ctrl) {
    require_kind(kind, p, "submodel_series_variance");
    const double m1 = restricted_moment_sum(kind, p, 1, ctrl);
    return restricted_moment_sum(kind, p, 2, ctrl) - m1 * m1;
}

double submodel_mean(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl) {
    require_kind(kind, p, "submodel_mean");
    const double general = mean(p, ctrl);
    check_agreement(submodel_series_mean(kind, p, ctrl), general, "submodel_mean");
    return general;
}

double submodel_variance(SubmodelKind kind, const EwgParams& p, const SeriesControl& ctrl) {
    require_kind(kind, p, "submodel_variance");
    const double general = variance(p, ctrl);
    check_agreement(submodel_series_variance(kind, p, ctrl), general, "submodel_variance");
    return general;
}

namespace submodel_series {

double general_moment_term(const EwgParams& p, int k, long n, long j) {
    const double s = static_cast<double>(k) / p.gamma_shape + 1.0;
    return (1.0 - p.theta) * p.alpha * std::pow(p.beta, -k) * std::exp(ln_gamma(s)) *
           static_cast<double>(n) * std::pow(p.theta, static_cast<double>(n - 1)) *
           (j % 2 == 0 ? 1.0 : -1.0) *
           generalized_binomial(static_cast<double>(n) * p.alpha - 1.0, j) *
           std::pow(static_cast<double>(j + 1), -s);
}

double restricted_moment_term(SubmodelKind kind, const EwgParams& p, int k, long n, long j) {
    const double s = series_exponent(kind, p, k);
    return (1.0 - p.theta) * p.alpha * std::pow(p.beta, -k) * std::exp(ln_gamma(s)) *
           static_cast<double>(n) * std::pow(p.theta, static_cast<double>(n - 1)) *
           (j % 2 == 0 ? 1.0 : -1.0) *
           generalized_binomial(static_cast<double>(n) * p.alpha - 1.0, j) *
           std::pow(static_cast<double>(j + 1), -s);
}

} // namespace submodel_series

} // namespace ewg
