#ifndef EWG_ENTROPY_HPP
#define EWG_ENTROPY_HPP

#include <string>

#include "ewg/distribution.hpp"
#include "ewg/series.hpp"

namespace ewg {

enum class EntropyMethod { closed_series, quadrature, limit };

std::string to_string(EntropyMethod m);

struct EntropyResult {
    double value = 0.0; // nats
    EntropyMethod method = EntropyMethod::closed_series;
    long terms_used = 0;
};

/// Renyi entropy I_R(r) = log(integral of f^r) / (1-r), r > 0, r != 1, by the
/// closed double series
///   [alpha(1-theta)]^r (beta gamma)^{r-1}
///     sum_j sum_k (-1)^k C(alpha(j+r)-r, k) [Gamma(2r+j)/(Gamma(2r) j!)]
///       Gamma(r-(r-1)/gamma) / (k+r)^{r-(r-1)/gamma} theta^j .
/// Requires r - (r-1)/gamma > 0 (the series' gamma argument), else a domain
/// error naming the offending (gamma, r) pair.
EntropyResult renyi_entropy(const EwgParams& p, double r, const SeriesControl& ctrl = {});

/// Renyi entropy by direct quadrature of f^r; works whenever the integral is
/// finite, including gamma arguments the series cannot represent. Throws
/// DivergenceError when the integral is infinite.
EntropyResult renyi_entropy_quadrature(const EwgParams& p, double r);

/// Shannon entropy E[-log f(Y)] by quadrature of -f log f.
EntropyResult shannon_entropy(const EwgParams& p, const SeriesControl& ctrl = {});

/// Shannon entropy as the numerical r -> 1 limit of I_R(r): the average of
/// the quadrature Renyi entropy at r = 1 +/- h. Consistency-check route.
EntropyResult shannon_entropy_via_limit(const EwgParams& p, double h = 1e-4);

} // namespace ewg

#endif
