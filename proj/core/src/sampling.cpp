#include "ewg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ewg {

SampleMethod parse_sample_method(const std::string& name) {
    if (name == "inversion") return SampleMethod::inversion;
    if (name == "compound") return SampleMethod::compound;
    throw std::invalid_argument("unknown sample method: " + name);
}

std::string to_string(SampleMethod m) {
    return m == SampleMethod::inversion ? "inversion" : "compound";
}

namespace {

constexpr long kGeometricCap = 10000000; // 10^7; unreachable for theta < 1 - 1e-6

// N ~ P(N=n) = (1-theta) theta^{n-1}, n >= 1, by inversion of 1 - theta^n.
long draw_geometric(double theta, UniformSource& rng) {
    if (theta == 0.0) return 1;
    const double u = rng.next_open01();
    const double n = std::ceil(std::log1p(-u) / std::log(theta));
    const long result = n < 1.0 ? 1 : static_cast<long>(n);
    if (result > kGeometricCap)
        throw std::runtime_error("sample: geometric draw exceeded the 1e7 cap");
    return result;
}

} // namespace

std::vector<double> sample(const EwgParams& p, const SampleSpec& spec) {
    if (spec.size < 1) throw std::domain_error("sample: size must be >= 1");
    std::vector<double> out;
    out.reserve(spec.size);
    UniformSource rng(spec.seed);
    if (spec.method == SampleMethod::inversion) {
        for (std::size_t i = 0; i < spec.size; ++i)
            out.push_back(quantile(p, rng.next_open01()));
    } else {
        for (std::size_t i = 0; i < spec.size; ++i) {
            const long n = draw_geometric(p.theta, rng);
            double best = 0.0;
            for (long k = 0; k < n; ++k) {
                const double x = ew_quantile(p.alpha, p.beta, p.gamma_shape, rng.next_open01());
                best = std::max(best, x);
            }
            out.push_back(best);
        }
    }
    return out;
}

} // namespace ewg
