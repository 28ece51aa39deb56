#ifndef EWG_SAMPLING_HPP
#define EWG_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ewg/distribution.hpp"

namespace ewg {

enum class SampleMethod { inversion, compound };

SampleMethod parse_sample_method(const std::string& name);
std::string to_string(SampleMethod m);

struct SampleSpec {
    std::size_t size = 1;
    std::uint64_t seed = 0;
    SampleMethod method = SampleMethod::inversion;
};

/// Deterministic uniform stream: mt19937_64 reduced to doubles in the open
/// interval (0,1) via the 53-bit construction ((x >> 11) + 0.5) * 2^-53.
/// Avoids std::uniform_real_distribution, whose output is
/// implementation-defined.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : rng_(seed) {}

    double next_open01() {
        return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::mt19937_64 rng_;
};

/// Draws spec.size variates. Inversion applies the closed-form quantile to
/// uniforms; compound draws N ~ geometric(P(N=n) = (1-theta) theta^{n-1})
/// by inversion, then returns the max of N EW(alpha, beta, gamma) draws.
/// Identical (params, spec) give identical output.
std::vector<double> sample(const EwgParams& p, const SampleSpec& spec);

} // namespace ewg

#endif
