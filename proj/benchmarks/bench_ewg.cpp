#include <benchmark/benchmark.h>

#include "ewg/distribution.hpp"
#include "ewg/estimation.hpp"
#include "ewg/moments.hpp"
#include "ewg/sampling.hpp"

namespace {

const ewg::EwgParams kParams(2.0, 1.0, 1.5, 0.5);

void PdfEval(benchmark::State& state) {
    double y = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ewg::pdf(kParams, y));
        y = y < 5.0 ? y + 1e-4 : 0.01;
    }
}
BENCHMARK(PdfEval);

void QuantileEval(benchmark::State& state) {
    double u = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ewg::quantile(kParams, u));
        u = u < 0.999 ? u + 1e-4 : 1e-4;
    }
}
BENCHMARK(QuantileEval);

void SampleInversion(benchmark::State& state) {
    const std::size_t n = state.range(0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto xs = ewg::sample(kParams, {n, seed++, ewg::SampleMethod::inversion});
        benchmark::DoNotOptimize(xs.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(SampleInversion)->Arg(1 << 12)->Arg(1 << 16);

void MomentSeries(benchmark::State& state) {
    ewg::SeriesControl ctrl;
    for (auto _ : state)
        benchmark::DoNotOptimize(ewg::raw_moment_series(kParams, 2, ctrl).value);
}
BENCHMARK(MomentSeries);

void MomentQuadrature(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ewg::raw_moment_quadrature(kParams, 2).value);
}
BENCHMARK(MomentQuadrature);

void FitSmall(benchmark::State& state) {
    const auto data = ewg::sample(kParams, {1000, 42, ewg::SampleMethod::inversion});
    for (auto _ : state) {
        ewg::DataSample d(data);
        benchmark::DoNotOptimize(ewg::fit_mle(d).loglik);
    }
}
BENCHMARK(FitSmall)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
