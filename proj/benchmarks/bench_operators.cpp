#include <benchmark/benchmark.h>

#include "rlfrac/corpus.hpp"
#include "rlfrac/decomposition.hpp"
#include "rlfrac/fourier.hpp"
#include "rlfrac/operators.hpp"

using namespace rlfrac;

namespace {

SampledSignal gaussian_on(std::size_t n) { return sample(Gaussian{0.0, 1.0}, UniformGrid::periodic(-20.0, 20.0, n)); }

void BM_DftForward(benchmark::State& state) {
  const auto a = gaussian_on(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft_forward(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftForward)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_ApplySpectral(benchmark::State& state) {
  const auto a = gaussian_on(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_spectral(a, FracOrder(0.5), OperatorSide::Left));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplySpectral)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

// direct weighted sum, quadratic in n
void BM_ApplyGrunwald(benchmark::State& state) {
  const auto a = gaussian_on(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_grunwald(a, FracOrder(0.5), OperatorSide::Left));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyGrunwald)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_Decompose(benchmark::State& state) {
  const auto f = sample(GaussianDerivative{0.0, 1.0}, UniformGrid::periodic(-20.0, 20.0, static_cast<std::size_t>(state.range(0))));
  const VariantSpec v(0.25, VariantKind::OneSided);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

}  // namespace
BENCHMARK_MAIN();
