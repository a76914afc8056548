// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "llab/certify.hpp"
#include "llab/freeknot.hpp"
#include "llab/nterm.hpp"
#include "llab/quantize.hpp"

using namespace llab;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

StepFn random_cells(int g, double p) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> c(std::size_t{1} << g);
  for (auto& v : c) v = u(rng);
  return StepFn(g, c, p);
}

void BM_HaarReference(benchmark::State& s) {
  const StepFn f = random_cells(12, 2.0);
  for (auto _ : s) benchmark::DoNotOptimize(nterm::haar_coefficients_reference(f, 2.0));
}

void BM_HaarPyramid(benchmark::State& s) {
  const StepFn f = random_cells(16, 2.0);
  for (auto _ : s) benchmark::DoNotOptimize(nterm::haar_coefficients(f, 2.0, exec_of(s)));
}

void BM_FitDp(benchmark::State& s) {
  const StepFn f = random_cells(10, kInfExponent);
  for (auto _ : s) benchmark::DoNotOptimize(freeknot::best_pc_sup_dp(f, 16, exec_of(s)));
}

void BM_FitSearch(benchmark::State& s) {
  const StepFn f = freeknot::sin_step(freeknot::witness_frequency(4), 16);
  for (auto _ : s) benchmark::DoNotOptimize(freeknot::best_pc_sup(f, 19, exec_of(s)));
}

void BM_CollapseProfile(benchmark::State& s) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  RealSeq x{std::vector<double>(512), NormTag::Sup};
  for (auto& v : x.values) v = u(rng);
  for (auto _ : s) benchmark::DoNotOptimize(quantize::collapse_profile(x, 64, exec_of(s)));
}

void BM_SampledGap(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(certify::sampled_gap(32, 10000, 3, exec_of(s)));
}

}  // namespace

BENCHMARK(BM_HaarReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarPyramid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitDp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollapseProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledGap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
