// Serial versus OpenMP grid evaluation of one four-kernel H.

#include <benchmark/benchmark.h>

#include "foxh/construct.hpp"
#include "foxh/mbquad.hpp"

using namespace foxh;

namespace {

FoxHParams sample_params() {
  ConvolutionSpec spec;
  spec.varphi = {Kernel::varphi(Number::parse("0.5"), Number::parse("1.25"))};
  spec.phi = {Kernel::phi(Number::parse("1.5"), Number::parse("0.5"), Number::parse("2.75"))};
  spec.psi = {Kernel::psi(Number(1), Number::parse("0.75"), Number(2))};
  spec.eta = {Kernel::eta(Number::parse("0.8"), Number(1), Number::parse("2.5"))};
  return build_foxh(spec);
}

void BM_GridSerial(benchmark::State& state) {
  const FoxHParams h = sample_params();
  const auto grid = make_grid(1e-2, 1e2, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(eval_h_grid_serial(h, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridOpenMP(benchmark::State& state) {
  const FoxHParams h = sample_params();
  const auto grid = make_grid(1e-2, 1e2, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(eval_h_grid(h, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(25)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridOpenMP)->Arg(25)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
