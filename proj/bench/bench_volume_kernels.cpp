// Serial vs OpenMP block-power kernels on the sphere-volume DP.

#include <benchmark/benchmark.h>

#include "sumrank/volume_kernels.hpp"
#include "sumrank/volumes.hpp"

namespace {

using sumrank::CodeParams;

const CodeParams kCases[] = {
    CodeParams::make(2, 16, 8, 256),  // n = 2048
    CodeParams::make(16, 12, 12, 12),
    CodeParams::make(3, 4, 4, 64),
};

template <bool Parallel>
void BM_block_power(benchmark::State& state) {
  const auto& p = kCases[state.range(0)];
  const auto block = sumrank::block_rank_counts(p);
  for (auto _ : state) {
    auto out = Parallel ? sumrank::kernels::block_power_parallel(block, p.ell, p.max_weight())
                        : sumrank::kernels::block_power_serial(block, p.ell, p.max_weight());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(p.to_string());
}

BENCHMARK(BM_block_power<false>)->Name("block_power/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_block_power<true>)->Name("block_power/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
