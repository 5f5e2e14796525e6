// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ncpart/cumulants.hpp"
#include "ncpart/parallel.hpp"
#include "ncpart/theorem.hpp"

namespace {

using namespace ncpart;

void BM_CountSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial_count(n, PartitionKind::connected));
}

void BM_CountParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel_count(n, PartitionKind::connected));
}

// Weighted sum behind the connected-partition formula for free cumulants.
void BM_WeightedSumSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto kappa = random_classical(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial_sum<Rational>(
        n, PartitionKind::connected, [&](const SetPartition& p) { return block_product(kappa.values, p); }));
  }
}

void BM_WeightedSumParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto kappa = random_classical(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::parallel_sum<Rational>(
        n, PartitionKind::connected, [&](const SetPartition& p) { return block_product(kappa.values, p); }));
  }
}

std::vector<SetPartition> nc_lattice(std::size_t n) { return enumerate(n, PartitionKind::noncrossing); }

void BM_MoebiusColumnSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto members = nc_lattice(n);
  const auto top = SetPartition::coarsest(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial_moebius_to_top(members, top));
}

void BM_MoebiusColumnParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto members = nc_lattice(n);
  const auto top = SetPartition::coarsest(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel_moebius_to_top(members, top));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedSumSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedSumParallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MoebiusColumnSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MoebiusColumnParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
