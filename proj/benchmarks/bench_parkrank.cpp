#include <benchmark/benchmark.h>

#include <vector>

#include "parkrank/bijection.hpp"
#include "parkrank/enumerate.hpp"
#include "parkrank/numbers.hpp"
#include "parkrank/parking.hpp"

namespace {

using parkrank::BigCount;
using parkrank::FamilySpec;
using parkrank::PrefTuple;

void BM_ParkClassic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> prefs(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) prefs[static_cast<std::size_t>(i)] = i / 2 + 1;
  const PrefTuple t(prefs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parkrank::park_classic(t));
  }
}
BENCHMARK(BM_ParkClassic)->Arg(16)->Arg(64)->Arg(256);

void BM_CountUpf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parkrank::count_family(n, FamilySpec::upf()));
  }
}
BENCHMARK(BM_CountUpf)->Arg(6)->Arg(7)->Arg(8);

void BM_CountUpfParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parkrank::count_family(8, FamilySpec::upf(), threads));
  }
}
BENCHMARK(BM_CountUpfParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_CountIntersection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parkrank::count_family(n, FamilySpec::fr_and_upf()));
  }
}
BENCHMARK(BM_CountIntersection)->Arg(6)->Arg(7);

void BM_FubiniDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parkrank::fubini_direct(n));
  }
}
BENCHMARK(BM_FubiniDirect)->Arg(8)->Arg(16)->Arg(32);

void BM_FubiniByCompositions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parkrank::fubini_by_compositions(n));
  }
}
BENCHMARK(BM_FubiniByCompositions)->Arg(8)->Arg(12)->Arg(16);

void BM_RFubiniTable(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigCount sum = 0;
    for (int m = 1; m <= size; ++m) {
      for (int r = 1; r <= m; ++r) {
        sum += parkrank::r_fubini(m - r, r);
      }
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_RFubiniTable)->Arg(8)->Arg(12);

void BM_BijectionRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rankings = parkrank::family_members(n, FamilySpec::fr());
  for (auto _ : state) {
    for (const auto& ranking : rankings) {
      benchmark::DoNotOptimize(
          parkrank::upf_to_ranking(parkrank::ranking_to_upf(ranking)));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(rankings.size()));
}
BENCHMARK(BM_BijectionRoundTrip)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
