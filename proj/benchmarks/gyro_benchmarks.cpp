#include <benchmark/benchmark.h>

#include "gyro/check_axioms.hpp"
#include "gyro/einstein.hpp"
#include "gyro/finite/constructions.hpp"
#include "gyro/finite/search.hpp"
#include "gyro/finite/subgyrogroups.hpp"
#include "gyro/mobius.hpp"
#include "gyro/sampling.hpp"

namespace {

using gyro::finite::CayleyTable;

CayleyTable cyclic(int n) {
  return CayleyTable::generate(n, [n](int a, int b) { return (a + b) % n; });
}

void BM_MobiusAdd(benchmark::State& state) {
  auto rng = gyro::sample_rng(1, 0);
  const gyro::mobius::MobiusModel m;
  const auto a = m.sample_in_ball(rng, 0.9);
  auto b = m.sample_in_ball(rng, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b = gyro::mobius::mobius_add(a, b, 0.0));
  }
}
BENCHMARK(BM_MobiusAdd);

void BM_EinsteinAdd(benchmark::State& state) {
  const gyro::einstein::Velocity3 u{0.3, 0.2, -0.1};
  const gyro::einstein::Velocity3 v{-0.4, 0.5, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(gyro::einstein::einstein_add(u, v));
}
BENCHMARK(BM_EinsteinAdd);

template <class Model>
void BM_SampledAxioms(benchmark::State& state) {
  const Model m{};
  for (auto _ : state) {
    auto report = gyro::check_axioms(
        m, [&m](std::mt19937_64& rng) { return m.sample_in_ball(rng, 0.95); },
        {static_cast<std::uint64_t>(state.range(0)), 1e-9, 0, 1});
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampledAxioms<gyro::mobius::MobiusModel>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledAxioms<gyro::einstein::EinsteinModel>)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_VerifyCyclic(benchmark::State& state) {
  const CayleyTable t = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::finite::verify_gyrogroup(t));
}
BENCHMARK(BM_VerifyCyclic)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_EnumerateSubgyrogroups(benchmark::State& state) {
  const auto g = gyro::finite::Gyrogroup::from_table(cyclic(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::finite::enumerate_subgyrogroups(g));
}
BENCHMARK(BM_EnumerateSubgyrogroups)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gyro::finite::search_gyrogroups(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Search)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
