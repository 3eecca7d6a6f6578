#include <benchmark/benchmark.h>

#include "pqc/channel.hpp"
#include "pqc/design.hpp"
#include "pqc/security.hpp"
#include "pqc/su2.hpp"

namespace {

void BM_HaarMoment(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const pqc::HaarQuadrature quad(k);
  for (auto _ : state) benchmark::DoNotOptimize(pqc::haarMoment(k, quad));
}
BENCHMARK(BM_HaarMoment)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FramePotential(benchmark::State& state) {
  const auto e = pqc::clifford12Ensemble();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::framePotential(e, k));
}
BENCHMARK(BM_FramePotential)->DenseRange(1, 4);

void BM_IsKDesign(benchmark::State& state) {
  const auto e = pqc::clifford12Ensemble();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::isKDesign(e, k));
}
BENCHMARK(BM_IsKDesign)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ChoiBlock(benchmark::State& state) {
  const auto e = pqc::clifford12Ensemble();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::choiBlock(e, n, n));
}
BENCHMARK(BM_ChoiBlock)->DenseRange(1, 6);

void BM_FullChoi(benchmark::State& state) {
  const auto e = pqc::clifford12Ensemble();
  const pqc::SectorStructure s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::fullChoi(e, s));
}
BENCHMARK(BM_FullChoi)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_SecurityReport(benchmark::State& state) {
  const pqc::Encryption enc{pqc::clifford12Ensemble()};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pqc::securityReport(enc, n));
}
BENCHMARK(BM_SecurityReport)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
