#include "k72/cases.hpp"
#include "k72/chow.hpp"
#include "k72/runner.hpp"
#include "k72/wps.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SublemmaScanF2(benchmark::State& state) {
  const k72::SurfaceLattice f2 = k72::SurfaceLattice::hirzebruch(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k72::sublemma54(f2));
  }
}
BENCHMARK(BM_SublemmaScanF2);

void BM_FeClaimsGrid(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(k72::surface_base_fe_claims(36));
  }
}
BENCHMARK(BM_FeClaimsGrid);

void BM_WpsSectionCount(benchmark::State& state) {
  const k72::WpsModel w{{6, 4, 1, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(k72::wps_h0(w, 48));
  }
}
BENCHMARK(BM_WpsSectionCount);

void BM_ChowCube(benchmark::State& state) {
  const k72::SurfaceLattice f2 = k72::SurfaceLattice::hirzebruch(2);
  k72::ChernData e;
  e.rank = 2;
  e.c1 = k72::DivClass(k72::Rat(-1), k72::Rat(-1));
  e.c2 = 5;
  const k72::PBundleOverSurface m(f2, e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k72::mixed_product_surfacebase(m, m.antican().pow(3)));
  }
}
BENCHMARK(BM_ChowCube);

void BM_FullSuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(k72::run("all"));
  }
}
BENCHMARK(BM_FullSuite);

}  // namespace

BENCHMARK_MAIN();
